"""Graded Betti tables: dict (homological degree i, internal degree j) to
rank, with the Macaulay-style grid printer (rows indexed by j - i).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .errors import InputError


@dataclass
class BettiTable:
    entries: dict  # (i, j) -> positive int
    multigraded: Optional[dict] = None  # (i, alpha) -> positive int, when known

    def __post_init__(self):
        self.entries = {k: v for k, v in self.entries.items() if v}
        if self.multigraded is not None:
            self.multigraded = {k: v for k, v in self.multigraded.items() if v}

    def get(self, i: int, j: int) -> int:
        return self.entries.get((i, j), 0)

    def total(self, i: int) -> int:
        return sum(v for (ii, _), v in self.entries.items() if ii == i)

    def totals(self):
        return tuple(self.total(i) for i in range(self.proj_dim() + 1))

    def proj_dim(self) -> int:
        return max((i for (i, _) in self.entries), default=0)

    def max_internal(self) -> int:
        return max((j for (_, j) in self.entries), default=0)

    def regularity(self) -> int:
        return max((j - i for (i, j) in self.entries), default=0)

    def entrywise_leq(self, other: "BettiTable"):
        """None if <= everywhere, else the first violating (i, j, a, b)."""
        for (i, j), v in sorted(self.entries.items()):
            w = other.get(i, j)
            if v > w:
                return (i, j, v, w)
        return None

    def __eq__(self, other):
        return isinstance(other, BettiTable) and self.entries == other.entries

    def support(self):
        return sorted(self.entries)

    def grid_str(self) -> str:
        if not self.entries:
            return "empty Betti table"
        imax = self.proj_dim()
        rows = sorted({j - i for (i, j) in self.entries})
        width = max(len(str(v)) for v in self.entries.values())
        width = max(width, len(str(imax)), 5)
        out = []
        header = ["%*s" % (width, i) for i in range(imax + 1)]
        out.append("%6s " % "" + " ".join(header))
        totals = ["%*d" % (width, self.total(i)) for i in range(imax + 1)]
        out.append("%6s " % "total:" + " ".join(totals))
        for r in rows:
            cells = []
            for i in range(imax + 1):
                v = self.entries.get((i, i + r), 0)
                cells.append("%*s" % (width, v if v else "."))
            out.append("%5d: " % r + " ".join(cells))
        return "\n".join(out)


def has_linear_resolution(B: BettiTable, gen_degree: Optional[int] = None) -> bool:
    """True when every syzygy step is linear: beta_{i,j} != 0 forces
    j = i + d - 1 for i >= 1, with d the (single) generator degree."""
    gens = sorted(j for (i, j) in B.entries if i == 1)
    if not gens:
        # zero ideal resolves to nothing past homological degree 0
        return True
    if gen_degree is None:
        gen_degree = gens[0]
    if any(j != gen_degree for j in gens):
        raise InputError("mixed generator degrees: linearity is undefined")
    for (i, j) in B.entries:
        if i >= 1 and j != i + gen_degree - 1:
            return False
    return True
