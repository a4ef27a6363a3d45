"""Term orders: lex, graded reverse lex, weight orders, and the diagonal
order used for minors of a generic matrix.

An order exposes key(mono) -> tuple; bigger key means bigger monomial, and
key comparison is multiplicative because every kind here is realized by a
(sequence of) linear functionals on exponent vectors.

The diagonal order on an n x m matrix of variables is lex with row-major
priority x11 > x12 > ... > x1m > x21 > ...; under it the leading term of
every maximal minor is its main-diagonal product.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import InputError
from .rings import Mono, PolyRing, mono_deg


@dataclass(frozen=True)
class TermOrder:
    kind: str  # "lex" | "grevlex" | "weight" | "diagonal"
    nvars: int
    priority: tuple  # variable indices, most significant first
    wvec: Optional[tuple] = None  # weight kind only
    shape: Optional[tuple] = None  # diagonal kind only, (rows, cols)

    def key(self, m: Mono):
        if self.kind == "lex" or self.kind == "diagonal":
            return tuple(m[i] for i in self.priority)
        if self.kind == "grevlex":
            # degree first; ties: smaller exponent at the least significant
            # position wins, hence negation read in reverse priority
            return (mono_deg(m),) + tuple(-m[i] for i in reversed(self.priority))
        if self.kind == "weight":
            w = sum(self.wvec[i] * e for i, e in enumerate(m))
            return (w,) + tuple(m[i] for i in self.priority)
        raise InputError("unknown order kind %r" % self.kind)

    def compare(self, a: Mono, b: Mono) -> int:
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)

    def leading_mono(self, f) -> Mono:
        if f.is_zero():
            raise InputError("leading term of the zero polynomial")
        return max(f.terms, key=self.key)

    def leading_coeff(self, f):
        return f.terms[self.leading_mono(f)]

    def descriptor(self, ring: PolyRing) -> str:
        chain = ">".join(ring.names[i] for i in self.priority)
        if self.kind in ("lex", "grevlex"):
            return "%s %s" % (self.kind, chain)
        if self.kind == "diagonal":
            return "diagonal %dx%d" % self.shape
        if self.kind == "weight":
            return "weight %s lex %s" % (",".join(str(w) for w in self.wvec), chain)
        raise InputError("unknown order kind %r" % self.kind)

    def representing_weight(self, monos) -> tuple:
        """A positive integer weight vector w with w.a > w.b exactly when
        a > b in this order, for all monomials a != b drawn from `monos`.

        Used to homogenize a Groebner basis so that the t=0 fiber is the
        monomial initial ideal of this order.
        """
        monos = list(monos)
        n = self.nvars
        B = max((e for m in monos for e in m), default=0) + 2
        if self.kind in ("lex", "diagonal"):
            w = [0] * n
            for pos, i in enumerate(self.priority):
                w[i] = B ** (n - pos)
            return tuple(w)
        if self.kind == "grevlex":
            # C*deg - reverse-priority digits; C large enough to dominate
            C = n * B ** (n + 1)
            w = [0] * n
            for pos, i in enumerate(self.priority):
                # least significant priority gets the largest subtracted digit
                w[i] = C - B ** pos
            return tuple(w)
        if self.kind == "weight":
            tb = TermOrder("lex", n, self.priority)
            wt = tb.representing_weight(monos)
            # scale the primary weights past any tiebreak difference
            M = 2 * max((sum(w * e for w, e in zip(wt, m)) for m in monos), default=1) + 1
            return tuple(M * a + b for a, b in zip(self.wvec, wt))
        raise InputError("unknown order kind %r" % self.kind)


def lex(ring: PolyRing, priority=None) -> TermOrder:
    pr = tuple(priority) if priority is not None else tuple(range(ring.nvars))
    _check_priority(ring, pr)
    return TermOrder("lex", ring.nvars, pr)


def grevlex(ring: PolyRing, priority=None) -> TermOrder:
    pr = tuple(priority) if priority is not None else tuple(range(ring.nvars))
    _check_priority(ring, pr)
    return TermOrder("grevlex", ring.nvars, pr)


def weight_order(ring: PolyRing, wvec, tiebreak_priority=None) -> TermOrder:
    w = tuple(wvec)
    if len(w) != ring.nvars:
        raise InputError("weight vector length mismatch")
    if any(x <= 0 for x in w):
        raise InputError("weight entries must be positive")
    pr = tuple(tiebreak_priority) if tiebreak_priority is not None else tuple(range(ring.nvars))
    _check_priority(ring, pr)
    return TermOrder("weight", ring.nvars, pr, wvec=w)


def diagonal_order(ring: PolyRing, rows: int, cols: int) -> TermOrder:
    """Row-major lex on a ring whose variables are matrix entries.

    The ring may omit cells (ladder patterns); priority is the declared
    variable sequence, which the determinantal builders lay out row-major.
    """
    if rows < 1 or cols < 1:
        raise InputError("bad matrix shape")
    return TermOrder("diagonal", ring.nvars, tuple(range(ring.nvars)), shape=(rows, cols))


def _check_priority(ring: PolyRing, pr: tuple):
    if sorted(pr) != list(range(ring.nvars)):
        raise InputError("priority must be a permutation of all variable indices")
