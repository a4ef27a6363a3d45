"""Exact sparse linear algebra over QQ or F_p.

Vectors are dicts mapping an arbitrary hashable, orderable index to a nonzero
field element, so strand bases (wedge set, monomial) can be used directly
without integer reindexing.  The Eliminator keeps a fully reduced (RREF) row
set with combination tracking: inserting a vector either extends the basis or
returns the dependency, which is how kernels and linear solves fall out.
Reduction against an RREF basis is canonical, so results are deterministic
for a fixed insertion order.
"""
from __future__ import annotations


class Eliminator:
    def __init__(self, field):
        self.field = field
        self.rows = {}  # pivot index -> (row dict, hist dict)
        self.n_inserted = 0

    @property
    def rank(self) -> int:
        return len(self.rows)

    def _axpy(self, dst: dict, c, src: dict):
        # dst += c * src, dropping zeros
        F = self.field
        for k, v in src.items():
            s = F.add(dst.get(k, F.zero), F.mul(c, v))
            if s:
                dst[k] = s
            else:
                dst.pop(k, None)

    def reduce(self, vec: dict, tag=None):
        """Return (residual, hist): residual = vec reduced mod the row space,
        hist expresses residual as tag + combination of previously inserted
        tags (hist maps tag -> coefficient)."""
        F = self.field
        residual = dict(vec)
        hist = {} if tag is None else {tag: F.one}
        while True:
            hit = None
            for p in residual:
                if p in self.rows:
                    if hit is None or p < hit:
                        hit = p
            if hit is None:
                break
            c = residual[hit]
            row, rhist = self.rows[hit]
            self._axpy(residual, F.neg(c), row)
            self._axpy(hist, F.neg(c), rhist)
        return residual, hist

    def insert(self, vec: dict, tag):
        """Insert a vector. Returns None if it extended the basis, else the
        dependency dict (tag -> coefficient, summing to the zero vector)."""
        F = self.field
        residual, hist = self.reduce(vec, tag)
        self.n_inserted += 1
        if not residual:
            return hist
        pivot = min(residual)
        c = F.inv(residual[pivot])
        row = {k: F.mul(c, v) for k, v in residual.items()}
        rhist = {k: F.mul(c, v) for k, v in hist.items()}
        # back-substitute: keep the stored rows fully reduced
        for p, (r, h) in self.rows.items():
            if pivot in r:
                d = F.neg(r[pivot])
                self._axpy(r, d, row)
                self._axpy(h, d, rhist)
        self.rows[pivot] = (row, rhist)
        return None

    def contains(self, vec: dict) -> bool:
        residual, _ = self.reduce(vec)
        return not residual


def rank_of(vectors, field) -> int:
    e = Eliminator(field)
    for i, v in enumerate(vectors):
        e.insert(v, i)
    return e.rank


def kernel_basis(columns, field):
    """Kernel of the map sending basis vector j to columns[j].

    Returns combination dicts {j: coef}; each vector is supported on the
    earliest possible column prefix (free coordinates are zero), which is the
    deterministic choice used everywhere downstream.
    """
    e = Eliminator(field)
    out = []
    for j, col in enumerate(columns):
        dep = e.insert(col, j)
        if dep is not None:
            out.append(dep)
    return out


def solve_columns(columns, tags, b, field):
    """Solve sum_j x_j * columns[j] = b.  Returns {tag: coef} with free
    coordinates zero, or None if inconsistent."""
    e = Eliminator(field)
    for col, tag in zip(columns, tags):
        e.insert(col, ("col", tag))
    residual, hist = e.reduce(b, ("rhs",))
    if residual:
        return None
    out = {}
    for key, c in hist.items():
        if key == ("rhs",):
            continue
        v = field.neg(c)
        if v:
            out[key[1]] = v
    return out


def vec_add(a: dict, b: dict, field) -> dict:
    out = dict(a)
    for k, v in b.items():
        s = field.add(out.get(k, field.zero), v)
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


def vec_scale(a: dict, c, field) -> dict:
    if not c:
        return {}
    return {k: field.mul(v, c) for k, v in a.items()}
