"""Polynomial rings with exact coefficients.

A monomial is a dense exponent tuple, one slot per ring variable.  A
Polynomial maps exponent tuples to nonzero field elements; {} is zero.
Polynomials are immutable by convention: every operation returns a fresh
object and nothing mutates .terms after construction.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from typing import Optional

from .errors import InputError, RingMismatchError
from .fields import QQ, Field

Mono = tuple  # exponent tuple


# monomial helpers

def mono_mul(a: Mono, b: Mono) -> Mono:
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a: Mono, b: Mono) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_div(a: Mono, b: Mono) -> Mono:
    # caller guarantees b | a
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a: Mono, b: Mono) -> Mono:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_gcd(a: Mono, b: Mono) -> Mono:
    return tuple(min(x, y) for x, y in zip(a, b))


def mono_deg(a: Mono) -> int:
    return sum(a)


def mono_is_squarefree(a: Mono) -> bool:
    return all(e <= 1 for e in a)


def mono_support(a: Mono):
    return tuple(i for i, e in enumerate(a) if e)


def monomials_of_degree(n: int, d: int):
    """All exponent tuples in n variables of total degree exactly d."""
    if n == 0:
        if d == 0:
            yield ()
        return
    for first in range(d, -1, -1):
        for rest in monomials_of_degree(n - 1, d - first):
            yield (first,) + rest


@dataclass(frozen=True)
class PolyRing:
    """k[x_1..x_n] with named variables, optional weights and color classes.

    weights default to all-1 (standard grading).  colors, when present,
    partition the variable indices into ordered classes; used by the rainbow
    machinery.
    """

    names: tuple
    field: Field = QQ
    weights: Optional[tuple] = None
    colors: Optional[tuple] = None  # tuple of tuples of variable indices

    def __post_init__(self):
        if len(set(self.names)) != len(self.names):
            raise InputError("duplicate variable names: %r" % (self.names,))
        if self.weights is not None:
            if len(self.weights) != len(self.names):
                raise InputError("weight vector length mismatch")
            if any(w <= 0 for w in self.weights):
                raise InputError("weights must be positive integers")
        if self.colors is not None:
            seen = [i for cls in self.colors for i in cls]
            if sorted(seen) != sorted(set(seen)):
                raise InputError("color classes must be disjoint")

    @property
    def nvars(self) -> int:
        return len(self.names)

    def weight_of(self, m: Mono) -> int:
        if self.weights is None:
            return sum(m)
        return sum(w * e for w, e in zip(self.weights, m))

    def zero_mono(self) -> Mono:
        return (0,) * self.nvars

    def unit_mono(self, i: int) -> Mono:
        return tuple(1 if j == i else 0 for j in range(self.nvars))

    def var(self, i: int) -> "Polynomial":
        return Polynomial(self, {self.unit_mono(i): self.field.one})

    def var_index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise InputError("unknown variable %r in ring %r" % (name, self.names))

    def const(self, c) -> "Polynomial":
        c = self.field.of(c)
        return Polynomial(self, {self.zero_mono(): c} if c else {})

    def monomial(self, m: Mono, c=1) -> "Polynomial":
        c = self.field.of(c)
        if len(m) != self.nvars:
            raise RingMismatchError("exponent tuple has wrong length")
        return Polynomial(self, {tuple(m): c} if c else {})

    def from_terms(self, terms: dict) -> "Polynomial":
        clean = {}
        for m, c in terms.items():
            c = self.field.of(c)
            if c:
                clean[tuple(m)] = c
        return Polynomial(self, clean)

    @property
    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    @property
    def one(self) -> "Polynomial":
        return self.const(1)

    def mono_str(self, m: Mono) -> str:
        parts = []
        for name, e in zip(self.names, m):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append("%s^%d" % (name, e))
        return "*".join(parts) if parts else "1"


class Polynomial:
    """Sparse polynomial: dict from exponent tuple to nonzero coefficient."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        self.terms = terms

    def is_zero(self) -> bool:
        return not self.terms

    def _check(self, other: "Polynomial"):
        if self.ring != other.ring:
            raise RingMismatchError("polynomials from different rings")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        F = self.ring.field
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = F.add(out.get(m, F.zero), c)
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Polynomial(self.ring, out)

    def __neg__(self) -> "Polynomial":
        F = self.ring.field
        return Polynomial(self.ring, {m: F.neg(c) for m, c in self.terms.items()})

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(other)
        self._check(other)
        F = self.ring.field
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                s = F.add(out.get(m, F.zero), F.mul(c1, c2))
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        return Polynomial(self.ring, out)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c) -> "Polynomial":
        c = self.ring.field.of(c)
        if not c:
            return self.ring.zero
        F = self.ring.field
        return Polynomial(self.ring, {m: F.mul(v, c) for m, v in self.terms.items()})

    def mono_shift(self, m: Mono) -> "Polynomial":
        """Multiply by the monomial m."""
        return Polynomial(self.ring, {mono_mul(t, m): c for t, c in self.terms.items()})

    def __eq__(self, other):
        return (
            isinstance(other, Polynomial)
            and self.ring == other.ring
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def __pow__(self, k: int) -> "Polynomial":
        if k < 0:
            raise InputError("negative power of a polynomial")
        out = self.ring.one
        for _ in range(k):
            out = out * self
        return out

    def total_degree(self) -> int:
        if not self.terms:
            raise InputError("degree of the zero polynomial")
        return max(mono_deg(m) for m in self.terms)

    def weighted_degree(self) -> int:
        if not self.terms:
            raise InputError("degree of the zero polynomial")
        return max(self.ring.weight_of(m) for m in self.terms)

    def is_homogeneous(self, weighted: bool = False) -> bool:
        if not self.terms:
            return True
        if weighted:
            degs = {self.ring.weight_of(m) for m in self.terms}
        else:
            degs = {mono_deg(m) for m in self.terms}
        return len(degs) == 1

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def coeff(self, m: Mono):
        return self.terms.get(tuple(m), self.ring.field.zero)

    def map_coeffs(self, fn, target_ring=None) -> "Polynomial":
        ring = target_ring or self.ring
        out = {}
        F = ring.field
        for m, c in self.terms.items():
            v = F.of(fn(c))
            if v:
                out[m] = v
        return Polynomial(ring, out)

    def subs(self, target: PolyRing, images: list) -> "Polynomial":
        """Ring map sending variable i to images[i] (a Polynomial over target)."""
        if len(images) != self.ring.nvars:
            raise InputError("need one image per variable")
        out = target.zero
        for m, c in self.terms.items():
            t = target.const(c)
            for i, e in enumerate(m):
                if e:
                    t = t * (images[i] ** e)
            out = out + t
        return out

    def sorted_terms(self, key=None):
        """Terms sorted descending; default key is plain lex on exponents."""
        if key is None:
            return sorted(self.terms.items(), key=lambda t: t[0], reverse=True)
        return sorted(self.terms.items(), key=lambda t: key(t[0]), reverse=True)

    def __repr__(self):
        from .parsing import poly_str

        return "<%s>" % poly_str(self)


def random_monomial(rng, ring: PolyRing, max_deg: int) -> Mono:
    d = rng.randint(1, max_deg)
    m = [0] * ring.nvars
    for _ in range(d):
        m[rng.randrange(ring.nvars)] += 1
    return tuple(m)


def all_monomials_upto(ring: PolyRing, d: int):
    for k in range(d + 1):
        yield from monomials_of_degree(ring.nvars, k)
