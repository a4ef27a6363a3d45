"""Monomial ideals and the combinatorial toolkit around them: polarization,
variable-identification specializations, rainbow structure detection, ranked
projections, and complements inside the full transversal ideal.
"""
from __future__ import annotations

import itertools
import string
from dataclasses import dataclass
from math import comb
from typing import Optional

from .errors import CapExceededError, InconsistencyError, InputError
from .rings import (
    Mono,
    PolyRing,
    Polynomial,
    mono_deg,
    mono_divides,
    mono_is_squarefree,
    mono_lcm,
    mono_mul,
    mono_support,
    monomials_of_degree,
)


def display_sorted(monos):
    """Degree first, then descending grevlex: the usual reading order for a
    graded generator list."""
    return sorted(
        monos, key=lambda m: (mono_deg(m), tuple(m[i] for i in reversed(range(len(m)))))
    )


def minimalize(monos):
    """Keep the divisibility-minimal monomials."""
    out = []
    ms = sorted(set(monos), key=lambda m: (mono_deg(m), m))
    for m in ms:
        if not any(mono_divides(p, m) for p in out):
            out.append(m)
    return tuple(sorted(out))


@dataclass(frozen=True)
class MonomialIdeal:
    ring: PolyRing
    gens: tuple  # minimal generators, sorted exponent tuples

    @classmethod
    def from_monos(cls, ring: PolyRing, monos) -> "MonomialIdeal":
        monos = [tuple(m) for m in monos]
        for m in monos:
            if len(m) != ring.nvars:
                raise InputError("exponent tuple length mismatch")
            if all(e == 0 for e in m):
                raise InputError("unit generator: the ideal is the whole ring")
        return cls(ring, minimalize(monos))

    @classmethod
    def from_polys(cls, polys) -> "MonomialIdeal":
        monos = []
        ring = None
        for p in polys:
            if p.is_zero():
                continue
            if not p.is_monomial():
                raise InputError("generator %r is not a monomial" % p)
            ring = p.ring
            monos.append(next(iter(p.terms)))
        if ring is None:
            raise InputError("no nonzero generators")
        return cls.from_monos(ring, monos)

    def contains(self, m: Mono) -> bool:
        return any(mono_divides(g, m) for g in self.gens)

    def contains_ideal(self, other: "MonomialIdeal") -> bool:
        return all(self.contains(g) for g in other.gens)

    def __mul__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        if self.ring != other.ring:
            raise InputError("ideals in different rings")
        return MonomialIdeal.from_monos(
            self.ring, [mono_mul(a, b) for a in self.gens for b in other.gens]
        )

    def power(self, t: int) -> "MonomialIdeal":
        if t < 1:
            raise InputError("power exponent must be >= 1")
        out = self
        for _ in range(t - 1):
            out = out * self
        return out

    def plus(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return MonomialIdeal.from_monos(self.ring, self.gens + other.gens)

    def lcm_gens(self) -> Mono:
        out = self.ring.zero_mono()
        for g in self.gens:
            out = mono_lcm(out, g)
        return out

    def is_squarefree(self) -> bool:
        return all(mono_is_squarefree(g) for g in self.gens)

    def gen_degrees(self):
        return tuple(mono_deg(g) for g in self.gens)

    def is_equigenerated(self) -> bool:
        return len(set(self.gen_degrees())) <= 1

    def hilbert(self, d: int) -> int:
        return sum(
            1 for m in monomials_of_degree(self.ring.nvars, d) if not self.contains(m)
        )

    def polys(self):
        return [self.ring.monomial(g) for g in self.gens]

    def __repr__(self):
        return "<MonomialIdeal (%s)>" % ", ".join(self.ring.mono_str(g) for g in self.gens)


@dataclass(frozen=True)
class RingSurjection:
    """Variable identification map between polynomial rings."""

    source: PolyRing
    target: PolyRing
    var_map: tuple  # source variable index -> target variable index

    def apply_mono(self, m: Mono) -> Mono:
        out = [0] * self.target.nvars
        for i, e in enumerate(m):
            if e:
                out[self.var_map[i]] += e
        return tuple(out)

    def apply(self, p: Polynomial) -> Polynomial:
        if p.ring != self.source:
            raise InputError("polynomial not in the source ring")
        F = self.target.field
        out = {}
        for m, c in p.terms.items():
            im = self.apply_mono(m)
            s = F.add(out.get(im, F.zero), F.of(c))
            if s:
                out[im] = s
            else:
                out.pop(im, None)
        return Polynomial(self.target, out)


@dataclass
class Polarization:
    source: MonomialIdeal
    ideal: MonomialIdeal  # the squarefree polarized ideal
    depolarize: RingSurjection  # polarized ring -> source ring
    differences: tuple  # pairs (i, j) of polarized-ring variable indices
    regular_verified_to: int  # Hilbert comparison checked through this degree

    @property
    def ring(self) -> PolyRing:
        return self.ideal.ring


def _polar_names(ring: PolyRing, heights):
    """Copy names for polarization: x -> x1, x2, ... when the original name
    is a bare letter; otherwise each original variable gets a fresh letter."""
    bare = all(len(nm) == 1 for nm in ring.names)
    letters = [nm for nm in ring.names] if bare else list(string.ascii_lowercase)
    if not bare and ring.nvars > len(letters):
        raise CapExceededError("too many variables to relabel for polarization")
    names = []
    owners = []
    for i in range(ring.nvars):
        h = heights[i]
        base = letters[i]
        for k in range(1, h + 1):
            names.append("%s%d" % (base, k))
            owners.append(i)
    return tuple(names), owners


def polarize(I: MonomialIdeal, check_degree: Optional[int] = None) -> Polarization:
    """Standard polarization: x_i^e splits into e distinct copies.

    The variable differences sigma (copy_k - copy_1) cut the polarized
    quotient back down to R/I; their regularity is certified by comparing
    Hilbert functions through check_degree.
    """
    ring = I.ring
    heights = [max((g[i] for g in I.gens), default=0) for i in range(ring.nvars)]
    heights = [max(h, 1) for h in heights]
    names, owners = _polar_names(ring, heights)
    polar_ring = PolyRing(names, ring.field)
    slot = {}
    for j, i in enumerate(owners):
        slot.setdefault(i, []).append(j)
    polar_gens = []
    for g in I.gens:
        m = [0] * polar_ring.nvars
        for i, e in enumerate(g):
            for k in range(e):
                m[slot[i][k]] = 1
        polar_gens.append(tuple(m))
    polarized = MonomialIdeal.from_monos(polar_ring, polar_gens)
    depolarize = RingSurjection(polar_ring, ring, tuple(owners))
    differences = tuple(
        (slot[i][k], slot[i][0]) for i in range(ring.nvars) for k in range(1, heights[i])
    )
    D = check_degree
    if D is None:
        D = max(mono_deg(g) for g in I.gens) + len(differences) + 2
    _verify_linear_regular(polarized, differences, I, D)
    return Polarization(I, polarized, depolarize, differences, D)


def _verify_linear_regular(J: MonomialIdeal, differences, target: MonomialIdeal, D: int):
    """Check that the difference linear forms form a regular sequence on the
    polarized quotient: the Hilbert series must drop by (1-t) per form, and
    the cut-down quotient must match the source quotient."""
    from .groebner import GroebnerBasis
    from .orders import grevlex

    ring = J.ring
    s = len(differences)
    gens = J.polys() + [ring.var(i) - ring.var(j) for i, j in differences]
    gb = GroebnerBasis(ring, grevlex(ring), gens)
    from .groebner import QuotientRing

    quot = QuotientRing(gb)
    for d in range(D + 1):
        expected = sum(
            (-1) ** k * comb(s, k) * J.hilbert(d - k) for k in range(0, min(s, d) + 1)
        )
        got = quot.dim_k(d)
        if got != expected:
            raise InconsistencyError(
                "polarization differences not regular at degree %d (%d vs %d)"
                % (d, got, expected)
            )
        if got != target.hilbert(d):
            raise InconsistencyError(
                "polarized quotient does not match the source at degree %d" % d
            )


def specialize_variable_differences(gens, differences, check_degree: int = 10):
    """Quotient by variable differences x_i - x_j: identify variables and map
    the ideal along.  Returns (image generators, surjection, regular flag).

    gens are polynomials; differences are index pairs in their ring.  The
    regular flag reports whether the difference forms are a regular sequence
    on R/(gens), tested by Hilbert comparison through check_degree.
    """
    from .groebner import GroebnerBasis, QuotientRing
    from .orders import grevlex

    if not gens:
        raise InputError("empty generator list")
    ring = gens[0].ring
    parent = list(range(ring.nvars))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for i, j in differences:
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[max(ri, rj)] = min(ri, rj)
    reps = sorted({find(i) for i in range(ring.nvars)})
    target = PolyRing(tuple(ring.names[r] for r in reps), ring.field)
    var_map = tuple(reps.index(find(i)) for i in range(ring.nvars))
    phi = RingSurjection(ring, target, var_map)
    images = [phi.apply(g) for g in gens]
    images = [g for g in images if not g.is_zero()]

    s = len(differences)
    gb_src = GroebnerBasis(ring, grevlex(ring), list(gens))
    big = list(gens) + [ring.var(i) - ring.var(j) for i, j in differences]
    gb_cut = GroebnerBasis(ring, grevlex(ring), big)
    qs, qc = QuotientRing(gb_src), QuotientRing(gb_cut)
    regular = True
    for d in range(check_degree + 1):
        expected = sum(
            (-1) ** k * comb(s, k) * qs.dim_k(d - k) for k in range(0, min(s, d) + 1)
        )
        if qc.dim_k(d) != expected:
            regular = False
            break
    return images, phi, regular


@dataclass(frozen=True)
class RainbowStructure:
    """A partition of the variables into ordered color classes such that
    every generator picks exactly one variable from each class."""

    ring: PolyRing
    classes: tuple  # tuple of tuples of variable indices

    @property
    def n_colors(self) -> int:
        return len(self.classes)

    @property
    def class_sizes(self):
        return tuple(len(c) for c in self.classes)

    def color_of(self, var: int) -> int:
        for ci, cls in enumerate(self.classes):
            if var in cls:
                return ci
        raise InputError("variable %d has no color" % var)

    def var_of(self, color: int, pos: int) -> int:
        return self.classes[color][pos]

    def label_of(self, m: Mono):
        """Positions within each class for a transversal monomial, else None."""
        if not mono_is_squarefree(m):
            return None
        label = [None] * self.n_colors
        for v in mono_support(m):
            c = self.color_of(v)
            if label[c] is not None:
                return None
            label[c] = self.classes[c].index(v)
        if any(x is None for x in label):
            return None
        return tuple(label)

    def transversal_mono(self, label) -> Mono:
        m = [0] * self.ring.nvars
        for c, pos in enumerate(label):
            m[self.var_of(c, pos)] = 1
        return tuple(m)

    def describe(self):
        return [
            [self.ring.names[v] for v in cls] for cls in self.classes
        ]


@dataclass
class RainbowDetectResult:
    status: str  # "found" | "not_found" | "bound_exceeded"
    structure: Optional[RainbowStructure] = None
    reason: str = ""
    searched_colors: Optional[int] = None


def validate_rainbow(I: MonomialIdeal, structure: RainbowStructure) -> bool:
    return all(structure.label_of(g) is not None for g in I.gens)


def detect_rainbow(
    I: MonomialIdeal, max_colors: int = 6, max_vars: int = 24
) -> RainbowDetectResult:
    """Search for a rainbow structure on a monomial ideal.

    The class count is forced: squarefree generators of uniform degree n need
    exactly n classes.  Finding one is a proper coloring problem on the
    co-occurrence graph; the search is exhaustive, so not_found is definitive
    within the stated bounds.  Variables outside every generator are appended
    to the first class.
    """
    if I.ring.colors is not None:
        st = RainbowStructure(I.ring, I.ring.colors)
        if validate_rainbow(I, st):
            return RainbowDetectResult("found", st)
        return RainbowDetectResult("not_found", reason="declared classes are not rainbow")
    degs = set(I.gen_degrees())
    if len(degs) != 1:
        return RainbowDetectResult("not_found", reason="generators not equigenerated")
    if not I.is_squarefree():
        return RainbowDetectResult("not_found", reason="generators not squarefree")
    n = degs.pop()
    if n > max_colors:
        return RainbowDetectResult(
            "bound_exceeded",
            reason="would need %d classes, searched up to %d" % (n, max_colors),
            searched_colors=max_colors,
        )
    if I.ring.nvars > max_vars:
        return RainbowDetectResult(
            "bound_exceeded", reason="%d variables exceeds cap %d" % (I.ring.nvars, max_vars)
        )
    support = sorted({v for g in I.gens for v in mono_support(g)})
    adj = {v: set() for v in support}
    cliques = [mono_support(g) for g in I.gens]
    for cl in cliques:
        for a, b in itertools.combinations(cl, 2):
            adj[a].add(b)
            adj[b].add(a)
    if n == 1:
        # every generator is a single variable
        classes = (tuple(sorted(set(support) | set(range(I.ring.nvars)))),)
        return RainbowDetectResult("found", RainbowStructure(I.ring, classes))
    order = sorted(support, key=lambda v: (-len(adj[v]), v))
    color = {}

    def bt(k: int) -> bool:
        if k == len(order):
            return True
        v = order[k]
        used = max(color.values(), default=-1)
        for c in range(min(used + 1, n - 1) + 1):
            if any(color.get(u) == c for u in adj[v]):
                continue
            color[v] = c
            if bt(k + 1):
                return True
            del color[v]
        return False

    if not bt(0):
        return RainbowDetectResult(
            "not_found",
            reason="no %d-class rainbow coloring exists" % n,
            searched_colors=n,
        )
    classes = [[] for _ in range(n)]
    for v in support:
        classes[color[v]].append(v)
    for v in range(I.ring.nvars):
        if v not in color:
            classes[0].append(v)
    classes = [tuple(sorted(c)) for c in classes]
    classes.sort(key=lambda c: c[0])
    st = RainbowStructure(I.ring, tuple(classes))
    if not validate_rainbow(I, st):
        raise InconsistencyError("search produced a non-rainbow coloring")
    return RainbowDetectResult("found", st, searched_colors=n)


def ranked_projection(I: MonomialIdeal, structure: RainbowStructure, keep_colors):
    """Set the variables of the discarded colors to 1.

    keep_colors is an increasing tuple of color indices; the image lives in
    the subring on the kept classes and is rainbow there.
    """
    keep_colors = tuple(keep_colors)
    if any(c < 0 or c >= structure.n_colors for c in keep_colors):
        raise InputError("bad color index")
    keep_vars = sorted(v for c in keep_colors for v in structure.classes[c])
    names = tuple(structure.ring.names[v] for v in keep_vars)
    new_index = {v: k for k, v in enumerate(keep_vars)}
    new_classes = tuple(
        tuple(new_index[v] for v in structure.classes[c]) for c in keep_colors
    )
    target = PolyRing(names, structure.ring.field, colors=new_classes)
    gens = []
    for g in I.gens:
        gens.append(tuple(g[v] for v in keep_vars))
    J = MonomialIdeal.from_monos(target, gens)
    return J, RainbowStructure(target, new_classes)


def complementary_ideal(
    I: MonomialIdeal, structure: RainbowStructure, cap: int = 100000
) -> MonomialIdeal:
    """Transversal monomials that are not generators of I."""
    total = 1
    for s in structure.class_sizes:
        total *= s
    if total > cap:
        raise CapExceededError("transversal count %d exceeds cap" % total)
    gens = set(I.gens)
    out = []
    for label in itertools.product(*(range(s) for s in structure.class_sizes)):
        m = structure.transversal_mono(label)
        if m not in gens:
            out.append(m)
    if not out:
        raise InputError("complement is empty: the ideal is the full transversal ideal")
    return MonomialIdeal.from_monos(structure.ring, out)
