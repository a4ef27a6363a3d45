"""Koszul complex over a quotient: differential laws, strand homology."""

import random

import pytest

from golodlab import (
    GroebnerBasis,
    KoszulComplex,
    KoszulElement,
    MonomialIdeal,
    QuotientRing,
    grevlex,
    koszul_betti,
    parse_poly,
    taylor_betti,
)

from conftest import mk_ring, random_homogeneous_ideal, random_monomial_ideal


def quotient_of(I):
    gb = GroebnerBasis(I.ring, grevlex(I.ring), I.polys(), reduce=False)
    return QuotientRing(gb)


@pytest.fixture(scope="module")
def quot_m2():
    ring = mk_ring(2, ("x", "y"))
    return quotient_of(MonomialIdeal.from_monos(ring, [(2, 0), (1, 1), (0, 2)]))


def random_element(rng, quot, max_deg=3, size=None):
    """Homologically homogeneous element with random standard-monomial coefficients."""
    n = quot.ring.nvars
    if size is None:
        size = rng.randint(0, n)
    terms = {}
    for _ in range(rng.randint(1, 4)):
        S = tuple(sorted(rng.sample(range(n), size)))
        d = rng.randint(0, max_deg)
        pool = quot.std_monomials(d)
        if not pool:
            continue
        m = rng.choice(pool)
        key = (S, m)
        c = quot.field.of(rng.choice([-2, -1, 1, 2]))
        terms[key] = quot.field.add(terms.get(key, quot.field.zero), c)
    return KoszulElement(quot, terms)


def random_mixed_element(rng, quot, max_deg=3):
    a = random_element(rng, quot, max_deg)
    b = random_element(rng, quot, max_deg)
    return a + b


def test_differential_squares_to_zero():
    rng = random.Random(83)
    for _ in range(6):
        I = random_monomial_ideal(rng, 3, 3, max_gens=4)
        quot = quotient_of(I)
        for _ in range(5):
            z = random_mixed_element(rng, quot)
            assert z.differential().differential().is_zero()


def test_leibniz_rule():
    # d(a ^ b) = da ^ b + (-1)^{|a|} a ^ db for homogeneous wedge degree
    rng = random.Random(89)
    ring = mk_ring(3)
    I = MonomialIdeal.from_monos(ring, [(2, 0, 0), (0, 2, 0), (0, 1, 1)])
    quot = quotient_of(I)
    for _ in range(12):
        a = random_element(rng, quot)
        b = random_element(rng, quot)
        pa = a.hom_degree()
        if pa is None:
            continue
        lhs = a.wedge(b).differential()
        sign = 1 if pa % 2 == 0 else -1
        rhs = a.differential().wedge(b) + a.wedge(b.differential()).scale(
            quot.field.of(sign)
        )
        assert lhs == rhs


def test_wedge_is_graded_commutative():
    rng = random.Random(97)
    ring = mk_ring(3)
    I = MonomialIdeal.from_monos(ring, [(2, 0, 0), (0, 2, 0)])
    quot = quotient_of(I)
    for _ in range(10):
        a = random_element(rng, quot)
        b = random_element(rng, quot)
        pa, pb = a.hom_degree(), b.hom_degree()
        if pa is None or pb is None:
            continue
        sign = 1 if (pa * pb) % 2 == 0 else -1
        assert a.wedge(b) == b.wedge(a).scale(quot.field.of(sign))
    # e_i ^ e_i = 0
    e0 = KoszulElement.wedge_monomial(quot, (0,))
    assert e0.wedge(e0).is_zero()


def test_koszul_betti_on_m2(quot_m2):
    B = koszul_betti(quot_m2)
    assert B.entries == {(0, 0): 1, (1, 2): 3, (2, 3): 2}


def test_strand_homology_dimensions(quot_m2):
    kz = KoszulComplex(quot_m2)
    assert kz.betti_entry(1, 2) == 3
    assert kz.betti_entry(2, 3) == 2
    assert kz.betti_entry(1, 1) == 0
    assert kz.betti_entry(2, 2) == 0
    H = kz.homology(1, 2)
    assert H.dim == 3 and len(H.reps) == 3
    for z in H.reps:
        assert z.is_cycle()
        assert not kz.is_boundary(z)


def test_homology_basis_spans_all_strands(quot_m2):
    basis = quot_m2 and KoszulComplex(quot_m2).homology_basis()
    by_deg = {}
    for h in basis:
        by_deg[h.hom_degree] = by_deg.get(h.hom_degree, 0) + 1
    assert by_deg == {1: 3, 2: 2}


def test_boundary_preimage_inverts_differential(quot_m2):
    kz = KoszulComplex(quot_m2)
    rng = random.Random(101)
    for _ in range(8):
        z = random_element(rng, quot_m2)
        b = z.differential()
        if b.is_zero():
            continue
        pre = kz.boundary_preimage(b)
        assert pre is not None
        assert pre.differential() == b


def test_koszul_matches_taylor_on_corpus():
    rng = random.Random(103)
    for _ in range(8):
        I = random_monomial_ideal(rng, 4, 3, max_gens=5)
        quot = quotient_of(I)
        assert koszul_betti(quot).entries == taylor_betti(I).entries


def test_koszul_betti_non_monomial(gorenstein_gb):
    from golodlab import QuotientRing

    B = koszul_betti(QuotientRing(gorenstein_gb))
    # Gorenstein of codimension 3: symmetric Betti totals 1, 5, 5, 1
    totals = {}
    for (i, _), b in B.entries.items():
        totals[i] = totals.get(i, 0) + b
    assert totals == {0: 1, 1: 5, 2: 5, 3: 1}


def test_cycle_check_guards_class_construction(quot_m2):
    from golodlab.errors import InputError
    from golodlab import HomologyClass

    e0 = KoszulElement.wedge_monomial(quot_m2, (0,))
    # d(e_0) = x in R/(x^2,xy,y^2), nonzero, so e_0 is not a cycle
    with pytest.raises(InputError):
        HomologyClass(e0, 1, 1)


def test_element_text_round_trip(quot_m2):
    rng = random.Random(107)
    for _ in range(6):
        z = random_element(rng, quot_m2, max_deg=1)
        back = KoszulElement.from_text(quot_m2, z.to_text())
        assert back == z
