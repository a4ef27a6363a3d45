"""One-parameter flat families: t=1 recovers the ideal, t=0 its initial ideal."""

import random

import pytest

from golodlab import (
    GroebnerBasis,
    MonomialIdeal,
    QuotientRing,
    degeneration_summary,
    grevlex,
    homogenize_ideal,
    initial_form,
    lex,
    specialize_t,
)

from conftest import mk_ring, random_homogeneous_ideal


def family_corpus(seed=77, count=8):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        ring = mk_ring(3, ("x", "y", "z"))
        gens = random_homogeneous_ideal(rng, ring, max_deg=3, n_gens=3)
        if not gens:
            continue
        order = rng.choice([lex(ring), grevlex(ring)])
        gb = GroebnerBasis(ring, order, gens)
        if not gb.is_zero_ideal() and not gb.contains(ring.one):
            out.append(gb)
    return out


def test_fibers_of_lex_example(gorenstein_gb):
    H = homogenize_ideal(gorenstein_gb)
    assert H.t_name not in gorenstein_gb.ring.names
    assert set(H.fiber(1)) == set(gorenstein_gb.gens)
    zero_fiber = MonomialIdeal.from_polys(H.fiber(0))
    assert zero_fiber == gorenstein_gb.initial_ideal()


def test_homogenized_gens_have_constant_weight():
    for gb in family_corpus(3, 4):
        H = homogenize_ideal(gb)
        w_ext = tuple(H.weights) + (1,)
        for g in H.gens:
            weights = {sum(wi * e for wi, e in zip(w_ext, m)) for m in g.terms}
            assert len(weights) == 1


def test_general_fiber_presents_same_ideal():
    for gb in family_corpus(5, 8):
        H = homogenize_ideal(gb)
        gb_fiber = GroebnerBasis(gb.ring, gb.order, list(H.fiber(1)))
        # mutual membership
        for g in gb.gens:
            assert gb_fiber.contains(g)
        for g in H.fiber(1):
            assert gb.contains(g)


def test_special_fiber_is_initial_ideal():
    for gb in family_corpus(9, 8):
        H = homogenize_ideal(gb)
        assert MonomialIdeal.from_polys(H.fiber(0)) == gb.initial_ideal()


def test_hilbert_functions_agree_along_family():
    # flatness check: R/I and R/in(I) share every graded dimension
    for gb in family_corpus(123, 8):
        quot = QuotientRing(gb)
        init_gb = GroebnerBasis(gb.ring, gb.order, gb.initial_ideal().polys())
        init_quot = QuotientRing(init_gb)
        for d in range(9):
            assert quot.hilbert(d) == init_quot.hilbert(d)


def test_initial_form_picks_leading_terms():
    for gb in family_corpus(15, 5):
        ring = gb.ring
        monos = [m for g in gb.gens for m in g.terms]
        w = gb.order.representing_weight(monos)
        for g in gb.gens:
            top = initial_form(g, w)
            assert list(top.terms) == [gb.order.leading_mono(g)]


def test_specialize_t_drops_and_keeps():
    ring = mk_ring(2, ("x", "y"))
    ext = mk_ring(3, ("x", "y", "t"))
    from golodlab import parse_poly

    fh = parse_poly("x^2 + y*t^3", ext)
    assert specialize_t(fh, ring, 0) == parse_poly("x^2", ring)
    assert specialize_t(fh, ring, 1) == parse_poly("x^2 + y", ring)


def test_degeneration_summary_shape(gorenstein_gb):
    d = degeneration_summary(gorenstein_gb)
    assert d["ring"] == "QQ[x1,x2,x3]"
    assert d["order"].startswith("lex")
    assert len(d["weights"]) == 3
    assert "x3^3" in d["initial_gens"]
    assert d["groebner_size"] == 6
