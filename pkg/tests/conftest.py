"""Shared fixtures: the worked three-variable example, corpus generators."""

import random
from pathlib import Path

import pytest

from golodlab import (
    QQ,
    GroebnerBasis,
    MonomialIdeal,
    PolyRing,
    QuotientRing,
    lex,
    parse_poly,
)
from golodlab.rings import monomials_of_degree

FIXTURES = Path(__file__).resolve().parents[1] / "fixtures"


def mk_ring(n, names=None):
    if names is None:
        names = tuple("x%d" % (i + 1) for i in range(n))
    return PolyRing(tuple(names), QQ)


@pytest.fixture(scope="session")
def ring3():
    return mk_ring(3)


@pytest.fixture(scope="session")
def gorenstein_gb(ring3):
    """The Gorenstein 3-fold point: five quadrics, lex x1>x2>x3."""
    gens = [
        parse_poly(s, ring3)
        for s in ("x1^2", "x1*x3", "-x1*x2+x3^2", "x2*x3", "x2^2")
    ]
    return GroebnerBasis(ring3, lex(ring3), gens)


@pytest.fixture(scope="session")
def gorenstein_initial_quot(gorenstein_gb):
    ring = gorenstein_gb.ring
    gb = GroebnerBasis(ring, gorenstein_gb.order, gorenstein_gb.initial_ideal().polys())
    return QuotientRing(gb)


def random_monomial_ideal(rng, nvars, max_deg, max_gens=6):
    """Nonzero monomial ideal with minimal generators, degrees in [1, max_deg]."""
    ring = mk_ring(nvars)
    monos = set()
    for _ in range(rng.randint(1, max_gens)):
        d = rng.randint(1, max_deg)
        m = [0] * nvars
        for _ in range(d):
            m[rng.randrange(nvars)] += 1
        monos.add(tuple(m))
    return MonomialIdeal.from_monos(ring, monos)


def random_homogeneous_poly(rng, ring, deg, n_terms=3):
    pool = list(monomials_of_degree(ring.nvars, deg))
    rng.shuffle(pool)
    terms = {}
    for m in pool[: rng.randint(1, n_terms)]:
        c = rng.choice([-2, -1, 1, 2, 3])
        terms[m] = ring.field.of(c)
    return ring.from_terms(terms)


def random_homogeneous_ideal(rng, ring, max_deg=3, n_gens=3):
    gens = []
    for _ in range(n_gens):
        d = rng.randint(1, max_deg)
        f = random_homogeneous_poly(rng, ring, d)
        if not f.is_zero():
            gens.append(f)
    return gens


def seeded(seed):
    return random.Random(seed)
