import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from moncurve.errors import NonpositiveLambda
from moncurve.polyhedral import (
    Facet,
    howald_generators,
    howald_member,
    howald_threshold,
    lct_monomial,
    newton_polyhedron,
)
from moncurve.semigroup import MonomialIdeal, term_ideal

from oracles import InteriorOracle, lct_by_lp

ideals = st.lists(st.tuples(*(st.integers(0, 6),) * 3).filter(any), min_size=1, max_size=5).map(
    MonomialIdeal.from_exponents)
lams = st.fractions(min_value=Fraction(1, 4), max_value=4, max_denominator=7).filter(lambda x: x > 0)


def test_facets_345():
    np = newton_polyhedron(term_ideal((3, 4, 5)))
    assert set(np.facets) == {Facet((1, 1, 1), 2), Facet((2, 3, 4), 6)}
    assert lct_monomial(np) == Fraction(3, 2)


def test_maximal_ideal():
    np = newton_polyhedron(MonomialIdeal.from_exponents([(1, 0, 0), (0, 1, 0), (0, 0, 1)]))
    assert np.facets == (Facet((1, 1, 1), 1),)
    assert lct_monomial(np) == 3
    assert howald_member(np, (0, 0, 0), Fraction(29, 10))
    assert not howald_member(np, (0, 0, 0), 3)
    assert set(howald_generators(np, 3).generators) == {(1, 0, 0), (0, 1, 0), (0, 0, 1)}


def test_howald_examples():
    np = newton_polyhedron(term_ideal((3, 4, 5)))
    assert howald_member(np, (0, 0, 0), 1)
    assert not howald_member(np, (0, 0, 0), Fraction(3, 2))
    assert howald_member(np, (1, 1, 1), 2)
    assert not howald_member(np, (1, 1, 1), 3)
    assert howald_threshold(np, (0, 0, 0)) == Fraction(3, 2)
    with pytest.raises(NonpositiveLambda):
        howald_member(np, (0, 0, 0), 0)


def test_principal_ideal():
    np = newton_polyhedron(MonomialIdeal.from_exponents([(2, 0, 0)]))
    assert lct_monomial(np) == Fraction(1, 2)
    assert howald_generators(np, 1).generators == ((2, 0, 0),)
    assert howald_generators(np, Fraction(3, 4)).generators == ((1, 0, 0),)


@settings(max_examples=60, deadline=None)
@given(ideals, lams)
def test_howald_matches_interior_oracle(ideal, lam):
    np = newton_polyhedron(ideal)
    oracle = InteriorOracle(ideal.generators)
    rng = random.Random(0)
    for _ in range(40):
        v = tuple(rng.randint(0, 8) for _ in range(3))
        assert howald_member(np, v, lam) == oracle.interior(v, lam)


@settings(max_examples=40, deadline=None)
@given(ideals)
def test_lct_matches_lp(ideal):
    assert lct_monomial(newton_polyhedron(ideal)) == lct_by_lp(ideal.generators)


@settings(max_examples=40, deadline=None)
@given(ideals, lams)
def test_generators_describe_the_ideal(ideal, lam):
    np = newton_polyhedron(ideal)
    J = howald_generators(np, lam)
    for v in [(a, b, c) for a in range(7) for b in range(7) for c in range(7)]:
        assert J.contains(v) == howald_member(np, v, lam)


@settings(max_examples=40, deadline=None)
@given(ideals, lams, lams)
def test_monotone_in_lambda(ideal, l1, l2):
    lo, hi = sorted((l1, l2))
    np = newton_polyhedron(ideal)
    for v in [(a, b, c) for a in range(5) for b in range(5) for c in range(5)]:
        if howald_member(np, v, hi):
            assert howald_member(np, v, lo)


@settings(max_examples=40, deadline=None)
@given(ideals, st.tuples(*(st.integers(0, 6),) * 3))
def test_threshold_is_the_flip(ideal, v):
    np = newton_polyhedron(ideal)
    t = howald_threshold(np, v)
    assert howald_member(np, v, t - Fraction(1, 1000))
    assert not howald_member(np, v, t)


def test_ideal_contained_in_multiplier_ideal_at_one():
    ideal = MonomialIdeal.from_exponents([(2, 0, 0), (0, 3, 0), (1, 1, 1)])
    np = newton_polyhedron(ideal)
    for g in ideal.generators:
        assert howald_member(np, g, 1)


@settings(max_examples=30, deadline=None)
@given(ideals, lams, lams)
def test_generator_containment(ideal, l1, l2):
    lo, hi = sorted((l1, l2))
    np = newton_polyhedron(ideal)
    small, big = howald_generators(np, hi), howald_generators(np, lo)
    assert all(big.contains(g) for g in small.generators)


@settings(max_examples=30, deadline=None)
@given(ideals)
def test_lct_by_bisection(ideal):
    np = newton_polyhedron(ideal)
    lo, hi = Fraction(0), Fraction(10)
    while hi - lo > Fraction(1, 10**4):
        mid = (lo + hi) / 2
        if howald_member(np, (0, 0, 0), mid):
            lo = mid
        else:
            hi = mid
    assert lo < lct_monomial(np) <= hi
