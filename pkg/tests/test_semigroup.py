import math
from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from moncurve.algebra import dot, parse_polynomial, substitute_parametrization
from moncurve.errors import NonPositiveEntry, NotPrimitive
from moncurve.semigroup import (
    MonomialIdeal,
    in_term_ideal,
    minimal_generators,
    minimalize,
    monomials_of_degree,
    ord_weight,
    pure_power_exponents,
    semigroup_members,
    term_ideal,
    validate_curve,
)

from oracles import generator_count_by_rank, lonely_degree, monomials


def polys(gens):
    return {g.poly for g in gens}


def P(*texts):
    return {parse_polynomial(t) for t in texts}


def test_validate():
    assert validate_curve([3, 4, 5]).n == (3, 4, 5)
    with pytest.raises(NonPositiveEntry):
        validate_curve((0, 1, 2))
    with pytest.raises(NotPrimitive, match=r"\(1, 2, 3\)"):
        validate_curve((2, 4, 6))
    with pytest.raises(ValueError):
        validate_curve((1, 2))


def test_generators_345():
    gens = minimal_generators((3, 4, 5))
    assert polys(gens) == P("y^2 - x*z", "x^3 - y*z", "z^2 - x^2*y")
    assert [g.order for g in gens] == [8, 9, 10]


def test_generators_smooth_cubic():
    assert polys(minimal_generators((1, 2, 3))) == P("x^2 - y", "x^3 - z")


def test_generators_complete_intersection():
    assert polys(minimal_generators((4, 6, 9))) == P("x^3 - y^2", "z^2 - x^3*y")


@pytest.mark.parametrize("n", [(3, 4, 5), (1, 2, 3), (4, 6, 9), (5, 7, 11), (2, 3, 7), (6, 10, 15)])
def test_generator_counts_against_rank(n):
    gens = minimal_generators(n)
    c = pure_power_exponents(n)
    top = max(ci * ni for ci, ni in zip(c, n))
    by_degree = {}
    for g in gens:
        by_degree[g.order] = by_degree.get(g.order, 0) + 1
        assert substitute_parametrization(g.poly, n) == {}
        assert dot(n, g.u) == dot(n, g.v) == g.order
    for d in range(1, top + 3 * max(n)):
        assert by_degree.get(d, 0) == generator_count_by_rank(n, d), d


def test_ord_weight():
    f = parse_polynomial("y^2 - x*z")
    assert ord_weight((3, 4, 5), f) == 8
    assert ord_weight((1, 1, 1), parse_polynomial("x^3 + y")) == 1
    assert ord_weight((1, 1, 1), parse_polynomial("0")) == math.inf


def test_semigroup_members():
    reach = semigroup_members([3, 5], 10)
    assert [s for s, r in enumerate(reach) if r] == [0, 3, 5, 6, 8, 9, 10]


def test_pure_powers():
    assert pure_power_exponents((3, 4, 5)) == (3, 2, 2)


def test_term_ideal_345():
    tau = term_ideal((3, 4, 5))
    assert tau.generators == ((0, 2, 0), (1, 0, 1), (3, 0, 0), (0, 1, 1), (0, 0, 2), (2, 1, 0))


@pytest.mark.parametrize("n", [(3, 4, 5), (4, 6, 9), (5, 7, 11), (2, 5, 7), (1, 2, 3)])
def test_term_ideal_soundness(n):
    tau = term_ideal(n)
    for a in tau.generators:
        assert not lonely_degree(n, dot(n, a))
    # x^a is in tau exactly when another monomial shares its degree
    lonely = {}
    for a in product(range(7), repeat=3):
        d = dot(n, a)
        if d not in lonely:
            lonely[d] = lonely_degree(n, d)
        assert tau.contains(a) == (not lonely[d]), a


def test_in_term_ideal():
    assert in_term_ideal((3, 4, 5), (0, 2, 0))
    assert not in_term_ideal((3, 4, 5), (0, 1, 0))


def test_monomials_of_degree_matches_oracle():
    for d in range(40):
        assert sorted(monomials_of_degree((3, 4, 5), d)) == sorted(monomials((3, 4, 5), d))


@given(st.lists(st.tuples(*(st.integers(0, 5),) * 3), min_size=1, max_size=8))
def test_minimalize(exps):
    mins = minimalize(exps)
    ideal = MonomialIdeal(tuple(mins))
    assert all(ideal.contains(a) for a in exps)
    for a in mins:
        assert not any(b != a and all(b[i] <= a[i] for i in range(3)) for b in mins)


@pytest.mark.parametrize("n", [(3, 4, 5), (4, 6, 9), (5, 7, 11), (2, 5, 7), (1, 2, 3), (6, 7, 15)])
def test_generator_and_tau_structure(n):
    gens = minimal_generators(n)
    tau = term_ideal(n)
    orders = [g.order for g in gens]
    assert orders == sorted(orders)
    for g in gens:
        assert tau.contains(g.u) and tau.contains(g.v)
    for a in tau.generators:
        assert not any(b != a and all(b[i] <= a[i] for i in range(3)) for b in tau.generators)
    for i, ci in enumerate(pure_power_exponents(n)):
        pure = tuple(ci if j == i else 0 for j in range(3))
        assert pure in tau.generators
        assert any(pure in (g.u, g.v) for g in gens)


@pytest.mark.parametrize("n", [(3, 4, 5), (4, 6, 9), (2, 5, 7), (5, 7, 11)])
def test_tau_agrees_with_wider_box(n):
    c = pure_power_exponents(n)
    top = max(c) + max(n)
    lonely = {}
    for a in product(range(top + 1), repeat=3):
        d = dot(n, a)
        if d not in lonely:
            lonely[d] = lonely_degree(n, d)
    shared = [a for a in product(range(top + 1), repeat=3) if not lonely[dot(n, a)]]
    assert set(minimalize(shared)) == set(term_ideal(n).generators)
