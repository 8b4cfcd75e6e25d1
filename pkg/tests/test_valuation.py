from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from moncurve.algebra import SparsePolynomial, dot, parse_polynomial
from moncurve.errors import NonpositiveLambda
from moncurve.linalg import nullspace
from moncurve.multiplier import analyze
from moncurve.semigroup import minimal_generators, monomials_of_degree
from moncurve.valuation import (
    MonomialValuation,
    QuasiMonomialValuation,
    ValuationCondition,
    exclusion_threshold,
    f1_expansion,
    lipman_member,
    multi_indices,
    nu_k_jacobian,
    symbolic_constraints,
    symbolic_power_member,
)

from oracles import nu_by_cosets

P = parse_polynomial
N = (3, 4, 5)
F1, F2, F3 = minimal_generators(N)
NU = QuasiMonomialValuation((3, 4, 5), F1, 9)

polys = st.dictionaries(
    st.tuples(*(st.integers(0, 4),) * 3),
    st.integers(-3, 3).filter(bool).map(Fraction),
    min_size=1,
    max_size=5,
).map(SparsePolynomial)


def test_golden_values():
    assert [NU.value(P(t)) for t in ("x", "y", "z", "y^2 - x*z")] == [3, 4, 5, 9]
    assert NU.value(P("y^4")) == 16
    assert NU.value(P("x^3 - y*z")) == 9
    assert NU.value(P("z^2 - x^2*y")) == 10


def test_expansion_of_y4():
    assert f1_expansion(P("y^4"), F1) == [P("x^2*z^2"), P("2*x*z"), P("1")]


def test_key_must_be_homogeneous():
    with pytest.raises(ValueError):
        QuasiMonomialValuation((2, 1, 1), F1, 5)
    with pytest.raises(ValueError):
        QuasiMonomialValuation((3, 4, 5), F1, 7)


@settings(max_examples=200)
@given(polys)
def test_reconstruction(f):
    coeffs = f1_expansion(f, F1)
    total = SparsePolynomial()
    power = SparsePolynomial.constant(1)
    for c in coeffs:
        total = total + c * power
        power = power * F1.poly
        # no coefficient term is divisible by the leader
        assert not any(a[1] >= 2 for a in c.terms)
    assert total == f


@settings(max_examples=200)
@given(polys)
def test_matches_coset_oracle(f):
    assert NU.value(f) == nu_by_cosets(f, (3, 4, 5), F1.u, F1.v, 9)


@settings(max_examples=200)
@given(polys)
def test_leader_choice_invariance(f):
    other = QuasiMonomialValuation((3, 4, 5), F1.swapped(), 9)
    assert NU.value(f) == other.value(f)


@settings(max_examples=200)
@given(polys, polys)
def test_valuation_axioms(f, g):
    assert NU.value(f * g) == NU.value(f) + NU.value(g)
    assert NU.value(f + g) >= min(NU.value(f), NU.value(g))
    plain = MonomialValuation((3, 4, 5))
    assert NU.value(f) >= plain.value(f)


@given(st.tuples(*(st.integers(0, 6),) * 3))
def test_values_on_monomials_and_key(a):
    assert NU.value(SparsePolynomial.monomial(a)) == dot((3, 4, 5), a)
    assert NU.value(F1.poly) == 9


def test_symbolic_powers():
    f1, f2, f3 = F1.poly, F2.poly, F3.poly
    assert symbolic_power_member(N, f1, 1)
    assert not symbolic_power_member(N, f1, 2)
    assert symbolic_power_member(N, f1 * f2, 2)
    assert symbolic_power_member(N, f1 * f2 * f3 * P("x + z^3"), 3)
    assert not symbolic_power_member(N, P("x"), 1)
    assert symbolic_power_member(N, P("x"), 0)
    assert len(list(multi_indices(2))) == 10


def test_lipman_conditions_345():
    ca = analyze(N)
    conds = ca.valuations()
    assert not lipman_member(P("1"), conds, Fraction(13, 9))
    assert lipman_member(P("1"), conds, Fraction(4, 3))
    assert lipman_member(F1.poly, conds, Fraction(13, 9))
    with pytest.raises(NonpositiveLambda):
        lipman_member(P("1"), conds, 0)


def test_chain_thresholds():
    assert nu_k_jacobian((3, 4, 5), 0) == 11
    assert nu_k_jacobian((3, 4, 5), 1) == 12
    assert exclusion_threshold((3, 4, 5), 8, 1, 0, 0, 0, 0) == Fraction(13, 9)
    assert exclusion_threshold((3, 4, 5), 8, 0, 0, 0, 0, 0) == Fraction(3, 2)
    chain = [exclusion_threshold((3, 4, 5), 8, k, 0, 0, 0, 0) for k in range(6)]
    assert chain == sorted(chain, reverse=True)
    assert all(t > 1 for t in chain)


@pytest.mark.parametrize("n", [(3, 4, 5), (5, 7, 11), (4, 5, 7), (7, 9, 11)])
@settings(max_examples=60, deadline=None)
@given(f=polys, lam=st.fractions(min_value=Fraction(1, 3), max_value=4, max_denominator=9))
def test_lipman_conditions_nest_along_the_chain(n, f, lam):
    f1, f2 = minimal_generators(n)[:2]
    o, w = f1.order, min(dot(n, f2.u), dot(n, f2.v))

    def passes(k):
        val = QuasiMonomialValuation(n, f1, o + k)
        return val.value(f) >= ValuationCondition("chain", o + k, nu_k_jacobian(n, k)).threshold(lam)

    for k in range(w - o):
        if passes(k + 1):
            assert passes(k)


@settings(max_examples=50, deadline=None)
@given(st.lists(st.integers(-3, 3), min_size=3, max_size=3), st.integers(1, 3), st.integers(24, 40))
def test_symbolic_power_linearity(coeffs, k, d):
    # members of one n-degree: the symbolic-constraint nullspace, checked polynomial by polynomial
    monos = monomials_of_degree(N, d)
    basis = nullspace(symbolic_constraints(monos, k), len(monos))
    members = [SparsePolynomial({a: c for a, c in zip(monos, row) if c}) for row in basis]
    assert all(symbolic_power_member(N, f, k) for f in members)
    total = SparsePolynomial()
    for c, f in zip(coeffs, members):
        total = total + f * c
    assert symbolic_power_member(N, total, k)
    assert symbolic_power_member(N, total * 5, k)
