"""Monomial and quasi-monomial valuations on k[x, y, z].

A quasi-monomial valuation here is fixed by weights m on the variables and an
assigned value w on one binomial key f1 = x^u1 - x^v1 with <m,u1> = <m,v1>.
Values are read off the f1-adic expansion f = sum_j c_j f1^j whose
coefficients contain no monomial divisible by the leader x^u1:

    nu(f) = min_j ( ord_m(c_j) + j*w ).
"""

from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Sequence

from .algebra import Exponent, SparsePolynomial, dot, falling
from .errors import NonpositiveLambda
from .semigroup import BinomialGenerator, CurveSpec, ord_weight, validate_curve


@dataclass(frozen=True)
class MonomialValuation:
    m: tuple[int, int, int]

    def value(self, f: SparsePolynomial):
        return ord_weight(self.m, f)


@dataclass(frozen=True)
class QuasiMonomialValuation:
    m: tuple[int, int, int]
    key: BinomialGenerator
    w: int

    def __post_init__(self):
        if dot(self.m, self.key.u) != dot(self.m, self.key.v):
            raise ValueError(f"key {self.key.poly} is not homogeneous for the weights {self.m}")
        if self.w < dot(self.m, self.key.u):
            raise ValueError("assigned value is below the monomial order of the key")

    def value(self, f: SparsePolynomial):
        return nu_value(self, f)


@dataclass(frozen=True)
class ValuationCondition:
    """nu(f) >= floor(ideal_value * lam - jacobian_value)."""

    kind: str  # "monomial" or "quasi-monomial"
    ideal_value: int
    jacobian_value: int

    def threshold(self, lam) -> int:
        lam = Fraction(lam)
        return math.floor(self.ideal_value * lam - self.jacobian_value)


def _reduction_exponent(a: Exponent, u: Exponent) -> int:
    return min(a[i] // u[i] for i in range(3) if u[i])


def monomial_expansion(a: Exponent, key: BinomialGenerator) -> list[tuple[int, Exponent, int]]:
    """x^a = sum over (j, b, c) of c * x^b * f1^j with x^b not divisible by the leader.

    With k the largest power of x^u1 dividing x^a, x^a = x^(a-k*u1) (f1 + x^v1)^k.
    """
    u, v = key.u, key.v
    k = _reduction_exponent(a, u)
    base = tuple(a[i] - k * u[i] for i in range(3))
    return [(j, tuple(base[i] + (k - j) * v[i] for i in range(3)), comb(k, j)) for j in range(k + 1)]


def f1_expansion(f: SparsePolynomial, key: BinomialGenerator) -> list[SparsePolynomial]:
    """Coefficients [c_0, ..., c_d] of the reduced f1-adic expansion of f."""
    parts: dict[int, dict[Exponent, Fraction]] = defaultdict(dict)
    for a, c in f.terms.items():
        for j, b, mult in monomial_expansion(a, key):
            slot = parts[j]
            slot[b] = slot.get(b, Fraction(0)) + c * mult
    if not parts:
        return [SparsePolynomial()]
    top = max(parts)
    return [SparsePolynomial(parts.get(j, {})) for j in range(top + 1)]


def nu_value(val: QuasiMonomialValuation, f: SparsePolynomial):
    """min_j ord_m(c_j) + j*w; ``math.inf`` for f = 0."""
    best = math.inf
    for j, c in enumerate(f1_expansion(f, val.key)):
        if not c.is_zero():
            best = min(best, ord_weight(val.m, c) + j * val.w)
    return best


def multi_indices(order: int) -> Iterable[Exponent]:
    """All alpha in N^3 with |alpha| <= order."""
    for s in range(order + 1):
        for a1 in range(s + 1):
            for a2 in range(s - a1 + 1):
                yield (a1, a2, s - a1 - a2)


def symbolic_power_member(spec, f: SparsePolynomial, k: int) -> bool:
    """f in the k-th symbolic power of the curve ideal.

    In characteristic zero this holds iff every partial derivative of f of
    order < k vanishes on the curve; d^alpha f is evaluated on t -> t^n term
    by term.
    """
    if k <= 0 or f.is_zero():
        return True
    n = spec.n if isinstance(spec, CurveSpec) else validate_curve(spec).n
    for alpha in multi_indices(k - 1):
        image: dict[int, int | Fraction] = defaultdict(int)
        for a, c in f.terms.items():
            mult = falling(a, alpha)
            if mult:
                image[dot(n, a) - dot(n, alpha)] += c * mult
        if any(image.values()):
            return False
    return True


def lipman_member(f: SparsePolynomial, conditions: Sequence[tuple[object, ValuationCondition]], lam) -> bool:
    """Check nu(f) >= floor(nu(I)*lam - nu(J)) for every (valuation, condition) pair."""
    lam = Fraction(lam)
    if lam <= 0:
        raise NonpositiveLambda(f"lambda must be positive, got {lam}")
    for val, cond in conditions:
        if val.value(f) < cond.threshold(lam):
            return False
    return True


def nu_k_jacobian(m: Iterable[int], k: int) -> int:
    """Jacobian value of the k-th valuation in the blowup chain over the divisor m."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    return sum(m) - 1 + k


def exclusion_threshold(m, ord_f1: int, k: int, a: int, b: int, c: int, d: int) -> Fraction:
    """The lam at which the k-th chain valuation excludes x^a y^b z^c f1^d."""
    if ord_f1 + k <= 0:
        raise ValueError("ord_f1 + k must be positive")
    m1, m2, m3 = m
    return Fraction((a + 1) * m1 + (b + 1) * m2 + (c + 1) * m3 - ord_f1, ord_f1 + k) + d + 1


def expansion_constraints(monos: Sequence[Exponent], val: QuasiMonomialValuation, threshold: int):
    """Linear functionals on coefficient vectors over `monos` whose vanishing means nu >= threshold.

    Each functional picks out the coefficient of x^b in c_j for a pair (j, b)
    with <m,b> + j*w < threshold.
    """
    rows: dict[tuple[int, Exponent], dict[int, int]] = {}
    for col, a in enumerate(monos):
        for j, b, mult in monomial_expansion(a, val.key):
            if dot(val.m, b) + j * val.w < threshold:
                row = rows.setdefault((j, b), {})
                row[col] = row.get(col, 0) + mult
    return [rows[key] for key in sorted(rows)]


def symbolic_constraints(monos: Sequence[Exponent], k: int):
    """Functionals (sparse rows) for membership in the k-th symbolic power, one per alpha.

    Valid for monomials of a single n-degree, where the image of d^alpha f is one term.
    """
    if k <= 0:
        return []
    rows = []
    for alpha in multi_indices(k - 1):
        row = {col: falling(a, alpha) for col, a in enumerate(monos) if falling(a, alpha)}
        if row:
            rows.append(row)
    return rows
