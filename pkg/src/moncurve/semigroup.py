"""The monomial curve t -> (t^n1, t^n2, t^n3): its binomial ideal and term ideal."""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product
from typing import Iterable

from .algebra import Exponent, SparsePolynomial, dot, grlex_key
from .errors import NonPositiveEntry, NotPrimitive


@dataclass(frozen=True)
class CurveSpec:
    n: tuple[int, int, int]

    def to_json(self):
        return list(self.n)


@dataclass(frozen=True)
class BinomialGenerator:
    """x^u - x^v with <n,u> = <n,v> = order."""

    u: Exponent
    v: Exponent
    order: int

    @property
    def poly(self) -> SparsePolynomial:
        return SparsePolynomial.binomial(self.u, self.v)

    @property
    def direction(self) -> tuple[int, int, int]:
        return tuple(p - q for p, q in zip(self.u, self.v))

    def swapped(self) -> "BinomialGenerator":
        return BinomialGenerator(self.v, self.u, self.order)

    def to_json(self):
        return {"u": list(self.u), "v": list(self.v), "order": self.order}


def validate_curve(n: Iterable[int]) -> CurveSpec:
    n = tuple(int(x) for x in n)
    if len(n) != 3:
        raise ValueError("a curve needs exactly three weights")
    if min(n) < 1:
        raise NonPositiveEntry(f"all entries must be positive, got {n}")
    g = math.gcd(*n)
    if g != 1:
        reduced = tuple(x // g for x in n)
        raise NotPrimitive(f"{n} is not primitive (gcd {g}); divide by the gcd: {reduced}")
    return CurveSpec(n)


def _as_spec(spec) -> CurveSpec:
    return spec if isinstance(spec, CurveSpec) else validate_curve(spec)


def ord_weight(m: Iterable[int], f: SparsePolynomial) -> float | int:
    """min <m, a> over the support of f; ``math.inf`` for f = 0."""
    m = tuple(m)
    return min((dot(m, a) for a in f.terms), default=math.inf)


def semigroup_members(gens: Iterable[int], bound: int) -> list[bool]:
    """reachable[s] for 0 <= s <= bound, s a nonnegative combination of gens."""
    reachable = [False] * (bound + 1)
    reachable[0] = True
    for g in gens:
        for s in range(g, bound + 1):
            if reachable[s - g]:
                reachable[s] = True
    return reachable


def pure_power_exponents(spec) -> tuple[int, int, int]:
    """c_i = min{c >= 1 : c*n_i lies in the semigroup of the other two weights}."""
    n = _as_spec(spec).n
    out = []
    for i in range(3):
        others = [n[j] for j in range(3) if j != i]
        # c = min(others) always works since n_i*n_j is in <n_j>
        bound = n[i] * min(others)
        reach = semigroup_members(others, bound)
        out.append(next(c for c in range(1, bound // n[i] + 1) if reach[c * n[i]]))
    return tuple(out)


def monomials_of_degree(n: tuple[int, int, int], d: int) -> list[Exponent]:
    """All exponent vectors a >= 0 with <n, a> = d, grlex descending."""
    n1, n2, n3 = n
    out = []
    for a1 in range(d // n1 + 1):
        r1 = d - a1 * n1
        for a2 in range(r1 // n2 + 1):
            r2 = r1 - a2 * n2
            if r2 % n3 == 0:
                out.append((a1, a2, r2 // n3))
    out.sort(key=grlex_key, reverse=True)
    return out


def _share_variable(a: Exponent, b: Exponent) -> bool:
    return any(p and q for p, q in zip(a, b))


def _components(monos: list[Exponent]) -> list[list[Exponent]]:
    parent = list(range(len(monos)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(len(monos)):
        for j in range(i + 1, len(monos)):
            if _share_variable(monos[i], monos[j]):
                parent[find(i)] = find(j)
    groups: dict[int, list[Exponent]] = {}
    for i, a in enumerate(monos):
        groups.setdefault(find(i), []).append(a)
    return list(groups.values())


def _is_pure_power(a: Exponent) -> bool:
    return sum(1 for e in a if e) == 1


def normalize_binomial(a: Exponent, b: Exponent, order: int) -> BinomialGenerator:
    """Put the leading term first: a pure power if exactly one term is one, else the grlex-larger."""
    pa, pb = _is_pure_power(a), _is_pure_power(b)
    if pa != pb:
        return BinomialGenerator(a, b, order) if pa else BinomialGenerator(b, a, order)
    if grlex_key(a) >= grlex_key(b):
        return BinomialGenerator(a, b, order)
    return BinomialGenerator(b, a, order)


def minimal_generators(spec) -> list[BinomialGenerator]:
    """Minimal binomial generators of the curve ideal, sorted by n-order.

    In each n-degree d, the binomials coming from lower degrees span the
    differences of monomials that share a variable, so the new minimal
    generators are one binomial per extra connected component of the
    "shares a variable" graph on the degree-d monomials.  All of them live in
    degrees at most max(c_i n_i).
    """
    spec = _as_spec(spec)
    n = spec.n
    c = pure_power_exponents(spec)
    top = max(ci * ni for ci, ni in zip(c, n))
    gens = []
    for d in range(1, top + 1):
        monos = monomials_of_degree(n, d)
        if len(monos) < 2:
            continue
        comps = _components(monos)
        if len(comps) < 2:
            continue
        reps = sorted((max(comp, key=grlex_key) for comp in comps), key=grlex_key, reverse=True)
        for other in reps[1:]:
            gens.append(normalize_binomial(reps[0], other, d))
    gens.sort(key=lambda g: (g.order, tuple(-k for k in grlex_key(g.u))))
    return gens


@dataclass(frozen=True)
class MonomialIdeal:
    generators: tuple[Exponent, ...]

    def __post_init__(self):
        if not self.generators:
            raise ValueError("a monomial ideal needs at least one generator")

    @classmethod
    def from_exponents(cls, exps: Iterable[Exponent]) -> "MonomialIdeal":
        return cls(tuple(minimalize(exps)))

    def contains(self, a: Exponent) -> bool:
        return any(all(g[i] <= a[i] for i in range(3)) for g in self.generators)

    def max_exponent(self) -> int:
        return max(max(g) for g in self.generators)

    def to_json(self):
        return [list(g) for g in self.generators]


def minimalize(exps: Iterable[Exponent]) -> list[Exponent]:
    """Minimal elements under componentwise <=, grlex ascending."""
    pts = sorted(set(tuple(a) for a in exps), key=lambda a: (sum(a), a))
    kept: list[Exponent] = []
    for a in pts:
        if not any(all(g[i] <= a[i] for i in range(3)) for g in kept):
            kept.append(a)
    return kept


def _degree_counts(n: tuple[int, int, int], top: int) -> list[int]:
    """Number of monomials of each n-degree up to top, capped at 2."""
    cnt = [0] * (top + 1)
    cnt[0] = 1
    for w in n:
        for d in range(w, top + 1):
            cnt[d] = min(2, cnt[d] + cnt[d - w])
    return cnt


def in_term_ideal(n: tuple[int, int, int], a: Exponent, counts: list[int] | None = None) -> bool:
    """x^a is in the term ideal iff its n-degree is shared with another monomial."""
    d = dot(n, a)
    if counts is None or d >= len(counts):
        return len(monomials_of_degree(n, d)) >= 2
    return counts[d] >= 2


def _tau_display_key(n, a):
    return (dot(n, a), sum(1 for e in a if e), tuple(-k for k in grlex_key(a)))


def term_ideal(spec) -> MonomialIdeal:
    """Minimal generators of the smallest monomial ideal containing the curve ideal.

    The curve ideal is spanned by differences of monomials of equal n-degree,
    so x^a is in it exactly when some other monomial has n-degree <n, a>.
    Every x_i^{c_i} is such a monomial, hence minimal generators have
    a_i <= c_i and the search box below is exhaustive.
    """
    spec = _as_spec(spec)
    n = spec.n
    c = pure_power_exponents(spec)
    counts = _degree_counts(n, dot(n, c))
    member = lambda a: counts[dot(n, a)] >= 2  # noqa: E731
    found = []
    for a in product(range(c[0] + 1), range(c[1] + 1), range(c[2] + 1)):
        if not member(a):
            continue
        if all(a[i] == 0 or not member(a[:i] + (a[i] - 1,) + a[i + 1:]) for i in range(3)):
            found.append(a)
    for i in range(3):
        pure = [0, 0, 0]
        pure[i] = c[i]
        assert tuple(pure) in found, "pure power missing from term ideal"
    found.sort(key=lambda a: _tau_display_key(n, a))
    return MonomialIdeal(tuple(found))
