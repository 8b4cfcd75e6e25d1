"""Newton polyhedra of monomial ideals in three variables and Howald's description
of their multiplier ideals."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product

from .algebra import Exponent, dot
from .errors import BoxBoundExceeded, NonpositiveLambda
from .semigroup import MonomialIdeal, minimalize

AXES = ((1, 0, 0), (0, 1, 0), (0, 0, 1))


@dataclass(frozen=True)
class Facet:
    """Halfspace <a, x> >= b."""

    a: tuple[int, int, int]
    b: int

    def to_json(self):
        return {"a": list(self.a), "b": self.b}


@dataclass(frozen=True)
class NewtonPolyhedron:
    """conv(generators) + R^3_{>=0}, stored as its non-coordinate facets.

    The halfspaces x_i >= 0 are implicit and not listed.
    """

    facets: tuple[Facet, ...]
    generators: tuple[Exponent, ...]

    def to_json(self):
        return [f.to_json() for f in self.facets]


def cross(p, q):
    return (p[1] * q[2] - p[2] * q[1], p[2] * q[0] - p[0] * q[2], p[0] * q[1] - p[1] * q[0])


def sub(p, q):
    return tuple(x - y for x, y in zip(p, q))


def primitive(v):
    g = math.gcd(*v)
    return tuple(x // g for x in v) if g else tuple(v)


def rank3(vectors) -> int:
    vs = [tuple(v) for v in vectors if any(v)]
    if not vs:
        return 0
    base = vs[0]
    plane = None
    for v in vs[1:]:
        c = cross(base, v)
        if any(c):
            plane = c
            break
    if plane is None:
        return 1
    if any(dot(plane, v) for v in vs):
        return 3
    return 2


def _candidate_normals(points):
    for p, q, r in combinations(points, 3):
        yield cross(sub(q, p), sub(r, p))
    for p, q in combinations(points, 2):
        for e in AXES:
            yield cross(sub(q, p), e)
    for e, f in combinations(AXES, 2):
        yield cross(e, f)


def newton_polyhedron(ideal: MonomialIdeal) -> NewtonPolyhedron:
    """Facet description of the Newton polyhedron by exhaustive normal enumeration."""
    pts = list(minimalize(ideal.generators))
    facets = set()
    for normal in _candidate_normals(pts):
        if not any(normal):
            continue
        if all(x <= 0 for x in normal):
            normal = tuple(-x for x in normal)
        if any(x < 0 for x in normal):
            continue
        a = primitive(normal)
        b = min(dot(a, p) for p in pts)
        if b == 0:
            continue  # only the implicit coordinate halfspaces have b = 0
        tight = [p for p in pts if dot(a, p) == b]
        span = [sub(p, tight[0]) for p in tight[1:]] + [e for e, ai in zip(AXES, a) if ai == 0]
        if rank3(span) == 2:
            facets.add(Facet(a, b))
    ordered = sorted(facets, key=lambda f: (f.b, f.a))
    return NewtonPolyhedron(tuple(ordered), tuple(pts))


def _check_lambda(lam) -> Fraction:
    lam = Fraction(lam)
    if lam <= 0:
        raise NonpositiveLambda(f"lambda must be positive, got {lam}")
    return lam


def howald_member(np: NewtonPolyhedron, v: Exponent, lam) -> bool:
    """x^v lies in the multiplier ideal at lam iff v+1 is interior to lam*P."""
    lam = _check_lambda(lam)
    p, q = lam.numerator, lam.denominator
    w = (v[0] + 1, v[1] + 1, v[2] + 1)
    return all(q * dot(f.a, w) > p * f.b for f in np.facets)


def howald_threshold(np: NewtonPolyhedron, v: Exponent) -> Fraction | None:
    """The lam at which x^v leaves the multiplier ideal (None: never)."""
    w = (v[0] + 1, v[1] + 1, v[2] + 1)
    return min((Fraction(dot(f.a, w), f.b) for f in np.facets), default=None)


def howald_generators(np: NewtonPolyhedron, lam) -> MonomialIdeal:
    """Minimal monomial generators of the multiplier ideal at lam."""
    lam = _check_lambda(lam)
    p, q = lam.numerator, lam.denominator
    top = max(max(g) for g in np.generators)
    box = math.ceil(lam * top) + 1
    found = []
    for v1, v2 in product(range(box + 1), repeat=2):
        lowest = 0
        feasible = True
        for f in np.facets:
            a1, a2, a3 = f.a
            rest = p * f.b - q * (a1 * (v1 + 1) + a2 * (v2 + 1))
            if a3 == 0:
                if rest >= 0:
                    feasible = False
                    break
                continue
            # need q*a3*(v3+1) > rest
            need = rest // (q * a3)  # v3 + 1 >= need + 1
            lowest = max(lowest, need)
        if feasible and lowest <= box:
            found.append((v1, v2, lowest))
    gens = minimalize(found)
    for g in gens:
        if max(g) >= box:
            raise BoxBoundExceeded(f"generator {g} touches the search box {box}")
    return MonomialIdeal(tuple(gens))


def lct_monomial(np: NewtonPolyhedron) -> Fraction:
    """Log canonical threshold of the monomial ideal: min over facets of <a,1>/b."""
    return min(Fraction(sum(f.a), f.b) for f in np.facets)
