"""Two-dimensional rational cones lying in a plane through the origin of R^3.

Every cone carries a basis of its rank-2 lattice, so membership tests,
Hilbert bases and ray intersections reduce to exact 2x2 problems.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import dot
from .errors import (
    DegenerateCone,
    DegenerateSlice,
    EmbeddedConditionViolated,
    NotOnDividingLine,
    RayNotInCone,
    RayOutsideCone,
    WholePlaneOrthogonal,
)
from .polyhedral import cross, primitive
from .semigroup import BinomialGenerator

Vector = tuple[int, int, int]


def plane_lattice_basis(w: Vector) -> tuple[Vector, Vector]:
    """Basis of the lattice w^perp ∩ Z^3.

    Column-reduces the 1x3 matrix w to (g, 0, 0) by unimodular operations
    (its Smith form); the last two columns of the accumulated transform span
    the kernel.
    """
    row = list(w)
    cols = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]  # cols[j] = j-th column of U

    def combine(i, j, q):
        # column_i -= q * column_j
        row[i] -= q * row[j]
        cols[i] = [a - q * b for a, b in zip(cols[i], cols[j])]

    while sum(1 for x in row if x) > 1:
        nz = [i for i in range(3) if row[i]]
        piv = min(nz, key=lambda i: abs(row[i]))
        for i in nz:
            if i != piv:
                combine(i, piv, row[i] // row[piv])
    kernel = [tuple(cols[i]) for i in range(3) if row[i] == 0]
    if len(kernel) != 2:
        raise ValueError("w must be nonzero")
    return kernel[0], kernel[1]


def _coords_solver(b1: Vector, b2: Vector):
    # pick the 2x2 minor with nonzero determinant
    for i, j in ((0, 1), (0, 2), (1, 2)):
        det = b1[i] * b2[j] - b1[j] * b2[i]
        if det:
            return i, j, det
    raise DegenerateCone("lattice basis is not independent")


@dataclass(frozen=True)
class PlaneCone:
    """cone(r1, r2) inside the plane w^perp, with a basis of w^perp ∩ Z^3."""

    normal: Vector
    r1: Vector
    r2: Vector
    lattice_basis: tuple[Vector, Vector] = field(default=None)

    def __post_init__(self):
        if self.lattice_basis is None:
            object.__setattr__(self, "lattice_basis", plane_lattice_basis(self.normal))
        for r in (self.r1, self.r2):
            if dot(r, self.normal) != 0:
                raise ValueError(f"ray {r} is not in the plane orthogonal to {self.normal}")

    @property
    def degenerate(self) -> bool:
        return not any(cross(self.r1, self.r2))

    def coords(self, m) -> tuple[Fraction, Fraction]:
        """Coordinates of a point of the plane in the lattice basis."""
        b1, b2 = self.lattice_basis
        i, j, det = _coords_solver(b1, b2)
        s = Fraction(m[i] * b2[j] - m[j] * b2[i], det)
        t = Fraction(b1[i] * m[j] - b1[j] * m[i], det)
        return s, t

    def from_coords(self, s, t) -> Vector:
        b1, b2 = self.lattice_basis
        return tuple(s * p + t * q for p, q in zip(b1, b2))

    def ray_coefficients(self, m) -> tuple[Fraction, Fraction]:
        """(alpha, beta) with m = alpha*r1 + beta*r2."""
        return solve_in_rays(self.r1, self.r2, m)

    def contains(self, m) -> bool:
        if dot(m, self.normal) != 0:
            return False
        if self.degenerate:
            return not any(cross(m, self.r1)) and dot(m, self.r1) >= 0
        alpha, beta = self.ray_coefficients(m)
        return alpha >= 0 and beta >= 0

    def to_json(self):
        return [list(self.r1), list(self.r2)]


def solve_in_rays(r1, r2, m) -> tuple[Fraction, Fraction]:
    """Exact (alpha, beta) with m = alpha*r1 + beta*r2; m must lie in their plane."""
    for i, j in ((0, 1), (0, 2), (1, 2)):
        det = r1[i] * r2[j] - r1[j] * r2[i]
        if det:
            alpha = Fraction(m[i] * r2[j] - m[j] * r2[i], det)
            beta = Fraction(r1[i] * m[j] - r1[j] * m[i], det)
            if any(alpha * a + beta * b != c for a, b, c in zip(r1, r2, m)):
                raise ValueError(f"{m} is not in the span of {r1}, {r2}")
            return alpha, beta
    raise DegenerateCone(f"rays {r1}, {r2} are dependent")


def octant_slice(w: Vector) -> PlaneCone:
    """The cone {m >= 0 : <m, w> = 0}."""
    w = tuple(w)
    if not (any(x > 0 for x in w) and any(x < 0 for x in w)):
        raise DegenerateSlice(f"hyperplane orthogonal to {w} meets the octant only in a face of dimension < 2")
    rays = set()
    for i in range(3):
        if w[i] == 0:
            e = [0, 0, 0]
            e[i] = 1
            rays.add(tuple(e))
        for j in range(3):
            if w[i] > 0 > w[j]:
                m = [0, 0, 0]
                m[i] = -w[j]
                m[j] = w[i]
                rays.add(primitive(m))
    r1, r2 = sorted(rays, reverse=True)
    return PlaneCone(primitive(w), r1, r2)


def subdivide_along(sigma: PlaneCone, n: Vector, u2: Vector, v2: Vector) -> tuple[PlaneCone, PlaneCone]:
    """Split sigma along the ray n into the parts where <m,u2> <= <m,v2> and vice versa.

    Both halves keep sigma's ray orientation. When n is an extreme ray of sigma,
    one half degenerates to that ray (r1 == r2).
    """
    n = primitive(tuple(n))
    if not sigma.contains(n):
        raise RayNotInCone(f"{n} is not in the cone {sigma.to_json()}")
    d = tuple(p - q for p, q in zip(u2, v2))
    if dot(n, d) != 0:
        raise NotOnDividingLine(f"<n,u2> != <n,v2> for n = {n}")
    first = PlaneCone(sigma.normal, sigma.r1, n, sigma.lattice_basis)
    second = PlaneCone(sigma.normal, n, sigma.r2, sigma.lattice_basis)
    # <m, u2 - v2> is linear and vanishes at n, so the sign at r1 decides
    s1, s2 = dot(sigma.r1, d), dot(sigma.r2, d)
    if s1 < 0 or (s1 == 0 and s2 > 0):
        return first, second
    return second, first


def _det2(p, q):
    return p[0] * q[1] - p[1] * q[0]


def _ext_gcd(a, b):
    if b == 0:
        return (a, 1, 0) if a >= 0 else (-a, -1, 0)
    g, x, y = _ext_gcd(b, a % b)
    return g, y, x - (a // b) * y


def hilbert_basis_2d(r1: tuple[int, int], r2: tuple[int, int]) -> list[tuple[int, int]]:
    """Hilbert basis of cone(r1, r2) ⊂ Z^2 (primitive rays), ordered from r1 to r2.

    Walks the boundary of conv(cone ∩ Z^2 minus 0): from the current element p,
    the next one is the point e + t*p with det(p, e) = 1 that is closest to p
    while staying inside the cone.
    """
    flip = _det2(r1, r2) < 0
    if flip:
        r1, r2 = r2, r1
    if _det2(r1, r2) == 0:
        raise DegenerateCone("rays are parallel")
    basis = [r1]
    p = r1
    while True:
        D = _det2(p, r2)
        if D == 1:
            basis.append(r2)
            break
        g, x, y = _ext_gcd(p[0], p[1])
        assert g == 1, "ray is not primitive"
        # det(p, e) = p0*e1 - p1*e0 = 1 with e = (-y, x)
        e = (-y, x)
        t = -((_det2(e, r2)) // D)  # ceil(-det(e, r2) / D)
        p = (e[0] + t * p[0], e[1] + t * p[1])
        basis.append(p)
    return basis[::-1] if flip else basis


def hilbert_basis(sigma: PlaneCone) -> list[Vector]:
    """Minimal generating set of the monoid sigma ∩ Z^3, ordered from r1 to r2."""
    if sigma.degenerate:
        raise DegenerateCone(f"cone {sigma.to_json()} is a ray")
    c1 = sigma.coords(sigma.r1)
    c2 = sigma.coords(sigma.r2)
    if any(x.denominator != 1 for x in c1 + c2):
        raise ValueError("rays are not lattice points of the plane")
    r1 = (int(c1[0]), int(c1[1]))
    r2 = (int(c2[0]), int(c2[1]))
    return [sigma.from_coords(s, t) for s, t in hilbert_basis_2d(r1, r2)]


def orthogonal_ray(half: PlaneCone, d: Vector) -> Vector:
    """Primitive generator of the ray of `half` orthogonal to d."""
    line = cross(half.normal, d)
    if not any(line):
        raise WholePlaneOrthogonal(f"{d} is orthogonal to the whole plane")
    line = primitive(line)
    for cand in (line, tuple(-x for x in line)):
        if half.contains(cand):
            return cand
    raise RayOutsideCone(f"the line orthogonal to {d} misses the cone {half.to_json()}")


def compute_G(candidates, rho1: Vector, rho2: Vector) -> list[Vector]:
    """Candidates strictly inside the open cone spanned by rho1 and rho2."""
    out = []
    for m in candidates:
        try:
            alpha, beta = solve_in_rays(rho1, rho2, m)
        except ValueError:
            continue
        if alpha > 0 and beta > 0:
            out.append(tuple(m))
    return out


@dataclass(frozen=True)
class EmbeddedDivisorDatum:
    m: Vector
    w_m: int
    ord_f1: int
    k_m: int

    def to_json(self):
        return {"m": list(self.m), "w": self.w_m, "ord_f1": self.ord_f1, "k_m": self.k_m}


def embedded_data(G, f1: BinomialGenerator, f2: BinomialGenerator) -> list[EmbeddedDivisorDatum]:
    out = []
    for m in G:
        o1 = dot(m, f1.u)
        w = min(dot(m, f2.u), dot(m, f2.v))
        if not o1 < w:
            raise EmbeddedConditionViolated(f"ord_m(f1) = {o1} >= ord_m(f2) = {w} at m = {m}")
        out.append(EmbeddedDivisorDatum(tuple(m), w, o1, sum(m) - 1 + w - o1))
    return out


def embedded_filter(candidates, f1: BinomialGenerator, f2: BinomialGenerator) -> list[Vector]:
    """Candidates where ord_m(f1) < ord_m(f2)."""
    return [tuple(m) for m in candidates if dot(m, f1.u) < min(dot(m, f2.u), dot(m, f2.v))]
