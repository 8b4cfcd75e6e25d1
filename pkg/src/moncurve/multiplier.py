"""Multiplier ideals of a monomial space curve.

For the curve ideal I with term ideal tau and binomial generators f1, f2, ...
sorted by n-order, an element f lies in J(I^lam) iff

  (i)   f is in the symbolic power I^(floor(lam - 1)),
  (ii)  every monomial of f is in J(tau^lam)  (Howald),
  (iii) nu_m(f) >= floor(w_m*lam - k_m) for each embedded divisor m in G,

where nu_m sends x_i to m_i and f1 to w_m = ord_m(f2), and
k_m = m1 + m2 + m3 - 1 + w_m - ord_m(f1).  When ord_n(f1) = ord_n(f2) the set
G is empty.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Optional

from . import cones
from .algebra import Exponent, SparsePolynomial, dot, monomial_text
from .errors import (
    DegenerateCone,
    EmbeddedConditionViolated,
    NonpositiveLambda,
    RayOutsideCone,
)
from .linalg import Span, nullspace
from .polyhedral import (
    NewtonPolyhedron,
    howald_member,
    howald_threshold,
    lct_monomial,
    newton_polyhedron,
)
from .semigroup import (
    BinomialGenerator,
    CurveSpec,
    MonomialIdeal,
    minimal_generators,
    monomials_of_degree,
    term_ideal,
    validate_curve,
)
from .valuation import (
    MonomialValuation,
    QuasiMonomialValuation,
    ValuationCondition,
    expansion_constraints,
    symbolic_constraints,
    symbolic_power_member,
)

READING_NOTE = (
    "the G-conditions use the quasi-monomial valuation nu_m (x_i -> m_i, f1 -> ord_m(f2)); "
    "pass plain_ord=True for the monomial reading ord_m"
)


def _positive(lam) -> Fraction:
    lam = Fraction(lam)
    if lam <= 0:
        raise NonpositiveLambda(f"lambda must be positive, got {lam}")
    return lam


def _vec(v):
    return "[" + " ".join(str(x) for x in v) + "]"


@dataclass(frozen=True, eq=False)
class CurveAnalysis:
    spec: CurveSpec
    generators: tuple[BinomialGenerator, ...]
    tau: MonomialIdeal
    newton: NewtonPolyhedron
    corollary_path: bool
    G_data: tuple[cones.EmbeddedDivisorDatum, ...]
    sigma_report: dict
    lct_tau: Fraction
    lct: Fraction
    warnings: tuple[str, ...] = ()

    @property
    def n(self) -> tuple[int, int, int]:
        return self.spec.n

    @property
    def f1(self) -> BinomialGenerator:
        return self.generators[0]

    def valuations(self, plain_ord: bool = False):
        """(valuation, condition) pairs for the G part."""
        out = []
        for d in self.G_data:
            if plain_ord:
                val = MonomialValuation(d.m)
                cond = ValuationCondition("monomial", d.w_m, d.k_m)
            else:
                val = QuasiMonomialValuation(d.m, self.f1, d.w_m)
                cond = ValuationCondition("quasi-monomial", d.w_m, d.k_m)
            out.append((val, cond))
        return out

    def to_json(self) -> dict:
        return {
            "n": list(self.n),
            "generators": [g.to_json() for g in self.generators],
            "tau": self.tau.to_json(),
            "newton_facets": self.newton.to_json(),
            "corollary_path": self.corollary_path,
            "G": [d.to_json() for d in self.G_data],
            "lct": str(self.lct),
            "lct_tau": str(self.lct_tau),
            "sigma": self.sigma_report,
            "valuation_reading": READING_NOTE,
            "warnings": list(self.warnings),
        }


def _half_label(gen: BinomialGenerator, which: str) -> str:
    return monomial_text(gen.u if which == "u" else gen.v)


def _cone_part(n, f1: BinomialGenerator, f2: BinomialGenerator, warnings: list[str]):
    """G and the intermediate cone data, for ord_n(f1) < ord_n(f2)."""
    sigma = cones.octant_slice(f1.direction)
    half_u, half_v = cones.subdivide_along(sigma, n, f2.u, f2.v)
    bases = []
    for half in (half_u, half_v):
        try:
            bases.append(cones.hilbert_basis(half))
        except DegenerateCone:
            warnings.append(f"half-cone {half.to_json()} degenerates to a ray")
            bases.append([half.r1])
    union = []
    for m in bases[0] + bases[1]:
        if m not in union:
            union.append(m)
    filtered = cones.embedded_filter(union, f1, f2)
    rhos: list[Optional[tuple]] = [None, None]
    try:
        rhos[0] = cones.orthogonal_ray(half_u, tuple(a - b for a, b in zip(f1.u, f2.u)))
        rhos[1] = cones.orthogonal_ray(half_v, tuple(a - b for a, b in zip(f1.v, f2.v)))
        G = cones.compute_G(union, rhos[0], rhos[1])
        if G != filtered:
            warnings.append(f"open-subcone G {G} differs from the ord_m(f1) < ord_m(f2) filter {filtered}; using the filter")
            G = filtered
    except RayOutsideCone as exc:
        warnings.append(f"{exc}; G taken from the ord_m(f1) < ord_m(f2) filter")
        G = filtered
    lu, lv = _half_label(f2, "u"), _half_label(f2, "v")
    report = {
        "sigma": sigma.to_json(),
        "halves": [
            {"label": lu, "rays": half_u.to_json(), "hilbert_basis": [list(m) for m in bases[0]],
             "rho": list(rhos[0]) if rhos[0] else None},
            {"label": lv, "rays": half_v.to_json(), "hilbert_basis": [list(m) for m in bases[1]],
             "rho": list(rhos[1]) if rhos[1] else None},
        ],
        "G": [list(m) for m in G],
    }
    return G, report


def analyze(n) -> CurveAnalysis:
    """Run the whole construction for the curve t -> (t^n1, t^n2, t^n3)."""
    spec = validate_curve(n)
    gens = tuple(minimal_generators(spec))
    f1, f2 = gens[0], gens[1]
    tau = term_ideal(spec)
    newton = newton_polyhedron(tau)
    lct_tau = lct_monomial(newton)
    warnings: list[str] = []
    ties = [g for g in gens if g.order == f2.order]
    if len(ties) > 1:
        warnings.append(f"several generators share ord_n = {f2.order}; f2 chosen by graded-lex tie-break on the leading term")
    corollary = f1.order == f2.order
    if corollary:
        G, report = [], {"sigma": None, "halves": [], "G": []}
    else:
        G, report = _cone_part(spec.n, f1, f2, warnings)
    try:
        data = tuple(cones.embedded_data(G, f1, f2))
    except EmbeddedConditionViolated:
        raise
    candidates = [lct_tau, Fraction(2)] + [Fraction(d.k_m + 1, d.w_m) for d in data]
    lct = min(candidates)
    if lct == 2 and lct < lct_tau and all(Fraction(d.k_m + 1, d.w_m) > 2 for d in data):
        warnings.append("lct capped at 2 by the symbolic-power part")
    return CurveAnalysis(spec, gens, tau, newton, corollary, data, report, lct_tau, lct, tuple(warnings))


# ------------------------------------------------------------------ membership

def member(ca: CurveAnalysis, f: SparsePolynomial, lam, plain_ord: bool = False):
    """Decide f in J(I^lam); returns (verdict, breakdown of the three parts)."""
    lam = _positive(lam)
    if f.is_zero():
        return True, {"note": "the zero polynomial lies in every ideal", "symbolic": True,
                      "term_ideal": True, "valuations": []}
    k = math.floor(lam - 1)
    sym_ok = symbolic_power_member(ca.spec, f, k)
    failing = [a for a in f.support() if not howald_member(ca.newton, a, lam)]
    vals = []
    for val, cond in ca.valuations(plain_ord):
        value = val.value(f)
        thr = cond.threshold(lam)
        vals.append({"m": list(val.m), "value": value, "threshold": thr, "ok": value >= thr})
    verdict = sym_ok and not failing and all(v["ok"] for v in vals)
    breakdown = {
        "symbolic": sym_ok,
        "symbolic_order": max(k, 0),
        "term_ideal": not failing,
        "failing_monomials": [monomial_text(a) for a in failing],
        "valuations": vals,
    }
    return verdict, breakdown


@dataclass(frozen=True)
class GradedPiece:
    """The n-degree d part of J(I^lam): a subspace of Q^monomials."""

    degree: int
    monomials: tuple[Exponent, ...]
    basis: tuple[tuple[Fraction, ...], ...]  # reduced echelon rows

    @property
    def dim(self) -> int:
        return len(self.basis)

    def polynomials(self) -> list[SparsePolynomial]:
        return [to_poly(self.monomials, row) for row in self.basis]

    def span(self) -> Span:
        return Span(len(self.monomials), self.basis)


def to_poly(monos, vec) -> SparsePolynomial:
    return SparsePolynomial({a: c for a, c in zip(monos, vec) if c})


def piece_constraints(ca: CurveAnalysis, lam: Fraction, monos, plain_ord: bool = False):
    rows = []
    for col, a in enumerate(monos):
        if not howald_member(ca.newton, a, lam):
            rows.append({col: 1})
    rows.extend(symbolic_constraints(monos, math.floor(lam - 1)))
    for val, cond in ca.valuations(plain_ord):
        thr = cond.threshold(lam)
        if plain_ord:
            rows.extend({col: 1} for col, a in enumerate(monos) if dot(val.m, a) < thr)
        else:
            rows.extend(expansion_constraints(monos, val, thr))
    return rows


@lru_cache(maxsize=4096)
def _graded_piece(ca: CurveAnalysis, lam: Fraction, d: int, plain_ord: bool) -> GradedPiece:
    monos = tuple(monomials_of_degree(ca.n, d))
    if not monos:
        return GradedPiece(d, monos, ())
    rows = piece_constraints(ca, lam, monos, plain_ord)
    basis = nullspace(rows, len(monos))
    return GradedPiece(d, monos, tuple(tuple(r) for r in basis))


def graded_piece(ca: CurveAnalysis, lam, d: int, plain_ord: bool = False) -> GradedPiece:
    """Exact basis of the degree-d part of J(I^lam) for the grading deg x_i = n_i."""
    lam = _positive(lam)
    if d < 0:
        raise ValueError("degree must be nonnegative")
    return _graded_piece(ca, lam, d, plain_ord)


def default_degree_bound(ca: CurveAnalysis, lam) -> int:
    return math.ceil(Fraction(lam)) * ca.generators[-1].order + sum(ca.n) + max(ca.n)


@dataclass(frozen=True)
class GeneratorReport:
    lam: Fraction
    degree_bound: int
    generators: tuple[tuple[int, SparsePolynomial], ...]
    warnings: tuple[str, ...] = ()

    @property
    def polynomials(self) -> list[SparsePolynomial]:
        return [f for _, f in self.generators]

    def to_json(self):
        return {
            "lambda": str(self.lam),
            "complete_up_to_degree": self.degree_bound,
            "generators": [{"degree": d, "poly": str(f)} for d, f in self.generators],
            "warnings": list(self.warnings),
        }


def _shifted(piece: GradedPiece, i: int, monos: tuple[Exponent, ...]) -> list[dict[int, Fraction]]:
    index = {a: j for j, a in enumerate(monos)}
    out = []
    for row in piece.basis:
        vec = {}
        for a, c in zip(piece.monomials, row):
            if c:
                b = list(a)
                b[i] += 1
                vec[index[tuple(b)]] = c
        out.append(vec)
    return out


def generators_up_to(ca: CurveAnalysis, lam, D: Optional[int] = None, plain_ord: bool = False) -> GeneratorReport:
    """Minimal homogeneous generators of J(I^lam) of n-degree <= D."""
    lam = _positive(lam)
    if D is None:
        D = default_degree_bound(ca, lam)
    if D < 0:
        raise ValueError("degree bound must be nonnegative")
    found = []
    for d in range(D + 1):
        piece = graded_piece(ca, lam, d, plain_ord)
        if not piece.dim:
            continue
        span = Span(len(piece.monomials))
        for i, ni in enumerate(ca.n):
            if d >= ni:
                for v in _shifted(graded_piece(ca, lam, d - ni, plain_ord), i, piece.monomials):
                    span.add(v)
        for row in piece.basis:
            if span.add(row):
                found.append((d, to_poly(piece.monomials, row)))
    warnings = []
    window = math.ceil(max(ca.n))
    late = [d for d, _ in found if d > D - window]
    if late and D > 0:
        warnings.append(f"new generators in degrees {sorted(set(late))} near the bound {D}; raise the degree bound")
    return GeneratorReport(lam, D, tuple(found), tuple(warnings))


# ------------------------------------------------------------------ jumps

@dataclass(frozen=True)
class JumpReport:
    upto: Fraction
    degree_bound: int
    candidates: tuple[Fraction, ...]
    verified_jumps: tuple[Fraction, ...]
    witnesses: dict = field(default_factory=dict)  # jump -> (degree, polynomial)
    caveat: str = ""

    def to_json(self, with_candidates: bool = True):
        out = {
            "upto": str(self.upto),
            "degree_bound": self.degree_bound,
            "verified_jumps": [str(x) for x in self.verified_jumps],
            "witnesses": [
                {"jump": str(x), "degree": self.witnesses[x][0], "poly": str(self.witnesses[x][1])}
                for x in self.verified_jumps
            ],
            "caveat": self.caveat,
        }
        if with_candidates:
            out["candidates"] = [str(x) for x in self.candidates]
        return out


def jump_candidates(ca: CurveAnalysis, T, D: int) -> list[Fraction]:
    """Every lam in (0, T] where one of the three conditions can change within degree D."""
    T = _positive(T)
    cands = {Fraction(j) for j in range(2, math.floor(T) + 1)}
    for d in range(D + 1):
        for a in monomials_of_degree(ca.n, d):
            t = howald_threshold(ca.newton, a)
            if t is not None and t <= T:
                cands.add(t)
    for datum in ca.G_data:
        j = 1
        while Fraction(datum.k_m + j, datum.w_m) <= T:
            cands.add(Fraction(datum.k_m + j, datum.w_m))
            j += 1
    return sorted(c for c in cands if 0 < c <= T)


def jumping_numbers(ca: CurveAnalysis, T, D: Optional[int] = None, plain_ord: bool = False) -> JumpReport:
    """Jumping numbers in (0, T], verified on graded pieces of n-degree <= D."""
    T = _positive(T)
    if D is None:
        D = default_degree_bound(ca, T)
    cands = jump_candidates(ca, T, D)
    verified = []
    witnesses = {}
    prev = Fraction(0)
    for xi in cands:
        below = (prev + xi) / 2
        for d in range(D + 1):
            hi = graded_piece(ca, below, d, plain_ord)
            lo = graded_piece(ca, xi, d, plain_ord)
            if lo.dim < hi.dim:
                lo_span = lo.span()
                row = next(r for r in hi.basis if not lo_span.contains(r))
                verified.append(xi)
                witnesses[xi] = (d, to_poly(hi.monomials, row))
                break
        prev = xi
    caveat = f"verification compares graded pieces of n-degree <= {D} only"
    return JumpReport(T, D, tuple(cands), tuple(verified), witnesses, caveat)


def lct(ca: CurveAnalysis) -> Fraction:
    return ca.lct


# ------------------------------------------------------------------ text rendering

def render_analysis(ca: CurveAnalysis) -> str:
    lines = [f"curve n = {_vec(ca.n)}", "generators:"]
    for i, g in enumerate(ca.generators, 1):
        lines.append(f"  f{i} = {monomial_text(g.u)} - {monomial_text(g.v)}    ord_n = {g.order}")
    lines.append("tau = (" + ", ".join(monomial_text(a) for a in ca.tau.generators) + ")")
    lines.append("newton facets: " + ", ".join(f"<{_vec(f.a)}, v> >= {f.b}" for f in ca.newton.facets))
    lines.append(f"lct(tau) = {ca.lct_tau}")
    if ca.corollary_path:
        lines.append("ord_n(f1) = ord_n(f2): no embedded divisors, G = {}")
    else:
        rep = ca.sigma_report
        lines.append(f"sigma = <{_vec(rep['sigma'][0])}, {_vec(rep['sigma'][1])}>")
        for half in rep["halves"]:
            lines.append(f"sigma_{half['label']} = <{_vec(half['rays'][0])}, {_vec(half['rays'][1])}>")
        for half in rep["halves"]:
            lines.append(f"G_{half['label']} = {{" + ", ".join(_vec(m) for m in half["hilbert_basis"]) + "}")
        for half in rep["halves"]:
            rho = _vec(half["rho"]) if half["rho"] else "(outside the half-cone)"
            lines.append(f"rho_{half['label']} = {rho}")
        lines.append("G = {" + ", ".join(_vec(d.m) for d in ca.G_data) + "}")
        for d in ca.G_data:
            lines.append(
                f"m = {_vec(d.m)}: ord_m(f1) = {d.ord_f1}, w_m = ord_m(f2) = {d.w_m}, k_m = {d.k_m}, "
                f"condition nu(f) >= floor({d.w_m}*lambda - {d.k_m})"
            )
    lines.append(f"lct = {ca.lct}")
    for w in ca.warnings:
        lines.append(f"warning: {w}")
    return "\n".join(lines)
