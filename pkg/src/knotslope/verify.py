"""Per-knot reports and the theorem and identity verdicts.

Every check is tri-state: ``holds``, ``fails`` or ``not-applicable`` when the
hypothesis (a nonempty reduced alternating diagram) is not met.  Checks never
raise; a computation error is recorded on the report instead.
"""

from __future__ import annotations

import enum
import time
from dataclasses import dataclass, field, fields
from fractions import Fraction
from typing import Any, Iterable

from .diagram import (
    Color,
    Coloring,
    PlanarDiagram,
    build_diagram,
    checkerboard_coloring,
    crossing_signs,
    is_alternating,
    is_reduced,
)
from .errors import KnotError, NonIntegralExponent
from .laurent import LaurentPolynomial
from .oracles import bracket_oracle, signature_oracle  # noqa: F401  (re-exported)
from .signature import determinant, eta, goeritz_matrix, knot_signature, symmetric_signature
from .state_sum import (
    DEFAULT_MAX_CROSSINGS,
    all_negative,
    all_positive,
    degree_bounds,
    is_adequate,
    jones_degrees,
    jones_polynomial,
)
from .surfaces import boundary_slope, layered_slope


class Verdict(str, enum.Enum):
    HOLDS = "holds"
    FAILS = "fails"
    NA = "not-applicable"

    @classmethod
    def of(cls, ok: bool) -> Verdict:
        return cls.HOLDS if ok else cls.FAILS


CHECKS = (
    "thm31_max", "thm31_min",
    "id_crplus", "id_crminus", "id_crossings", "id_span", "id_sigma_g", "id_mu",
    "deg_upper", "deg_lower",
    "det_jones_cross_check",
    "expected",
)
THEOREM_CHECKS = ("thm31_max", "thm31_min")
IDENTITY_CHECKS = ("id_crplus", "id_crminus", "id_crossings", "id_span", "id_sigma_g", "id_mu")
EXTERNAL_CHECKS = ("det_jones_cross_check", "expected")


def proof_shading(d: PlanarDiagram) -> tuple[PlanarDiagram, Coloring]:
    """The shading of a reduced alternating diagram with every eta equal to -1.

    Eta is constant on such a diagram, so when the default shading gives +1
    the colours are swapped by making a black face the unbounded one.
    """
    col = checkerboard_coloring(d)
    if d.n == 0 or eta(d, col, 0) < 0:
        return d, col
    flipped = d.with_outer(col.faces_of(Color.BLACK)[0])
    return flipped, checkerboard_coloring(flipped)


def region_crossing_counts(d: PlanarDiagram, coloring: Coloring, regions: tuple[int, ...]):
    """``N[i]`` crossings on bounded region i, ``N2[i][j]`` crossings joining regions i and j.

    Indices follow ``regions[1:]``; region 0 is the unbounded one.
    """
    index = {f: i - 1 for i, f in enumerate(regions)}
    m = len(regions) - 1
    n_i = [0] * m
    n_ij = [[0] * m for _ in range(m)]
    for c in range(d.n):
        q = d.corner_face[c]
        w1, w2 = (q[1], q[3]) if coloring[q[0]] is Color.BLACK else (q[0], q[2])
        i, j = index[w1], index[w2]
        for k in {i, j}:
            if k >= 0:
                n_i[k] += 1
        if i != j and i >= 0 and j >= 0:
            n_ij[i][j] += 1
            n_ij[j][i] += 1
    return n_i, n_ij


def quadratic_form_expansion(n_i: list[int], n_ij: list[list[int]], v: list[int]) -> int:
    """``-sum N_ij (v_i - v_j)^2 - sum v_i^2 (N_i - sum_j N_ij)`` for the all-(-1) Goeritz form."""
    m = len(v)
    total = 0
    for i in range(m):
        for j in range(i + 1, m):
            total -= n_ij[i][j] * (v[i] - v[j]) ** 2
        total -= v[i] ** 2 * (n_i[i] - sum(n_ij[i][j] for j in range(m) if j != i))
    return total


@dataclass
class KnotReport:
    name: str | None
    pd: str
    crossings: int | None = None
    cr_plus: int | None = None
    cr_minus: int | None = None
    writhe: int | None = None
    alternating: bool | None = None
    reduced: bool | None = None
    s_plus: int | None = None
    s_minus: int | None = None
    adequate_plus: bool | None = None
    adequate_minus: bool | None = None
    jones: LaurentPolynomial | None = None
    jones_min_deg: int | None = None
    jones_max_deg: int | None = None
    bound_upper: Fraction | None = None
    bound_lower: Fraction | None = None
    slope_max: int | None = None
    slope_min: int | None = None
    layered_max: int | None = None
    layered_min: int | None = None
    goeritz: tuple[tuple[int, ...], ...] | None = None
    sigma_g: int | None = None
    mu: int | None = None
    sigma: int | None = None
    determinant: int | None = None
    checks: dict[str, Verdict] = field(default_factory=lambda: {k: Verdict.NA for k in CHECKS})
    error: str | None = None
    elapsed_ms: float | None = None

    def to_json(self, timing: bool = False) -> dict[str, Any]:
        out: dict[str, Any] = {}
        for f in fields(self):
            v = getattr(self, f.name)
            if f.name == "elapsed_ms":
                if timing:
                    out[f.name] = v
                continue
            if f.name == "jones":
                v = None if v is None else {"terms": v.to_terms()}
            elif f.name == "goeritz":
                v = None if v is None else {"size": len(v), "rows": [list(r) for r in v]}
            elif f.name == "checks":
                v = {k: c.value for k, c in v.items()}
            elif isinstance(v, Fraction):
                v = _fraction_json(v)
            out[f.name] = v
        return out

    @classmethod
    def from_json(cls, data: dict[str, Any]) -> KnotReport:
        kw = dict(data)
        if kw.get("jones") is not None:
            kw["jones"] = LaurentPolynomial.from_terms(kw["jones"]["terms"], "t")
        if kw.get("goeritz") is not None:
            kw["goeritz"] = tuple(tuple(r) for r in kw["goeritz"]["rows"])
        for k in ("bound_upper", "bound_lower"):
            if kw.get(k) is not None:
                kw[k] = Fraction(kw[k])
        kw["checks"] = {k: Verdict(v) for k, v in kw["checks"].items()}
        return cls(**kw)

    def verdicts(self, names: Iterable[str]) -> list[Verdict]:
        return [self.checks[k] for k in names]


def _fraction_json(v: Fraction) -> int | str:
    return v.numerator if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def compare_expected(report: KnotReport, expected: dict[str, Any]) -> Verdict:
    """Regression check against a table entry's expected values."""
    if not expected:
        return Verdict.NA
    actual = {
        "alternating": report.alternating,
        "sigma": report.sigma,
        "det": report.determinant,
        "jones": report.jones,
        "crossings": report.crossings,
    }
    for key, want in expected.items():
        if key in actual and actual[key] != want:
            return Verdict.FAILS
    return Verdict.HOLDS


def _fill(report: KnotReport, d: PlanarDiagram, max_crossings: int) -> None:
    _, plus, minus, w = crossing_signs(d)
    report.crossings, report.cr_plus, report.cr_minus, report.writhe = d.n, plus, minus, w
    report.alternating, report.reduced = is_alternating(d), is_reduced(d)
    sp, sm = all_positive(d), all_negative(d)
    report.s_plus, report.s_minus = sp.count, sm.count
    report.adequate_plus, report.adequate_minus = is_adequate(d, sp), is_adequate(d, sm)

    coloring = checkerboard_coloring(d)
    slopes = [boundary_slope(d, coloring, col).slope for col in (Color.BLACK, Color.WHITE)]
    report.slope_max, report.slope_min = max(slopes), min(slopes)
    report.layered_max, report.layered_min = layered_slope(d, sp), layered_slope(d, sm)

    sig = knot_signature(d, coloring)
    report.goeritz = sig.goeritz.rows
    report.sigma_g, report.mu, report.sigma = sig.sigma_g, sig.mu, sig.sigma_k
    report.determinant = abs(determinant(sig.goeritz.rows))

    v = jones_polynomial(d, max_crossings)
    report.jones = v
    report.jones_min_deg, report.jones_max_deg = jones_degrees(v)
    upper, lower = degree_bounds(d)
    report.bound_upper, report.bound_lower = upper, lower
    if upper.denominator != 1 or lower.denominator != 1:
        raise NonIntegralExponent(f"degree bounds {upper}, {lower} are not integers")

    checks = report.checks
    lo, hi = report.jones_min_deg, report.jones_max_deg
    checks["deg_upper"] = Verdict.of(hi <= upper and (hi == upper or not report.adequate_minus))
    checks["deg_lower"] = Verdict.of(lo >= lower and (lo == lower or not report.adequate_plus))
    checks["det_jones_cross_check"] = Verdict.of(report.determinant == abs(v(-1)))

    if d.n == 0 or not (report.alternating and report.reduced):
        return
    s = report.sigma
    checks["thm31_max"] = Verdict.of(report.slope_max == 2 * hi + s)
    checks["thm31_min"] = Verdict.of(report.slope_min == 2 * lo + s)
    checks["id_crplus"] = Verdict.of(plus == sp.count - s - 1)
    checks["id_crminus"] = Verdict.of(minus == sm.count + s - 1)
    checks["id_crossings"] = Verdict.of(d.n == sp.count + sm.count - 2)
    checks["id_span"] = Verdict.of(hi - lo == d.n)
    pd_, pcol = proof_shading(d)
    g = goeritz_matrix(pd_, pcol)
    sg, _ = symmetric_signature(g.rows)
    checks["id_sigma_g"] = Verdict.of(all(e == -1 for e in g.eta) and sg == -sm.count + 1)
    checks["id_mu"] = Verdict.of(g.mu == -minus)


def knot_report(d: PlanarDiagram, max_crossings: int = DEFAULT_MAX_CROSSINGS,
                expected: dict[str, Any] | None = None) -> KnotReport:
    """All invariants and verdicts for one diagram; errors are captured, not raised."""
    report = KnotReport(d.name, str(d.code))
    t0 = time.perf_counter()
    try:
        _fill(report, d, max_crossings)
        report.checks["expected"] = compare_expected(report, expected or {})
    except (KnotError, ArithmeticError, AssertionError, RuntimeError) as exc:
        report.error = f"{type(exc).__name__}: {exc}"
    report.elapsed_ms = (time.perf_counter() - t0) * 1000
    return report


def verify_main_theorem(d: PlanarDiagram) -> tuple[Verdict, Verdict]:
    """(max, min) verdicts for slope = 2 * Jones degree + signature."""
    r = knot_report(d)
    if r.error:
        return Verdict.FAILS, Verdict.FAILS
    return r.checks["thm31_max"], r.checks["thm31_min"]


def verify_identities(d: PlanarDiagram) -> dict[str, Verdict]:
    r = knot_report(d)
    if r.error:
        return {k: Verdict.FAILS for k in IDENTITY_CHECKS}
    return {k: r.checks[k] for k in IDENTITY_CHECKS}


@dataclass(frozen=True)
class Summary:
    knots: int
    errors: int
    holds: int
    fails: int
    not_applicable: int
    failing: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return self.fails == 0

    def line(self) -> str:
        return (f"{self.knots} knots, {self.holds} holds, {self.fails} fails, "
                f"{self.not_applicable} not-applicable, {self.errors} errors")


def summarize(reports: list[KnotReport]) -> Summary:
    """Theorem-verdict counts per knot: holds when both theorem checks hold.

    A knot counts as failing when any applicable check (theorem, identity or
    cross-check) fails.
    """
    holds = fails = na = errors = 0
    failing = []
    for r in reports:
        if r.error:
            errors += 1
            continue
        if any(v is Verdict.FAILS for v in r.checks.values()):
            fails += 1
            failing.append(r.name or r.pd)
        elif all(v is Verdict.HOLDS for v in r.verdicts(THEOREM_CHECKS)):
            holds += 1
        else:
            na += 1
    return Summary(len(reports), errors, holds, fails, na, tuple(failing))


def run_corpus(entries, max_crossings: int = DEFAULT_MAX_CROSSINGS, outer_face: int | None = None) -> list[KnotReport]:
    """Reports for table entries, in table order.

    Entries that failed to parse, exceed ``max_crossings`` or reject the
    requested outer face yield a report carrying the error.
    """
    reports = []
    for e in entries:
        if e.error is not None or e.code is None:
            reports.append(KnotReport(e.name, e.text, error=e.error))
            continue
        if e.code.n > max_crossings:
            r = KnotReport(e.name, str(e.code), crossings=e.code.n)
            reports.append(r)
            continue
        try:
            d = build_diagram(e.code, outer_face)
        except (KnotError, ValueError) as exc:
            reports.append(KnotReport(e.name, str(e.code), error=f"{type(exc).__name__}: {exc}"))
            continue
        reports.append(knot_report(d, max_crossings, e.expected))
    return reports
