"""Spectral bounds on the connected-domination energy, with slack accounting.

Every inequality is evaluated in two flavours where the source statements are
ambiguous: the proof-consistent one (extreme absolute eigenvalues, the reading
the underlying inequalities actually require) participates in hard guarantees,
while the literal statement reading is computed and flagged so the discrepancy
stays visible. Radicands are clamped at zero and the clamping recorded.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import exp, log, sqrt

from .graphs import Graph
from .spectral import DEFAULT_EIG_TOL, EnergyReport, c_dominating_energy

SLACK_TOL = 1e-8

UPPER = "upper"
LOWER = "lower"
PROOF = "proof"
LITERAL = "literal"


def alpha(n: int) -> float:
    """n * floor(n/2) * (1 - floor(n/2)/n), evaluated exactly then widened to float."""
    if n < 1:
        raise ValueError("alpha needs n >= 1")
    half = n // 2
    return float(n * half * (1 - Fraction(half, n)))


def mcclelland_upper(n: int, m: int, k: int) -> float:
    return sqrt(n * (2 * m + k))


def _clamped_sqrt(radicand: float) -> tuple[float, bool]:
    if radicand < 0.0:
        return 0.0, True
    return sqrt(radicand), False


def _spread_lower(n, m, k, abs_max, abs_min, coeff) -> tuple[float, bool]:
    spread = abs_max - abs_min
    return _clamped_sqrt(2 * m * n + n * k - coeff * spread * spread)


def biernacki_lower(n: int, m: int, k: int, abs_max: float, abs_min: float) -> float:
    """sqrt(2mn + nk - alpha(n) (abs_max - abs_min)^2), radicand clamped at 0."""
    return _spread_lower(n, m, k, abs_max, abs_min, alpha(n))[0]


def cor6_lower(n: int, m: int, k: int, abs_max: float, abs_min: float) -> float:
    """Weaker variant of biernacki_lower with alpha(n) replaced by n^2/4."""
    return _spread_lower(n, m, k, abs_max, abs_min, n * n / 4.0)[0]


def diaz_metcalf_lower(n: int, m: int, k: int, abs_max: float, abs_min: float) -> float:
    """(abs_max * abs_min * n + 2m + k) / (abs_max + abs_min); NaN when inapplicable."""
    denom = abs_max + abs_min
    if denom == 0.0:
        return float("nan")
    return (abs_max * abs_min * n + 2 * m + k) / denom


def det_lower(n: int, m: int, k: int, xi: int) -> float:
    """sqrt(2m + k + n(n-1) xi^(2/n)); the xi term vanishes at xi = 0."""
    if xi < 0:
        raise ValueError("xi is an absolute determinant, must be >= 0")
    term = 0.0 if xi == 0 else exp((2.0 / n) * log(xi))
    return sqrt(2 * m + k + n * (n - 1) * term)


def lambda1_lower(n: int, m: int, k: int) -> float:
    """(2m + k)/n, a lower bound on the largest eigenvalue (not on the energy)."""
    return (2 * m + k) / n


def koolen_moulton_upper(n: int, m: int, k: int) -> float:
    """(2m+k)/n + sqrt((n-1)[(2m+k) - ((2m+k)/n)^2]); meaningful when 2m+k >= n."""
    q = (2 * m + k) / n
    radicand = (n - 1) * ((2 * m + k) - q * q)
    return q + _clamped_sqrt(radicand)[0]


@dataclass(frozen=True)
class BoundEntry:
    bound_id: str
    kind: str  # "upper" | "lower"
    target: str  # "energy" | "lambda1"
    interpretation: str  # "proof" | "literal"
    value: float
    satisfied: bool
    slack: float
    applicable: bool
    clamped: bool

    def to_json_dict(self) -> dict:
        return {
            "bound_id": self.bound_id,
            "kind": self.kind,
            "target": self.target,
            "interpretation": self.interpretation,
            "value": self.value,
            "satisfied": self.satisfied,
            "slack": self.slack,
            "applicable": self.applicable,
            "clamped": self.clamped,
        }


@dataclass(frozen=True)
class BoundsReport:
    """Per-bound values, satisfied flags, and slack for one graph."""

    n: int
    m: int
    k: int
    energy: float
    lambda1: float
    trace_residual: float
    power_residual: float
    c0: int
    c1: int
    entries: tuple[BoundEntry, ...]
    energy_report: EnergyReport

    def entry(self, bound_id: str) -> BoundEntry:
        for e in self.entries:
            if e.bound_id == bound_id:
                return e
        raise KeyError(bound_id)

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "k": self.k,
            "energy": self.energy,
            "lambda1": self.lambda1,
            "residuals": {"trace": self.trace_residual, "power": self.power_residual},
            "c0": self.c0,
            "c1": self.c1,
            "entries": [e.to_json_dict() for e in self.entries],
        }

    def to_csv_lines(self) -> list[str]:
        header = "bound_id,kind,target,interpretation,value,satisfied,slack,applicable,clamped"
        lines = [header]
        for e in self.entries:
            lines.append(
                f"{e.bound_id},{e.kind},{e.target},{e.interpretation},{e.value!r},"
                f"{e.satisfied},{e.slack!r},{e.applicable},{e.clamped}"
            )
        return lines


def check_all(g: Graph, tol: float = DEFAULT_EIG_TOL) -> BoundsReport:
    """Evaluate every bound against the canonical connected-domination energy."""
    rep = c_dominating_energy(g, tol)
    n, m, k = rep.n, rep.m, rep.gamma_used
    e = rep.energy
    values = rep.spectrum.values
    lam1 = values[0]
    abs_max, abs_min = rep.spectrum.abs_extremes()
    lit_max = abs(values[0])
    lit_min = abs(values[-1])
    lit_2 = abs(values[1]) if n >= 2 else abs(values[0])
    xi = abs((-1) ** n * rep.charpoly.coeffs[-1])

    entries: list[BoundEntry] = []

    def add(bound_id, kind, value, *, target="energy", interpretation=PROOF,
            applicable=True, clamped=False):
        reference = lam1 if target == "lambda1" else e
        slack = (value - reference) if kind == UPPER else (reference - value)
        entries.append(BoundEntry(
            bound_id=bound_id, kind=kind, target=target,
            interpretation=interpretation, value=value,
            satisfied=slack >= -SLACK_TOL, slack=slack,
            applicable=applicable, clamped=clamped,
        ))

    add("mcclelland_upper", UPPER, mcclelland_upper(n, m, k))

    v, cl = _spread_lower(n, m, k, abs_max, abs_min, alpha(n))
    add("biernacki_lower", LOWER, v, clamped=cl)
    v, cl = _spread_lower(n, m, k, lit_max, lit_min, alpha(n))
    add("biernacki_lower_literal", LOWER, v, interpretation=LITERAL, clamped=cl)

    v, cl = _spread_lower(n, m, k, abs_max, abs_min, n * n / 4.0)
    add("cor6_lower", LOWER, v, clamped=cl)
    v, cl = _spread_lower(n, m, k, lit_max, lit_min, n * n / 4.0)
    add("cor6_lower_literal", LOWER, v, interpretation=LITERAL, clamped=cl)

    dm = diaz_metcalf_lower(n, m, k, abs_max, abs_min)
    add("diaz_metcalf_lower", LOWER, dm, applicable=abs_max + abs_min > 0.0)
    if lit_max + lit_min > 0.0:
        dm_stmt = (lit_max * lit_2 * n + 2 * m + k) / (lit_max + lit_min)
        stmt_applicable = True
    else:
        dm_stmt = float("nan")
        stmt_applicable = False
    add("diaz_metcalf_statement", LOWER, dm_stmt, interpretation=LITERAL,
        applicable=stmt_applicable)

    add("det_lower", LOWER, det_lower(n, m, k, xi))
    add("lambda1_lower", LOWER, lambda1_lower(n, m, k), target="lambda1")
    add("koolen_moulton_upper", UPPER, koolen_moulton_upper(n, m, k),
        applicable=2 * m + k >= n)

    return BoundsReport(
        n=n, m=m, k=k, energy=e, lambda1=lam1,
        trace_residual=rep.identity_residuals[0],
        power_residual=rep.identity_residuals[1],
        c0=rep.charpoly.coeffs[0], c1=rep.charpoly.coeffs[1],
        entries=tuple(entries), energy_report=rep,
    )
