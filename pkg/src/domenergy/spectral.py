"""Domination matrices, exact characteristic polynomials, spectra, and energies.

The characteristic polynomial is computed in exact integer arithmetic
(Faddeev-LeVerrier with exact division; Python integers never overflow), the
spectrum by a deterministic cyclic Jacobi iteration, and the energy as the sum
of absolute eigenvalues. Reported values keep full precision; rounding is for
the presentation layer only.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import sqrt

from .graphs import Graph, VertexSet
from .domination import (
    KIND_CONNECTED,
    KIND_DOMINATING,
    DominationError,
    enumerate_minimum_sets,
    is_connected_dominating_set,
    is_dominating_set,
    minimum_connected_dominating_set,
    minimum_dominating_set,
)

DEFAULT_EIG_TOL = 1e-12
MAX_SWEEPS = 100


class NonConvergenceError(RuntimeError):
    """Jacobi iteration failed to reach the requested off-diagonal residual."""

    def __init__(self, residual: float, sweeps: int):
        super().__init__(
            f"Jacobi iteration did not converge after {sweeps} sweeps "
            f"(off-diagonal residual {residual:.3e})"
        )
        self.residual = residual
        self.sweeps = sweeps


@dataclass(frozen=True)
class DominationMatrix:
    """Adjacency matrix with diagonal ones at the vertices of a chosen set."""

    n: int
    rows: tuple[tuple[int, ...], ...]
    marked: VertexSet
    source_kind: str

    def frobenius_norm(self) -> float:
        return sqrt(float(sum(x * x for row in self.rows for x in row)))

    def trace(self) -> int:
        return sum(self.rows[i][i] for i in range(self.n))


def build_domination_matrix(g: Graph, s: VertexSet, kind: str) -> DominationMatrix:
    """Build A_D-style matrix for ``s``; the set is re-verified before use."""
    if s.n != g.n:
        raise DominationError("vertex set indexes a different graph size")
    if kind == KIND_DOMINATING:
        ok = is_dominating_set(g, s)
    elif kind == KIND_CONNECTED:
        ok = is_connected_dominating_set(g, s)
    else:
        raise DominationError(f"unknown set kind {kind!r}")
    if not ok:
        raise DominationError(f"set {list(s.vertices())} is not a verified {kind} set")
    rows = tuple(
        tuple(
            1 if ((g.adj[i] >> j) & 1) or (i == j and i in s) else 0
            for j in range(g.n)
        )
        for i in range(g.n)
    )
    return DominationMatrix(g.n, rows, s, kind)


# ---------------------------------------------------------------------------
# exact characteristic polynomial
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CharPoly:
    """Integer coefficients c_0..c_n of det(xI - M) = c_0 x^n + c_1 x^(n-1) + ... + c_n."""

    coeffs: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def evaluate(self, x: float) -> float:
        acc = 0.0
        for c in self.coeffs:
            acc = acc * x + c
        return acc


def char_poly(m: DominationMatrix) -> CharPoly:
    """Faddeev-LeVerrier recursion over exact integers."""
    n = m.n
    a = m.rows
    coeffs = [1]
    work = [list(row) for row in a]
    for k in range(1, n + 1):
        tr = sum(work[i][i] for i in range(n))
        q, r = divmod(tr, k)
        if r:
            raise ArithmeticError(f"inexact division in characteristic polynomial step {k}")
        c = -q
        coeffs.append(c)
        if k < n:
            for i in range(n):
                work[i][i] += c
            work = [
                [sum(a[i][t] * work[t][j] for t in range(n) if a[i][t]) for j in range(n)]
                for i in range(n)
            ]
    return CharPoly(tuple(coeffs))


def determinant(m: DominationMatrix) -> int:
    """Exact determinant, read off the constant coefficient."""
    cp = char_poly(m)
    return (-1) ** m.n * cp.coeffs[-1]


# ---------------------------------------------------------------------------
# eigenvalues (cyclic Jacobi)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues in non-increasing order plus solver metadata."""

    values: tuple[float, ...]
    off_diag_residual: float
    iterations: int

    def abs_extremes(self) -> tuple[float, float]:
        """(max |lambda|, min |lambda|)."""
        mags = [abs(v) for v in self.values]
        return max(mags), min(mags)


def eigenvalues(m: DominationMatrix, tol: float = DEFAULT_EIG_TOL) -> Spectrum:
    """Cyclic Jacobi with row-major upper-triangle sweeps.

    Iterates until the off-diagonal Frobenius norm drops below
    tol * max(frobenius_norm, 1); raises NonConvergenceError after
    MAX_SWEEPS sweeps.
    """
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    n = m.n
    if n == 0:
        return Spectrum((), 0.0, 0)
    a = [[float(x) for x in row] for row in m.rows]
    limit = tol * max(m.frobenius_norm(), 1.0)
    sweeps = 0
    while True:
        off = sqrt(2.0 * sum(a[i][j] * a[i][j] for i in range(n - 1) for j in range(i + 1, n)))
        if off < limit:
            values = tuple(sorted((a[i][i] for i in range(n)), reverse=True))
            return Spectrum(values, off, sweeps)
        if sweeps >= MAX_SWEEPS:
            raise NonConvergenceError(off, sweeps)
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p][q]
                if apq == 0.0:
                    continue
                theta = (a[q][q] - a[p][p]) / (2.0 * apq)
                t = 1.0 / (abs(theta) + sqrt(theta * theta + 1.0))
                if theta < 0.0:
                    t = -t
                c = 1.0 / sqrt(t * t + 1.0)
                s = t * c
                tau = s / (1.0 + c)
                a[p][p] -= t * apq
                a[q][q] += t * apq
                a[p][q] = a[q][p] = 0.0
                for k in range(n):
                    if k == p or k == q:
                        continue
                    akp = a[k][p]
                    akq = a[k][q]
                    a[k][p] = a[p][k] = akp - s * (akq + tau * akp)
                    a[k][q] = a[q][k] = akq + s * (akp - tau * akq)
        sweeps += 1


def energy(spectrum: Spectrum) -> float:
    """Sum of absolute eigenvalues."""
    return sum(abs(v) for v in spectrum.values)


# ---------------------------------------------------------------------------
# energy reports
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class EnergyReport:
    """Energy of a domination matrix plus the exact objects it derives from.

    identity_residuals = (sum(lambda) - gamma_used, sum(lambda^2) - (2m + gamma_used)).
    """

    n: int
    m: int
    kind: str
    set: VertexSet
    gamma_used: int
    charpoly: CharPoly
    spectrum: Spectrum
    energy: float
    identity_residuals: tuple[float, float]

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "kind": self.kind,
            "set": list(self.set.vertices()),
            "gamma": self.gamma_used,
            "coeffs": list(self.charpoly.coeffs),
            "eigenvalues": list(self.spectrum.values),
            "energy": self.energy,
            "residuals": {
                "trace": self.identity_residuals[0],
                "power": self.identity_residuals[1],
            },
        }


def energy_report_for_set(
    g: Graph, s: VertexSet, kind: str, tol: float = DEFAULT_EIG_TOL
) -> EnergyReport:
    """Full energy report for an explicit (verified) set."""
    dm = build_domination_matrix(g, s, kind)
    cp = char_poly(dm)
    sp = eigenvalues(dm, tol)
    k = len(s)
    total = sum(sp.values)
    total_sq = sum(v * v for v in sp.values)
    return EnergyReport(
        n=g.n,
        m=g.m,
        kind=kind,
        set=s,
        gamma_used=k,
        charpoly=cp,
        spectrum=sp,
        energy=energy(sp),
        identity_residuals=(total - k, total_sq - (2 * g.m + k)),
    )


def c_dominating_energy(g: Graph, tol: float = DEFAULT_EIG_TOL) -> EnergyReport:
    """Energy report for the canonical minimum connected dominating set."""
    cert = minimum_connected_dominating_set(g)
    return energy_report_for_set(g, cert.set, KIND_CONNECTED, tol)


def dominating_energy(g: Graph, tol: float = DEFAULT_EIG_TOL) -> EnergyReport:
    """Energy report for the canonical minimum dominating set."""
    cert = minimum_dominating_set(g)
    return energy_report_for_set(g, cert.set, KIND_DOMINATING, tol)


def energy_spread_over_min_sets(
    g: Graph, kind: str, limit: int, tol: float = DEFAULT_EIG_TOL
) -> tuple[float, float, int]:
    """(min energy, max energy, count) over the enumerated optimal sets.

    The energy definition fixes one canonical optimal set; this surfaces how
    much the value depends on that choice.
    """
    sets = enumerate_minimum_sets(g, kind, limit)
    energies = [energy(eigenvalues(build_domination_matrix(g, s, kind), tol)) for s in sets]
    return min(energies), max(energies), len(energies)
