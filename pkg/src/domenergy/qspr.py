"""Alkane skeleton descriptor and property regression.

Carbon skeletons (hydrogen-suppressed trees, 2..9 atoms) come in as CSV rows;
the descriptor is the connected-domination energy of the skeleton. The model
of interest maps the descriptor to heats of vaporization as hv = 10*E +- 5,
reported as a band-coverage fraction.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from math import sqrt

from .graphs import Graph, is_tree
from .spectral import DEFAULT_EIG_TOL, c_dominating_energy

PROPERTY_IDS = ("bp", "mv", "mr", "hv", "ct", "cp", "st")
_HEADER = ("name", "edges") + PROPERTY_IDS

EQ1_SLOPE = 10.0
EQ1_HALF_WIDTH = 5.0


class AlkaneCsvError(ValueError):
    """Malformed alkane CSV; the message names the offending row."""


@dataclass(frozen=True)
class AlkaneRecord:
    name: str
    skeleton: Graph
    properties: dict[str, float]


@dataclass(frozen=True)
class RegressionResult:
    property_id: str
    sample_count: int
    slope: float
    intercept: float
    pearson_r: float
    residual_sd: float

    def to_json_dict(self) -> dict:
        return {
            "property_id": self.property_id,
            "sample_count": self.sample_count,
            "slope": self.slope,
            "intercept": self.intercept,
            "pearson_r": self.pearson_r,
            "residual_sd": self.residual_sd,
        }


def _parse_skeleton(edges_field: str, row: int) -> Graph:
    edges = []
    for token in edges_field.split(";"):
        token = token.strip()
        if not token:
            raise AlkaneCsvError(f"row {row}: empty edge token")
        parts = token.split("-")
        if len(parts) != 2:
            raise AlkaneCsvError(f"row {row}: malformed edge token {token!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise AlkaneCsvError(f"row {row}: malformed edge token {token!r}") from None
        if u < 0 or v < 0 or u == v:
            raise AlkaneCsvError(f"row {row}: bad edge {token!r}")
        edges.append((u, v))
    n = max(max(u, v) for u, v in edges) + 1
    if not 2 <= n <= 9:
        raise AlkaneCsvError(f"row {row}: skeleton has {n} atoms, expected 2..9")
    try:
        g = Graph.from_edges(n, edges)
    except ValueError as exc:
        raise AlkaneCsvError(f"row {row}: {exc}") from None
    if not is_tree(g):
        raise AlkaneCsvError(f"row {row}: skeleton is not a tree")
    if any(g.degree(v) > 4 for v in range(n)):
        raise AlkaneCsvError(f"row {row}: carbon degree exceeds 4")
    return g


def load_alkane_csv(text: str) -> list[AlkaneRecord]:
    """Parse alkane records; header must be name,edges,bp,mv,mr,hv,ct,cp,st."""
    reader = csv.reader(io.StringIO(text))
    try:
        header = next(reader)
    except StopIteration:
        raise AlkaneCsvError("empty CSV") from None
    if tuple(h.strip() for h in header) != _HEADER:
        raise AlkaneCsvError(f"bad header {header!r}, expected {','.join(_HEADER)}")
    records = []
    for row_idx, row in enumerate(reader, start=2):
        if not row or all(not cell.strip() for cell in row):
            continue
        if len(row) != len(_HEADER):
            raise AlkaneCsvError(f"row {row_idx}: expected {len(_HEADER)} cells, got {len(row)}")
        name = row[0].strip()
        skeleton = _parse_skeleton(row[1], row_idx)
        props: dict[str, float] = {}
        for pid, cell in zip(PROPERTY_IDS, row[2:]):
            cell = cell.strip()
            if not cell:
                continue
            try:
                props[pid] = float(cell)
            except ValueError:
                raise AlkaneCsvError(f"row {row_idx}: bad {pid} value {cell!r}") from None
        records.append(AlkaneRecord(name=name, skeleton=skeleton, properties=props))
    return records


def descriptor(record: AlkaneRecord, tol: float = DEFAULT_EIG_TOL) -> float:
    """Connected-domination energy of the carbon skeleton."""
    return c_dominating_energy(record.skeleton, tol).energy


def pearson_r(xs: list[float], ys: list[float]) -> float:
    """Sample Pearson correlation; needs length >= 3 and nonzero variances."""
    if len(xs) != len(ys):
        raise ValueError("series lengths differ")
    n = len(xs)
    if n < 3:
        raise ValueError("need at least 3 points")
    mx = sum(xs) / n
    my = sum(ys) / n
    sxx = sum((x - mx) ** 2 for x in xs)
    syy = sum((y - my) ** 2 for y in ys)
    if sxx == 0.0 or syy == 0.0:
        raise ValueError("zero variance makes the correlation undefined")
    sxy = sum((x - mx) * (y - my) for x, y in zip(xs, ys))
    return sxy / sqrt(sxx * syy)


def _series(records, property_id):
    if property_id not in PROPERTY_IDS:
        raise ValueError(f"unknown property {property_id!r}")
    xs, ys = [], []
    for rec in records:
        if property_id in rec.properties:
            xs.append(descriptor(rec))
            ys.append(rec.properties[property_id])
    return xs, ys


def fit_and_report(records: list[AlkaneRecord], property_id: str) -> RegressionResult:
    """Least-squares fit of the property on the descriptor."""
    xs, ys = _series(records, property_id)
    n = len(xs)
    if n < 3:
        raise ValueError(f"property {property_id!r} present in only {n} records, need >= 3")
    mx = sum(xs) / n
    my = sum(ys) / n
    sxx = sum((x - mx) ** 2 for x in xs)
    if sxx == 0.0:
        raise ValueError(f"property {property_id!r}: descriptor has zero variance")
    sxy = sum((x - mx) * (y - my) for x, y in zip(xs, ys))
    slope = sxy / sxx
    intercept = my - slope * mx
    sse = sum((y - (slope * x + intercept)) ** 2 for x, y in zip(xs, ys))
    residual_sd = sqrt(sse / (n - 2)) if n > 2 else 0.0
    return RegressionResult(
        property_id=property_id,
        sample_count=n,
        slope=slope,
        intercept=intercept,
        pearson_r=pearson_r(xs, ys),
        residual_sd=residual_sd,
    )


def eq1_band_check(records: list[AlkaneRecord]) -> float:
    """Fraction of records with heat of vaporization inside 10*E +- 5."""
    xs, ys = _series(records, "hv")
    if not xs:
        raise ValueError("no records carry a heat of vaporization value")
    inside = sum(1 for x, y in zip(xs, ys) if abs(y - EQ1_SLOPE * x) <= EQ1_HALF_WIDTH)
    return inside / len(xs)
