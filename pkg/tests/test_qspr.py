import random
from math import sqrt

import pytest

from domenergy.graphs import path, star
from domenergy.spectral import c_dominating_energy
from domenergy.qspr import (
    AlkaneCsvError,
    AlkaneRecord,
    descriptor,
    eq1_band_check,
    fit_and_report,
    load_alkane_csv,
    pearson_r,
)

HEADER = "name,edges,bp,mv,mr,hv,ct,cp,st"


def make_csv(*rows):
    return "\n".join([HEADER, *rows]) + "\n"


def record_for(g, name="x"):
    return AlkaneRecord(name=name, skeleton=g, properties={})


# ---------------------------------------------------------------------------
# CSV loading
# ---------------------------------------------------------------------------

def test_load_ethane():
    recs = load_alkane_csv(make_csv("ethane,0-1,,,,14.7,,,"))
    assert len(recs) == 1
    assert recs[0].skeleton.n == 2 and recs[0].skeleton.m == 1
    assert recs[0].properties == {"hv": 14.7}


def test_load_neopentane_star():
    recs = load_alkane_csv(make_csv("2-2-dimethylpropane,0-1;1-2;1-3;1-4,,,,,,,"))
    # skeleton is K_{1,4} up to labels: vertex 1 is the center here
    skel = recs[0].skeleton
    assert skel.n == 5 and skel.m == 4
    assert sorted(skel.degree(v) for v in range(5)) == [1, 1, 1, 1, 4]


def test_load_rejects_cycles():
    with pytest.raises(AlkaneCsvError, match="row 2"):
        load_alkane_csv(make_csv("cyclopropane,0-1;1-2;2-0,,,,,,,"))


def test_load_rejects_high_degree():
    with pytest.raises(AlkaneCsvError, match="degree"):
        load_alkane_csv(make_csv("impossible,0-1;1-2;1-3;1-4;1-5,,,,,,,"))


def test_load_rejects_disconnected_and_size():
    with pytest.raises(AlkaneCsvError, match="not a tree"):
        load_alkane_csv(make_csv("gap,0-1;2-3,,,,,,,"))
    with pytest.raises(AlkaneCsvError, match="2..9"):
        load_alkane_csv(make_csv("decane,0-1;1-2;2-3;3-4;4-5;5-6;6-7;7-8;8-9,,,,,,,"))


def test_load_errors_name_rows():
    with pytest.raises(AlkaneCsvError, match="row 3"):
        load_alkane_csv(make_csv("ethane,0-1,,,,,,,", "bad,0-x,,,,,,,"))
    with pytest.raises(AlkaneCsvError, match="bad header"):
        load_alkane_csv("name,edges,bp\nethane,0-1,1\n")
    with pytest.raises(AlkaneCsvError, match="row 2"):
        load_alkane_csv(make_csv("ethane,0-1,,,,oops,,,"))
    with pytest.raises(AlkaneCsvError, match="empty"):
        load_alkane_csv("")


def test_load_missing_cells_skipped_per_property():
    recs = load_alkane_csv(make_csv("propane,0-1;1-2,12.5,,,,,,7.1"))
    assert recs[0].properties == {"bp": 12.5, "st": 7.1}


# ---------------------------------------------------------------------------
# descriptor
# ---------------------------------------------------------------------------

def test_descriptor_pentane():
    rec = record_for(path(5))
    assert abs(descriptor(rec) - 6.236) < 1e-3


def test_descriptor_neopentane():
    rec = record_for(star(5))
    assert abs(descriptor(rec) - sqrt(17)) < 1e-9


def test_descriptor_ethane():
    rec = record_for(path(2))
    assert abs(descriptor(rec) - sqrt(5)) < 1e-12


def test_descriptor_same_code_path_as_energy():
    for n in range(2, 9):
        assert descriptor(record_for(path(n))) == c_dominating_energy(path(n)).energy


# ---------------------------------------------------------------------------
# correlation
# ---------------------------------------------------------------------------

def test_pearson_fixed_points():
    xs = [1.0, 2.0, 4.0, 7.0]
    assert pearson_r(xs, [2 * x + 1 for x in xs]) == pytest.approx(1.0)
    assert pearson_r(xs, [-x for x in xs]) == pytest.approx(-1.0)
    assert pearson_r([1.0, 2.0, 3.0], [2.0, 1.0, 3.0]) == pytest.approx(0.5)


def test_pearson_errors():
    with pytest.raises(ValueError):
        pearson_r([1.0, 2.0], [1.0, 2.0])
    with pytest.raises(ValueError):
        pearson_r([1.0, 2.0, 3.0], [1.0, 2.0])
    with pytest.raises(ValueError):
        pearson_r([1.0, 1.0, 1.0], [1.0, 2.0, 3.0])


def test_pearson_affine_invariance():
    rng = random.Random(4242)
    for _ in range(25):
        xs = [rng.uniform(-5, 5) for _ in range(12)]
        ys = [rng.uniform(-5, 5) for _ in range(12)]
        base = pearson_r(xs, ys)
        a, b = rng.uniform(0.1, 3.0), rng.uniform(-4, 4)
        assert pearson_r([a * x + b for x in xs], ys) == pytest.approx(base, abs=1e-12)
        assert pearson_r(xs, [a * y + b for y in ys]) == pytest.approx(base, abs=1e-12)
        assert pearson_r([-a * x + b for x in xs], ys) == pytest.approx(-base, abs=1e-12)


# ---------------------------------------------------------------------------
# fits and the model band
# ---------------------------------------------------------------------------

def _exact_model_records():
    rows = []
    for g in [path(2), path(3), path(4), star(4), path(5), star(5), path(6)]:
        e = c_dominating_energy(g).energy
        rows.append(AlkaneRecord("r", g, {"hv": 10.0 * e}))
    return rows


def test_fit_exact_model():
    recs = _exact_model_records()
    fit = fit_and_report(recs, "hv")
    assert fit.sample_count == len(recs)
    assert abs(fit.slope - 10.0) < 1e-9
    assert abs(fit.intercept) < 1e-9
    assert abs(fit.pearson_r - 1.0) < 1e-9
    assert fit.residual_sd < 1e-9
    assert eq1_band_check(recs) == 1.0


def test_fit_missing_property_errors():
    recs = _exact_model_records()
    with pytest.raises(ValueError, match="bp"):
        fit_and_report(recs, "bp")
    with pytest.raises(ValueError):
        fit_and_report(recs, "density")


def test_band_requires_hv():
    with pytest.raises(ValueError):
        eq1_band_check([record_for(path(3))])


def test_band_counts_outliers():
    recs = _exact_model_records()
    g = path(7)
    e = c_dominating_energy(g).energy
    recs.append(AlkaneRecord("off", g, {"hv": 10.0 * e + 6.0}))  # outside the +-5 band
    recs.append(AlkaneRecord("edge", g, {"hv": 10.0 * e + 4.9}))  # inside
    frac = eq1_band_check(recs)
    assert frac == pytest.approx((len(recs) - 1) / len(recs))


def test_normal_equations_residual_orthogonality():
    rng = random.Random(7)
    graphs = [path(n) for n in range(2, 9)] + [star(n) for n in range(3, 9)]
    recs = [AlkaneRecord("r", g, {"bp": 3.0 * c_dominating_energy(g).energy
                                  + rng.uniform(-2, 2)}) for g in graphs]
    fit = fit_and_report(recs, "bp")
    xs = [descriptor(r) for r in recs]
    ys = [r.properties["bp"] for r in recs]
    residuals = [y - (fit.slope * x + fit.intercept) for x, y in zip(xs, ys)]
    assert abs(sum(residuals)) < 1e-9
    assert abs(sum(r * x for r, x in zip(residuals, xs))) < 1e-9


# ---------------------------------------------------------------------------
# shipped fixture
# ---------------------------------------------------------------------------

def test_shipped_fixture(alkane_csv_text):
    recs = load_alkane_csv(alkane_csv_text)
    assert len(recs) == 12
    names = [r.name for r in recs]
    assert "2,2-dimethylpropane" in names  # quoted comma in the name survives
    fit = fit_and_report(recs, "hv")
    assert abs(fit.slope - 10.0) < 1e-9
    assert abs(fit.pearson_r - 1.0) < 1e-9
    assert eq1_band_check(recs) == 1.0
    bp_fit = fit_and_report(recs, "bp")
    assert bp_fit.sample_count == 6
