import io
import json

import pytest

from domenergy.cli import main
from domenergy.graphs import encode_graph6, path
from domenergy.smallgraphs import connected_graphs

P5_EDGELIST = "5\n0 1\n1 2\n2 3\n3 4\n"


def run_cli(capsys, monkeypatch, argv, stdin=""):
    monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ---------------------------------------------------------------------------
# energy
# ---------------------------------------------------------------------------

def test_energy_p5_json(capsys, monkeypatch):
    code, out, _ = run_cli(capsys, monkeypatch, ["energy", "--kind", "connected"],
                           stdin=P5_EDGELIST)
    assert code == 0
    payload = json.loads(out)
    assert payload["gamma"] == 3
    assert payload["set"] == [1, 2, 3]
    assert payload["coeffs"] == [1, -3, -1, 5, 1, -1]
    assert round(payload["energy"], 3) == 6.236


def test_energy_csv_three_decimals(capsys, monkeypatch):
    code, out, _ = run_cli(capsys, monkeypatch, ["energy", "--format", "csv"],
                           stdin=P5_EDGELIST)
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "n,m,kind,gamma,energy"
    assert lines[1] == "5,4,connected-dominating,3,6.236"


def test_energy_all_min_sets(capsys, monkeypatch):
    code, out, _ = run_cli(capsys, monkeypatch,
                           ["energy", "--kind", "dominating", "--all-min-sets"],
                           stdin="4\n0 1\n1 2\n2 3\n3 0\n")
    assert code == 0
    payload = json.loads(out)
    assert payload["spread"]["count"] == 6
    assert payload["spread"]["min"] <= payload["spread"]["max"]


def test_energy_graph6_input(capsys, monkeypatch):
    g6 = encode_graph6(path(5))
    code, out, _ = run_cli(capsys, monkeypatch,
                           ["energy", "--input-format", "graph6"], stdin=g6 + "\n")
    assert code == 0
    assert json.loads(out)["gamma"] == 3


def test_energy_deterministic_bytes(capsys, monkeypatch):
    _, out1, _ = run_cli(capsys, monkeypatch, ["energy"], stdin=P5_EDGELIST)
    _, out2, _ = run_cli(capsys, monkeypatch, ["energy"], stdin=P5_EDGELIST)
    assert out1 == out2


# ---------------------------------------------------------------------------
# spectrum / bounds / check
# ---------------------------------------------------------------------------

def test_spectrum_p5(capsys, monkeypatch):
    code, out, _ = run_cli(capsys, monkeypatch, ["spectrum"], stdin=P5_EDGELIST)
    assert code == 0
    payload = json.loads(out)
    assert payload["coeffs"] == [1, -3, -1, 5, 1, -1]
    assert len(payload["eigenvalues"]) == 5


def test_bounds_k1_tight(capsys, monkeypatch):
    code, out, _ = run_cli(capsys, monkeypatch, ["bounds"], stdin="1\n")
    assert code == 0
    payload = json.loads(out)
    for entry in payload["entries"]:
        if entry["applicable"]:
            assert abs(entry["value"] - 1.0) < 1e-12
            assert entry["satisfied"]


def test_bounds_literal_view_shows_counterexample(capsys, monkeypatch):
    code, out, _ = run_cli(capsys, monkeypatch, ["bounds", "--interpretation", "literal"],
                           stdin=P5_EDGELIST)
    assert code == 0
    payload = json.loads(out)
    by_id = {e["bound_id"]: e for e in payload["entries"]}
    assert not by_id["biernacki_lower_literal"]["satisfied"]
    # proof view keeps only satisfied bounds on P5
    code, out, _ = run_cli(capsys, monkeypatch, ["bounds"], stdin=P5_EDGELIST)
    payload = json.loads(out)
    assert all(e["satisfied"] for e in payload["entries"] if e["applicable"])


def test_check_autodetect_and_override(capsys, monkeypatch):
    code, out, _ = run_cli(capsys, monkeypatch, ["check"], stdin=P5_EDGELIST)
    assert code == 0
    verdict = json.loads(out)
    assert verdict["graph_class"] == "tree"
    assert verdict["gamma"] == 2 and verdict["gamma_c"] == 3
    assert not verdict["energies_equal"]
    code, out, _ = run_cli(capsys, monkeypatch, ["check", "--class", "block"],
                           stdin=P5_EDGELIST)
    verdict = json.loads(out)
    assert verdict["graph_class"] == "block" and not verdict["predicate_holds"]


# ---------------------------------------------------------------------------
# scan
# ---------------------------------------------------------------------------

def test_scan_stream(capsys, monkeypatch):
    stream = "\n".join(encode_graph6(g) for g in connected_graphs(4)) + "\njunk!!\n"
    code, out, err = run_cli(capsys, monkeypatch, ["scan"], stdin=stream)
    assert code == 0
    assert "skipped=1" in err
    for line in out.splitlines():
        hit = json.loads(line)
        assert hit["gamma"] != hit["gamma_c"]


def test_scan_limit(capsys, monkeypatch):
    stream = "\n".join(encode_graph6(g) for g in connected_graphs(4))
    code, _, err = run_cli(capsys, monkeypatch, ["scan", "--limit", "2"], stdin=stream)
    assert code == 0
    assert "scanned=2" in err


# ---------------------------------------------------------------------------
# qspr
# ---------------------------------------------------------------------------

def test_qspr_json(capsys, monkeypatch, alkane_csv_text):
    code, out, _ = run_cli(capsys, monkeypatch, ["qspr"], stdin=alkane_csv_text)
    assert code == 0
    payload = json.loads(out)
    hv = next(r for r in payload["regressions"] if r["property_id"] == "hv")
    assert abs(hv["slope"] - 10.0) < 1e-9
    assert abs(hv["pearson_r"] - 1.0) < 1e-9
    assert payload["hv_band_fraction"] == 1.0
    # informational comparison against the reference correlation
    assert payload["hv_reference_r"] == 0.995
    assert payload["hv_r_minus_reference"] == pytest.approx(
        hv["pearson_r"] - 0.995, abs=1e-15)


def test_qspr_plot_dir(tmp_path, capsys, monkeypatch, alkane_csv_text):
    code, _, _ = run_cli(capsys, monkeypatch,
                         ["qspr", "--plot-dir", str(tmp_path)], stdin=alkane_csv_text)
    assert code == 0
    hv_csv = (tmp_path / "qspr_hv.csv").read_text().splitlines()
    assert hv_csv[0] == "descriptor,property"
    assert len(hv_csv) == 13  # header + 12 records
    assert not (tmp_path / "qspr_mv.csv").exists()  # property absent everywhere


# ---------------------------------------------------------------------------
# error handling and exit codes
# ---------------------------------------------------------------------------

def test_malformed_input_exits_1_no_partial_payload(capsys, monkeypatch):
    code, out, err = run_cli(capsys, monkeypatch, ["energy"], stdin="3\n0 9\n")
    assert code == 1
    assert out == ""
    assert "error" in err


def test_disconnected_graph_exits_1(capsys, monkeypatch):
    code, out, err = run_cli(capsys, monkeypatch, ["energy", "--kind", "connected"],
                             stdin="4\n0 1\n2 3\n")
    assert code == 1 and out == ""


def test_usage_error_exits_2(capsys, monkeypatch):
    code, _, _ = run_cli(capsys, monkeypatch, ["energy", "--kind", "total"],
                         stdin=P5_EDGELIST)
    assert code == 2
    code, _, _ = run_cli(capsys, monkeypatch, ["frobnicate"])
    assert code == 2


def test_bad_tol_exits_2(capsys, monkeypatch):
    code, _, _ = run_cli(capsys, monkeypatch, ["energy", "--tol", "-1"],
                         stdin=P5_EDGELIST)
    assert code == 2


def test_missing_file_exits_1(capsys, monkeypatch):
    code, out, err = run_cli(capsys, monkeypatch, ["energy", "--input", "no/such/file"])
    assert code == 1 and "error" in err
