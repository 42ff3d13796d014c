"""Command-line surface: energy, spectrum, bounds, check, scan, qspr.

Exit codes: 0 ok, 1 domain error, 2 usage error, 3 internal error. Payloads go
to stdout (JSON by default, CSV with --format csv), diagnostics to stderr.
JSON carries full-precision floats; CSV rounds energies and eigenvalues to
3 decimals for presentation.
"""

from __future__ import annotations

import argparse
import json
import sys

from .graphs import Graph, ParseError, parse_edge_list, parse_graph6
from .domination import (
    KIND_CONNECTED,
    KIND_DOMINATING,
    DominationError,
)
from .spectral import (
    DEFAULT_EIG_TOL,
    NonConvergenceError,
    c_dominating_energy,
    dominating_energy,
    energy_spread_over_min_sets,
)
from .bounds import LITERAL, PROOF, check_all
from .characterize import (
    DEFAULT_ENERGY_TOL,
    GRAPH_CLASSES,
    classify,
    open_problem_scan,
)
from .qspr import (
    PROPERTY_IDS,
    AlkaneCsvError,
    descriptor,
    eq1_band_check,
    fit_and_report,
    load_alkane_csv,
)

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3

_KINDS = {"dominating": KIND_DOMINATING, "connected": KIND_CONNECTED}

# entries shown by `bounds` for each interpretation choice
_BOUND_VIEWS = {
    PROOF: (
        "mcclelland_upper", "biernacki_lower", "cor6_lower", "diaz_metcalf_lower",
        "det_lower", "lambda1_lower", "koolen_moulton_upper",
    ),
    LITERAL: (
        "mcclelland_upper", "biernacki_lower_literal", "cor6_lower_literal",
        "diaz_metcalf_statement", "det_lower", "lambda1_lower", "koolen_moulton_upper",
    ),
}


def _read_text(source: str) -> str:
    if source == "-":
        return sys.stdin.read()
    with open(source, "r", encoding="utf-8") as fh:
        return fh.read()


def _load_graph(args) -> Graph:
    text = _read_text(args.input)
    if args.input_format == "graph6":
        for line in text.splitlines():
            if line.strip():
                return parse_graph6(line)
        raise ParseError("no graph6 line found in input")
    return parse_edge_list(text)


def _round3(x: float) -> float:
    return round(x, 3)


def _emit(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _json_line(payload) -> str:
    return json.dumps(payload)


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def _cmd_energy(args) -> int:
    g = _load_graph(args)
    kind = _KINDS[args.kind]
    report = (c_dominating_energy if kind == KIND_CONNECTED else dominating_energy)(g, args.tol)
    payload = report.to_json_dict()
    if args.all_min_sets:
        lo, hi, count = energy_spread_over_min_sets(g, kind, args.limit, args.tol)
        payload["spread"] = {"min": lo, "max": hi, "count": count}
    if args.format == "json":
        _emit(_json_line(payload))
    else:
        lines = ["n,m,kind,gamma,energy", f"{report.n},{report.m},{report.kind},"
                 f"{report.gamma_used},{_round3(report.energy):.3f}"]
        if args.all_min_sets:
            lines.append("spread_min,spread_max,count")
            lines.append(f"{_round3(payload['spread']['min']):.3f},"
                         f"{_round3(payload['spread']['max']):.3f},{payload['spread']['count']}")
        _emit("\n".join(lines))
    return EXIT_OK


def _cmd_spectrum(args) -> int:
    g = _load_graph(args)
    kind = _KINDS[args.kind]
    report = (c_dominating_energy if kind == KIND_CONNECTED else dominating_energy)(g, args.tol)
    if args.format == "json":
        _emit(_json_line(report.to_json_dict()))
    else:
        lines = ["item,index,value"]
        for i, c in enumerate(report.charpoly.coeffs):
            lines.append(f"coeff,{i},{c}")
        for i, v in enumerate(report.spectrum.values):
            lines.append(f"eigenvalue,{i},{_round3(v):.3f}")
        _emit("\n".join(lines))
    return EXIT_OK


def _cmd_bounds(args) -> int:
    g = _load_graph(args)
    report = check_all(g, args.tol)
    wanted = _BOUND_VIEWS[args.interpretation]
    entries = [e for bid in wanted for e in report.entries if e.bound_id == bid]
    if args.format == "json":
        payload = report.to_json_dict()
        payload["entries"] = [e.to_json_dict() for e in entries]
        _emit(_json_line(payload))
    else:
        lines = ["bound_id,kind,target,interpretation,value,satisfied,slack,applicable,clamped"]
        for e in entries:
            lines.append(f"{e.bound_id},{e.kind},{e.target},{e.interpretation},{e.value!r},"
                         f"{e.satisfied},{e.slack!r},{e.applicable},{e.clamped}")
        _emit("\n".join(lines))
    return EXIT_OK


def _cmd_check(args) -> int:
    g = _load_graph(args)
    verdict = classify(g, tol=args.tol, force_class=args.force_class)
    if args.format == "json":
        _emit(_json_line(verdict.to_json_dict()))
    else:
        _emit("graph_class,applicable,predicate_holds,gamma,gamma_c,energy_d,energy_dc,energies_equal\n"
              f"{verdict.graph_class},{verdict.applicable},{verdict.predicate_holds},"
              f"{verdict.gamma},{verdict.gamma_c},{_round3(verdict.energy_d):.3f},"
              f"{_round3(verdict.energy_dc):.3f},{verdict.energies_equal}")
    return EXIT_OK


def _cmd_scan(args) -> int:
    text = _read_text(args.input)
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if args.limit is not None:
        lines = lines[: args.limit]
    hits, skipped = open_problem_scan(lines, tol=args.tol)
    if args.format == "json":
        for hit in hits:
            _emit(_json_line(hit.to_json_dict()))
    else:
        out = ["graph6,gamma,gamma_c,energy_D,energy_Dc"]
        for hit in hits:
            out.append(f"{hit.graph6},{hit.gamma},{hit.gamma_c},"
                       f"{_round3(hit.energy_d):.3f},{_round3(hit.energy_dc):.3f}")
        _emit("\n".join(out))
    print(f"scanned={len(lines)} hits={len(hits)} skipped={skipped}", file=sys.stderr)
    return EXIT_OK


HV_REFERENCE_R = 0.995  # reference correlation for the heat-of-vaporization model


def _cmd_qspr(args) -> int:
    records = load_alkane_csv(_read_text(args.input))
    regressions = []
    for pid in PROPERTY_IDS:
        count = sum(1 for r in records if pid in r.properties)
        if count >= 3:
            regressions.append(fit_and_report(records, pid))
    try:
        band = eq1_band_check(records)
    except ValueError:
        band = None
    hv_fit = next((r for r in regressions if r.property_id == "hv"), None)
    if args.plot_dir is not None:
        import os

        os.makedirs(args.plot_dir, exist_ok=True)
        for pid in PROPERTY_IDS:
            rows = [(descriptor(r), r.properties[pid]) for r in records if pid in r.properties]
            if not rows:
                continue
            path = os.path.join(args.plot_dir, f"qspr_{pid}.csv")
            with open(path, "w", encoding="utf-8") as fh:
                fh.write("descriptor,property\n")
                for x, y in rows:
                    fh.write(f"{x!r},{y!r}\n")
    if args.format == "json":
        payload = {
            "regressions": [r.to_json_dict() for r in regressions],
            "hv_band_fraction": band,
            "hv_reference_r": HV_REFERENCE_R,
            "hv_r_minus_reference": (
                None if hv_fit is None else hv_fit.pearson_r - HV_REFERENCE_R
            ),
        }
        _emit(_json_line(payload))
    else:
        lines = ["property_id,sample_count,slope,intercept,pearson_r,residual_sd"]
        for r in regressions:
            lines.append(f"{r.property_id},{r.sample_count},{r.slope!r},{r.intercept!r},"
                         f"{r.pearson_r!r},{r.residual_sd!r}")
        lines.append(f"hv_band_fraction,{'' if band is None else band!r}")
        if hv_fit is not None:
            lines.append(f"hv_r_minus_reference,{hv_fit.pearson_r - HV_REFERENCE_R!r}")
        _emit("\n".join(lines))
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def _add_io_flags(p, formats=("edgelist", "graph6")):
    p.add_argument("--input", default="-", help="input file, or - for stdin")
    if formats:
        p.add_argument("--input-format", choices=formats, default=formats[0])
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--tol", type=float, default=None)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="domenergy",
        description="Domination-based graph energies: exact solvers, spectra, bounds, checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("energy", help="energy report for the canonical optimal set")
    _add_io_flags(p)
    p.add_argument("--kind", choices=tuple(_KINDS), default="connected")
    p.add_argument("--all-min-sets", action="store_true",
                   help="also report the energy spread over all optimal sets")
    p.add_argument("--limit", type=int, default=1000)
    p.set_defaults(func=_cmd_energy, default_tol=DEFAULT_EIG_TOL)

    p = sub.add_parser("spectrum", help="characteristic polynomial and eigenvalues")
    _add_io_flags(p)
    p.add_argument("--kind", choices=tuple(_KINDS), default="connected")
    p.set_defaults(func=_cmd_spectrum, default_tol=DEFAULT_EIG_TOL)

    p = sub.add_parser("bounds", help="evaluate every spectral bound with slack")
    _add_io_flags(p)
    p.add_argument("--interpretation", choices=(PROOF, LITERAL), default=PROOF)
    p.set_defaults(func=_cmd_bounds, default_tol=DEFAULT_EIG_TOL)

    p = sub.add_parser("check", help="equal-energy characterization verdict")
    _add_io_flags(p)
    p.add_argument("--class", dest="force_class", choices=GRAPH_CLASSES, default=None)
    p.set_defaults(func=_cmd_check, default_tol=DEFAULT_ENERGY_TOL)

    p = sub.add_parser("scan", help="open-problem scan over a graph6 stream")
    p.add_argument("--input", default="-", help="graph6 stream file, or - for stdin")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--tol", type=float, default=None)
    p.add_argument("--limit", type=int, default=None, help="scan at most N stream entries")
    p.set_defaults(func=_cmd_scan, default_tol=DEFAULT_ENERGY_TOL)

    p = sub.add_parser("qspr", help="alkane descriptor regressions and the hv band check")
    p.add_argument("--input", default="-", help="alkane CSV file, or - for stdin")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--plot-dir", default=None,
                   help="write per-property descriptor,property CSV files here")
    p.set_defaults(func=_cmd_qspr, default_tol=None)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    if getattr(args, "tol", None) is None:
        args.tol = args.default_tol
    elif args.tol <= 0:
        print("error: --tol must be positive", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except (ParseError, DominationError, AlkaneCsvError, NonConvergenceError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except Exception as exc:  # pragma: no cover - defensive
        print(f"internal error: {exc!r}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
