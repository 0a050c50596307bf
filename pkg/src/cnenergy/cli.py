"""Command-line front end.

Exit codes: 0 success, 1 input error, 2 numerical failure, 3 a checked
statement was violated.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, TextIO

from . import bounds, closed_forms, energies
from .families import generate, parse_family
from .graph import Graph, GraphFormatError, enumerate_all_labeled_graphs, parse_edge_list
from .graph6 import encode_graph6, parse_graph6
from .scan import scan_corpus
from .spectra import ConvergenceError
from .tolerances import Tolerances

EXIT_OK, EXIT_INPUT, EXIT_NUMERIC, EXIT_VIOLATION = 0, 1, 2, 3
WORKERS_ENV = "CNENERGY_WORKERS"


class InputError(Exception):
    pass


def _positive_float(text: str) -> float:
    value = float(text)
    if not value > 0:
        raise argparse.ArgumentTypeError(f"must be positive, got {text}")
    return value


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be at least 1, got {text}")
    return value


def _default_workers() -> int:
    try:
        return max(1, int(os.environ.get(WORKERS_ENV, "1")))
    except ValueError:
        return 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cnenergy", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--tol-solve", type=_positive_float, default=Tolerances.solve)
    common.add_argument("--tol-group", type=_positive_float, default=Tolerances.group)
    common.add_argument("--tol-eq", type=_positive_float, default=Tolerances.eq)
    common.add_argument("--tol-cmp", type=_positive_float, default=Tolerances.cmp)

    def add_sources(p: argparse.ArgumentParser, exhaustive: bool = False) -> None:
        group = p.add_mutually_exclusive_group(required=True)
        group.add_argument("--family", metavar="SPEC", help="family expression, e.g. K4+K6, Kmn:2,3, K2vK3")
        group.add_argument("--edges", metavar="PATH", help="edge-list file ('-' for stdin)")
        group.add_argument("--graph6", metavar="PATH", help="graph6 file, one graph per line ('-' for stdin)")
        if exhaustive:
            group.add_argument("--exhaustive", type=int, metavar="N", help="all labeled graphs on N vertices")

    p = sub.add_parser("compute", parents=[common], help="energy report per graph")
    add_sources(p)
    p.add_argument("--spectra", action="store_true", help="include grouped spectra")

    p = sub.add_parser("verify", parents=[common], help="check identities and bounds")
    add_sources(p, exhaustive=True)
    p.add_argument("--checks", default="all", help=f"all, or comma-separated from: {', '.join(bounds.CHECKS)}")
    p.add_argument("--workers", type=_positive_int, default=_default_workers())

    p = sub.add_parser("scan", parents=[common], help="scan a graph6 stream")
    p.add_argument("input", nargs="?", default="-", help="graph6 file ('-' or omitted for stdin)")
    p.add_argument("--checks", default="all")
    p.add_argument("--limit", type=_positive_int)
    p.add_argument("--strict", action="store_true", help="stop at the first malformed line")
    p.add_argument("--workers", type=_positive_int, default=_default_workers())

    p = sub.add_parser("families", parents=[common], help="closed forms vs numerics for a family")
    p.add_argument("--family", metavar="SPEC")
    return parser


def _tolerances(args: argparse.Namespace) -> Tolerances:
    return Tolerances(solve=args.tol_solve, group=args.tol_group, eq=args.tol_eq, cmp=args.tol_cmp)


def _open_text(path: str, stdin: TextIO) -> str:
    if path == "-":
        return stdin.read()
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(str(exc)) from None


@dataclass
class Graph6Stream:
    """Lazily parsed graph6 lines; malformed lines are collected or raised."""

    lines: list[str]
    strict: bool = False
    limit: int | None = None
    errors: list[dict] = field(default_factory=list)

    def __iter__(self) -> Iterator[Graph]:
        count = 0
        for lineno, line in enumerate(self.lines, start=1):
            if self.limit is not None and count >= self.limit:
                return
            if not line.strip():
                continue
            try:
                g = parse_graph6(line)
            except GraphFormatError as exc:
                if self.strict:
                    raise InputError(f"line {lineno}: {exc}") from None
                self.errors.append({"line": lineno, "error": str(exc)})
                print(f"line {lineno}: {exc}", file=sys.stderr)
                continue
            count += 1
            yield g


def _load_graphs(args: argparse.Namespace, stdin: TextIO) -> list[tuple[str, Graph]]:
    """(label, graph) pairs from the selected input source."""
    try:
        if args.family is not None:
            return [(args.family, generate(parse_family(args.family)))]
        if args.edges is not None:
            g = parse_edge_list(_open_text(args.edges, stdin))
            return [(args.edges, g)]
        if args.graph6 is not None:
            stream = Graph6Stream(_open_text(args.graph6, stdin).splitlines(), strict=True)
            return [(encode_graph6(g), g) for g in stream]
        n = args.exhaustive
        return [(encode_graph6(g), g) for g in enumerate_all_labeled_graphs(n)]
    except (GraphFormatError, ValueError) as exc:
        raise InputError(str(exc)) from None


def _grouped(spectrum) -> list[list[float]]:
    return [[energies.fmt_float(v), m] for v, m in spectrum.grouped]


def cmd_compute(args: argparse.Namespace, out: TextIO, stdin: TextIO) -> int:
    tol = _tolerances(args)
    graphs = _load_graphs(args, stdin)
    if args.format == "csv":
        print("source," + energies.CSV_HEADER, file=out)
    for label, g in graphs:
        s = energies.graph_spectra(g, tol)
        report = energies.full_report(g, tol, spectra_bundle=s)
        if args.format == "json":
            record = {"source": label, "graph6": encode_graph6(g), **report.to_dict()}
            if args.spectra:
                record["spectra"] = {
                    "adjacency": _grouped(s.a),
                    "laplacian": _grouped(s.l),
                    "signless_laplacian": _grouped(s.q),
                    "cn": _grouped(s.cn_spec),
                    "cn_laplacian": _grouped(s.cnl),
                    "cn_signless_laplacian": _grouped(s.cnsl),
                }
            print(json.dumps(record), file=out)
        elif args.format == "csv":
            print(f"{_csv_label(label)},{report.csv_row()}", file=out)
        else:
            _print_report_text(label, report, s if args.spectra else None, out)
    return EXIT_OK


def _csv_label(label: str) -> str:
    return f'"{label}"' if any(c in label for c in ',"') else label


def _print_report_text(label: str, report: energies.EnergyReport, s, out: TextIO) -> None:
    print(f"{label}: n={report.n} edges={report.m_edges} M1={report.zagreb_m1} tr(CNRS)={report.trace_cnrs}", file=out)
    for name, value in report.energies().items():
        print(f"  {name:30s} {energies.fmt_float(value)!r}", file=out)
    flags = report.hyper_flags.names()
    print(f"  hyperenergetic: {', '.join(flags) if flags else 'none'}", file=out)
    if s is not None:
        for name, spec in (("A", s.a), ("L", s.l), ("Q", s.q), ("CN", s.cn_spec), ("CNL", s.cnl), ("CNSL", s.cnsl)):
            body = ", ".join(f"{energies.fmt_float(v)!r}^{m}" for v, m in spec.grouped)
            print(f"  spec {name:4s} {{{body}}}", file=out)


def _exit_for(summary) -> int:
    if summary.total_violations:
        return EXIT_VIOLATION
    if summary.failures:
        return EXIT_NUMERIC
    return EXIT_OK


def _print_summary(summary, args: argparse.Namespace, out: TextIO, extra: dict | None = None) -> None:
    data = summary.to_dict()
    if extra:
        data.update(extra)
    if args.format == "json":
        print(json.dumps(data), file=out)
        return
    if args.format == "csv":
        print("theorem_id,checked,violations,equality_count,inapplicable,min_slack,min_slack_graph", file=out)
        for tid, t in data["theorems"].items():
            row = [tid, t["checked"], t["violations"], t["equality_count"], t["inapplicable"], t["min_slack"], t["min_slack_graph"]]
            print(",".join("" if v is None else str(v) for v in row), file=out)
        return
    print(f"graphs checked: {data['graphs']}  violations: {data['total_violations']}", file=out)
    print(f"{'theorem':28s} {'checked':>8s} {'viol':>6s} {'equal':>7s} {'n/a':>7s}  min slack (graph)", file=out)
    for tid, t in data["theorems"].items():
        slack = "-" if t["min_slack"] is None else f"{t['min_slack']!r} ({t['min_slack_graph']})"
        print(
            f"{tid:28s} {t['checked']:8d} {t['violations']:6d} {t['equality_count']:7d} {t['inapplicable']:7d}  {slack}",
            file=out,
        )
    for v in data["violations"]:
        print(f"VIOLATION {v['theorem_id']} graph6={v['graph6']} {v['lhs']} {v['relation']} {v['rhs']}", file=out)
    for h in data["hyperenergetic"]:
        print(f"hyperenergetic graph6={h['graph6']}: {', '.join(h['flags'])}", file=out)
    for f in data["failures"]:
        print(f"FAILED graph6={f['graph6']}: {f['error']}", file=out)
    for r in data.get("reports", []):
        if "inapplicable" in r:
            print(f"  {r['theorem_id']:28s} inapplicable: {r['inapplicable']}", file=out)
        else:
            mark = "=" if r["equality"] else ("ok" if r["holds"] else "VIOLATED")
            print(f"  {r['theorem_id']:28s} {r['lhs']!r} {r['relation']} {r['rhs']!r}  [{mark}]", file=out)
    for e in data.get("parse_errors", []):
        print(f"malformed line {e['line']}: {e['error']}", file=out)


def cmd_verify(args: argparse.Namespace, out: TextIO, stdin: TextIO) -> int:
    tol = _tolerances(args)
    try:
        selection = bounds.normalize_selection(args.checks)
        if args.exhaustive is not None:
            graphs = enumerate_all_labeled_graphs(args.exhaustive)
            single = None
        else:
            loaded = _load_graphs(args, stdin)
            graphs = [g for _, g in loaded]
            single = graphs[0] if len(graphs) == 1 else None
    except (ValueError, GraphFormatError) as exc:
        raise InputError(str(exc)) from None
    summary = scan_corpus(graphs, selection, tol, workers=args.workers)
    extra = None
    if single is not None and not summary.failures:
        extra = {"reports": [r.to_dict() for r in bounds.run_checks(single, selection, tol)]}
    _print_summary(summary, args, out, extra)
    return _exit_for(summary)


def cmd_scan(args: argparse.Namespace, out: TextIO, stdin: TextIO) -> int:
    tol = _tolerances(args)
    try:
        selection = bounds.normalize_selection(args.checks)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    stream = Graph6Stream(_open_text(args.input, stdin).splitlines(), strict=args.strict, limit=args.limit)
    summary = scan_corpus(stream, selection, tol, workers=args.workers)
    _print_summary(summary, args, out, {"parse_errors": stream.errors})
    return _exit_for(summary)


def _family_table(spec: str, tol: Tolerances) -> dict:
    family = parse_family(spec)
    g = generate(family)
    report = energies.full_report(g, tol)
    cf = closed_forms.closed_form_for(family)
    row = {
        "family": spec,
        "n": g.n,
        "numeric": {"le_cn": energies.fmt_float(report.cn_laplacian_energy),
                    "le_plus_cn": energies.fmt_float(report.cn_signless_laplacian_energy)},
        "closed_form": None,
    }
    if cf is not None:
        row["closed_form"] = {
            "le_cn": str(cf.le_cn),
            "le_plus_cn": str(cf.le_plus_cn),
            "cnl_spectrum": [[str(v), m] for v, m in cf.cnl_spectrum],
            "cnq_spectrum": [[str(v), m] for v, m in cf.cnq_spectrum],
        }
    return row


def cmd_families(args: argparse.Namespace, out: TextIO, stdin: TextIO) -> int:
    if args.family is None:
        from . import families

        print(families.__doc__.strip(), file=out)
        print("\nClosed forms are known for K<n>, Kmn:<m>,<n>, S<k>, joins of K<n>, and E<m>vE<n>.", file=out)
        return EXIT_OK
    try:
        row = _family_table(args.family, _tolerances(args))
    except (GraphFormatError, ValueError) as exc:
        raise InputError(str(exc)) from None
    if args.format == "json":
        print(json.dumps(row), file=out)
        return EXIT_OK
    print(f"{row['family']} (n={row['n']})", file=out)
    cf = row["closed_form"]
    for key in ("le_cn", "le_plus_cn"):
        exact = "" if cf is None else f"  closed form {cf[key]} = {float(Fraction(cf[key]))!r}"
        print(f"  {key:11s} numeric {row['numeric'][key]!r}{exact}", file=out)
    if cf is not None:
        for key in ("cnl_spectrum", "cnq_spectrum"):
            print(f"  {key}: " + ", ".join(f"{v}^{m}" for v, m in cf[key]), file=out)
    return EXIT_OK


COMMANDS = {"compute": cmd_compute, "verify": cmd_verify, "scan": cmd_scan, "families": cmd_families}


def main(argv: list[str] | None = None, out: TextIO | None = None, stdin: TextIO | None = None) -> int:
    out = out or sys.stdout
    stdin = stdin or sys.stdin
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_INPUT
    try:
        return COMMANDS[args.command](args, out, stdin)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ConvergenceError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
