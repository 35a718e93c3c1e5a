"""Command-line interface.

Usage::

    vertex-energy catalog
    vertex-energy energy --graph frucht --method all
    vertex-energy energy --stdin --format json < graphs.g6
    vertex-energy walks --graph frucht --kmax 11 --format csv
    vertex-energy verify --all-catalog --tolerance 1e-6
    vertex-energy figure-data --graph frucht

Exit codes: 0 success, 1 verification failure, 2 input or parse error,
3 numerical failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass
from typing import Iterable, TextIO

import numpy as np

from .catalog import VERTEX_TRANSITIVE, NamedGraphId, named_graph
from .energy import METHODS, EnergyReport, graph_spectrum, vertex_energies
from .errors import InputError, NumericalError
from .graph import Graph, is_regular
from .graph6 import parse_graph6
from .spectral import cluster_eigenvalues
from .verify import run_checks
from .walks import walk_table

__all__ = ["main", "build_parser", "OutputRecord"]

EXIT_OK, EXIT_VERIFY, EXIT_INPUT, EXIT_NUMERIC = 0, 1, 2, 3
DEFAULT_TOLERANCE = 1e-6
FORMATS = ("table", "csv", "json")


@dataclass(frozen=True)
class OutputRecord:
    graph: str
    n: int
    method: str
    energies: tuple[float, ...]
    total: float
    diagnostics: dict[str, float]

    @classmethod
    def from_report(cls, label: str, report: EnergyReport) -> "OutputRecord":
        return cls(
            label,
            report.n,
            report.method,
            tuple(float(x) for x in report.energies),
            float(report.total),
            {k: float(v) for k, v in sorted(report.diagnostics.items())},
        )

    def to_json(self) -> dict:
        return {
            "graph": self.graph,
            "n": self.n,
            "method": self.method,
            "vertices": list(range(1, self.n + 1)),
            "energies": list(self.energies),
            "total": self.total,
            "diagnostics": self.diagnostics,
        }


def _fmt(x: float) -> str:
    # avoid "-0.000000" from rounding noise
    return f"{0.0 if abs(x) < 5e-7 else x:.6f}"


def _read_graph6_lines(stream: Iterable[str]) -> list[tuple[str, Graph]]:
    graphs = []
    for line in stream:
        line = line.strip()
        if line:
            graphs.append((line, parse_graph6(line)))
    if not graphs:
        raise InputError("no graph6 input")
    return graphs


def _load_sources(args: argparse.Namespace, stdin: TextIO) -> list[tuple[str, Graph]]:
    if getattr(args, "all_catalog", False):
        return [(gid.value, named_graph(gid)) for gid in NamedGraphId]
    if args.graph:
        return [(args.graph, named_graph(args.graph))]
    if args.file:
        try:
            with open(args.file, encoding="ascii") as fh:
                return _read_graph6_lines(fh)
        except OSError as exc:
            raise InputError(f"cannot read {args.file}: {exc}") from exc
        except UnicodeDecodeError as exc:
            raise InputError(f"{args.file} is not ASCII graph6") from exc
    if args.stdin:
        return _read_graph6_lines(stdin)
    raise InputError("no graph source given (use --graph, --file or --stdin)")


def _add_source(p: argparse.ArgumentParser, all_catalog: bool = False) -> None:
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--graph", choices=[g.value for g in NamedGraphId], help="catalog graph")
    group.add_argument("--file", metavar="PATH", help="graph6 file, one graph per line")
    group.add_argument("--stdin", action="store_true", help="read graph6 lines from stdin")
    if all_catalog:
        group.add_argument("--all-catalog", action="store_true", help="every catalog graph")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vertex-energy", description="Per-vertex graph energy by several numerical routes."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("catalog", help="list the named graphs")
    p.add_argument("--format", choices=FORMATS, default="table")

    p = sub.add_parser("energy", help="per-vertex energies")
    _add_source(p)
    p.add_argument("--method", choices=METHODS + ("all",), default="spectral")
    p.add_argument("--format", choices=FORMATS, default="table")

    p = sub.add_parser("walks", help="closed-walk counts per vertex")
    _add_source(p)
    p.add_argument("--kmax", type=int, default=None, help="default: distinct eigenvalues - 1")
    p.add_argument("--format", choices=FORMATS, default="csv")

    p = sub.add_parser("verify", help="run the consistency checks")
    _add_source(p, all_catalog=True)
    p.add_argument("--tolerance", type=float, default=None)

    p = sub.add_parser("figure-data", help="vertex,energy CSV for plotting")
    _add_source(p)
    return parser


def _write_csv(out: TextIO, header: list[str], rows: Iterable[list]) -> None:
    w = csv.writer(out, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)


def cmd_catalog(args: argparse.Namespace, out: TextIO) -> int:
    rows = []
    for gid in NamedGraphId:
        g = named_graph(gid)
        d = cluster_eigenvalues(graph_spectrum(g)).d
        rows.append([gid.value, g.n, is_regular(g), d])
    if args.format == "csv":
        _write_csv(out, ["name", "n", "degree", "distinct_eigenvalues"], rows)
    elif args.format == "json":
        keys = ("name", "n", "degree", "distinct_eigenvalues")
        json.dump([dict(zip(keys, r)) for r in rows], out, indent=2)
        out.write("\n")
    else:
        for r in rows:
            out.write(" ".join(str(x) for x in r) + "\n")
    return EXIT_OK


def _max_discrepancy(reports: list[EnergyReport]) -> float:
    return max(
        (float(np.abs(a.energies - b.energies).max()) for i, a in enumerate(reports) for b in reports[i + 1:]),
        default=0.0,
    )


def cmd_energy(args: argparse.Namespace, graphs: list[tuple[str, Graph]], out: TextIO) -> int:
    methods = ["spectral", "weights", "moments"] if args.method == "all" else [args.method]
    records: list[OutputRecord] = []
    discrepancies: list[tuple[str, float]] = []
    for label, g in graphs:
        reports = [vertex_energies(g, m) for m in methods]
        records.extend(OutputRecord.from_report(label, r) for r in reports)
        if args.method == "all":
            discrepancies.append((label, _max_discrepancy(reports)))

    if args.format == "json":
        doc: dict = {"records": [r.to_json() for r in records]}
        if discrepancies:
            doc["max_discrepancy"] = [{"graph": lbl, "value": v} for lbl, v in discrepancies]
        json.dump(doc, out, indent=2)
        out.write("\n")
    elif args.format == "csv":
        rows = [[r.graph, r.method, i + 1, _fmt(e)] for r in records for i, e in enumerate(r.energies)]
        rows += [[lbl, "max_discrepancy", "", f"{v:.3e}"] for lbl, v in discrepancies]
        _write_csv(out, ["graph", "method", "vertex", "energy"], rows)
    else:
        for r in records:
            out.write(f"# {r.graph}  n={r.n}  method={r.method}  total={_fmt(r.total)}\n")
            out.write("vertex  energy\n")
            for i, e in enumerate(r.energies):
                out.write(f"{i + 1:>6}  {_fmt(e)}\n")
            diag = "  ".join(f"{k}={v:.3e}" for k, v in r.diagnostics.items())
            out.write(f"# diagnostics: {diag}\n\n")
        for lbl, v in discrepancies:
            out.write(f"# {lbl}: max pairwise discrepancy {v:.3e}\n")
    return EXIT_OK


def cmd_walks(args: argparse.Namespace, graphs: list[tuple[str, Graph]], out: TextIO) -> int:
    if args.kmax is not None and args.kmax < 0:
        raise InputError("--kmax must be >= 0")
    docs = []
    for label, g in graphs:
        kmax = args.kmax
        if kmax is None:
            kmax = cluster_eigenvalues(graph_spectrum(g)).d - 1
        t = walk_table(g, kmax)
        header = ["k"] + [f"v{i + 1}" for i in range(g.n)]
        rows = [[k] + t.row(k) for k in range(kmax + 1)]
        if args.format == "json":
            docs.append({"graph": label, "kmax": kmax, "columns": header[1:], "counts": [r[1:] for r in rows]})
        elif args.format == "csv":
            _write_csv(out, header, rows)
        else:
            out.write(f"# {label}\n")
            width = max(len(str(x)) for r in rows for x in r + header)
            for r in [header] + rows:
                out.write(" ".join(f"{x:>{width}}" for x in r) + "\n")
    if args.format == "json":
        json.dump(docs, out, indent=2)
        out.write("\n")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace, graphs: list[tuple[str, Graph]], out: TextIO) -> int:
    tol = args.tolerance
    if tol is None:
        tol = float(os.environ.get("VE_TOLERANCE", DEFAULT_TOLERANCE))
    ok = True
    for label, g in graphs:
        transitive = label in {gid.value for gid in VERTEX_TRANSITIVE}
        for res in run_checks(g, tol, transitive=transitive):
            ok &= res.passed
            out.write(f"[{label}] {res.line()}\n")
    out.write(f"{'all checks pass' if ok else 'verification FAILED'}\n")
    return EXIT_OK if ok else EXIT_VERIFY


def cmd_figure_data(args: argparse.Namespace, graphs: list[tuple[str, Graph]], out: TextIO) -> int:
    for _, g in graphs:
        report = vertex_energies(g, "spectral")
        _write_csv(out, ["vertex", "energy"], [[i + 1, _fmt(e)] for i, e in enumerate(report.energies)])
    return EXIT_OK


_COMMANDS = {
    "energy": cmd_energy,
    "walks": cmd_walks,
    "verify": cmd_verify,
    "figure-data": cmd_figure_data,
}


def main(argv: list[str] | None = None, stdin: TextIO | None = None, stdout: TextIO | None = None) -> int:
    stdin = stdin if stdin is not None else sys.stdin
    stdout = stdout if stdout is not None else sys.stdout
    args = build_parser().parse_args(argv)
    buf = io.StringIO()
    try:
        if args.command == "catalog":
            code = cmd_catalog(args, buf)
        else:
            graphs = _load_sources(args, stdin)
            code = _COMMANDS[args.command](args, graphs, buf)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except NumericalError as exc:
        print(f"numerical failure: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    stdout.write(buf.getvalue())
    return code


def run() -> None:
    sys.exit(main())
