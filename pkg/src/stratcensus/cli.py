"""Command-line interface: check, pi1, census, enumerate, tables."""

from __future__ import annotations

import argparse
import csv
import io
import sys
from pathlib import Path
from typing import Optional, Sequence

from .census import DEFAULT_LIMIT, ENGINES, CensusReport, brute_force_graphs, reconcile
from .classify import find_horned_tree, is_simply_connected, pi1_presentation, reduced_graph
from .documents import DocumentError, dump_document, parse_document, to_dot
from .graph import StratGraph, code_digest, is_tree, validate
from .trees import sequence_table

OK, REJECTED, INPUT_ERROR, DISAGREEMENT = 0, 1, 2, 3


def _err(msg: str) -> int:
    print(f"error: {msg}", file=sys.stderr)
    return INPUT_ERROR


def _load(path: str) -> StratGraph:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise DocumentError(f"cannot read {path}: {exc.strerror}") from exc
    g = parse_document(text)
    verdict = validate(g)
    if not verdict:
        raise DocumentError("; ".join(f"{r.code}: {r.message}" for r in verdict.reasons))
    return g


def _render_graph(g: StratGraph) -> str:
    return "\n".join(f"  {e.white} -({e.label})- {e.black}" for e in g.edges) or "  (no edges)"


def cmd_check(path: str, verbose: bool = False) -> int:
    try:
        g = _load(path)
    except DocumentError as exc:
        return _err(str(exc))
    verdict = is_simply_connected(g)
    if verdict:
        print("simply connected")
    else:
        print("not simply connected")
        for r in verdict.reasons:
            print(f"  {r.code}: {r.message}")
    if verbose and is_tree(g) and "component not collapsible" not in verdict.codes:
        try:
            red = reduced_graph(g)
        except ValueError:
            red = None
        if red is not None:
            print("reduced graph:")
            print(_render_graph(red))
            witness = find_horned_tree(red)
            if witness is not None:
                print("horned subtree:")
                print(_render_graph(witness))
    return OK if verdict else REJECTED


def cmd_pi1(path: str) -> int:
    try:
        g = _load(path)
        pres = pi1_presentation(g)
    except (DocumentError, ValueError) as exc:
        return _err(str(exc))
    print(pres.render())
    return OK


def render_csv(report: CensusReport) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["n", "b", "engine", "descriptor", "count"])
    for r in report.rows:
        w.writerow([r.n, r.b, r.engine, r.descriptor, r.count])
    for engine, totals in report.totals.items():
        for b, count in sorted(totals.items()):
            w.writerow([report.n, b, engine, "total", count])
        w.writerow([report.n, "", engine, "grand total", sum(totals.values())])
    return buf.getvalue()


def render_text(report: CensusReport) -> str:
    lines = [f"n = {report.n}"]
    for engine, totals in report.totals.items():
        lines.append(f"[{engine}]")
        for b in sorted(totals):
            lines.append(f"  b={b}: {totals[b]}")
            for r in report.rows_for(engine, b):
                if r.descriptor != "all":
                    lines.append(f"      {r.descriptor}: {r.count}")
        lines.append(f"  total: {sum(totals.values())}")
    if len(report.totals) > 1:
        lines.append("engines agree" if report.agrees else "ENGINES DISAGREE")
        lines += [f"  {w}" for w in report.witnesses]
    return "\n".join(lines) + "\n"


def cmd_census(
    n: int, engine: str = "all", fmt: str = "text", b: Optional[int] = None, limit: int = DEFAULT_LIMIT
) -> int:
    engines = ENGINES if engine == "all" else (engine,)
    try:
        report = reconcile(n, limit=limit, engines=engines, b_filter=b)
    except ValueError as exc:
        return _err(str(exc))
    sys.stdout.write(render_csv(report) if fmt == "csv" else render_text(report))
    return DISAGREEMENT if not report.agrees else OK


def cmd_enumerate(
    n: int, out: str, emit: str = "documents", b: Optional[int] = None, limit: int = DEFAULT_LIMIT
) -> int:
    try:
        graphs = brute_force_graphs(n, limit)
    except ValueError as exc:
        return _err(str(exc))
    target = Path(out)
    try:
        target.mkdir(parents=True, exist_ok=True)
        written = 0
        for bb, codes in graphs.items():
            if b is not None and bb != b:
                continue
            for code, g in codes.items():
                digest = code_digest(code)
                if emit == "dot":
                    (target / f"{digest}.dot").write_text(to_dot(g, digest))
                else:
                    (target / f"{digest}.json").write_text(dump_document(g))
                written += 1
    except OSError as exc:
        return _err(f"cannot write to {out}: {exc.strerror}")
    print(f"wrote {written} files to {target}")
    return OK


def render_tables(max_n: int) -> str:
    lines = ["n,R,M,U"] + [f"{n},{r},{m},{u}" for n, r, m, u in sequence_table(max_n)]
    return "\n".join(lines) + "\n"


def cmd_tables(max_n: int) -> int:
    if max_n < 1:
        return _err("--max-n must be at least 1")
    sys.stdout.write(render_tables(max_n))
    return OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="stratcensus", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="decide whether a graph document is simply connected")
    p.add_argument("path")
    p.add_argument("--verbose", "-v", action="store_true")

    p = sub.add_parser("pi1", help="print a fundamental group presentation")
    p.add_argument("path")

    def counting(p):
        p.add_argument("--white-vertices", "-n", type=int, required=True, dest="n")
        p.add_argument("--black3", "-b", type=int, default=None, help="only this many degree-3 blacks")
        p.add_argument("--limit", type=int, default=DEFAULT_LIMIT, help="largest n for generating engines")

    p = sub.add_parser("census", help="count 1-connected trivalent graphs")
    counting(p)
    p.add_argument("--engine", choices=("formula", "constructive", "brute", "all"), default="all")
    p.add_argument("--format", choices=("csv", "text"), default="text", dest="fmt")

    p = sub.add_parser("enumerate", help="write every graph as a document or DOT file")
    counting(p)
    p.add_argument("--out", required=True)
    p.add_argument("--emit", choices=("documents", "dot"), default="documents")

    p = sub.add_parser("tables", help="CSV of R_n, M_n, U_n")
    p.add_argument("--max-n", type=int, required=True, dest="max_n")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return INPUT_ERROR if exc.code else OK
    if args.command == "check":
        return cmd_check(args.path, args.verbose)
    if args.command == "pi1":
        return cmd_pi1(args.path)
    if args.command == "census":
        return cmd_census(args.n, args.engine, args.fmt, args.black3, args.limit)
    if args.command == "enumerate":
        return cmd_enumerate(args.n, args.out, args.emit, args.black3, args.limit)
    return cmd_tables(args.max_n)


if __name__ == "__main__":
    sys.exit(main())
