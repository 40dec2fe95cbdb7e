"""Command-line interface.

Subcommands:

    table       print the rank-3 character table for the given input
    scan        list all nontrivial fusion partitions of the tensor square
    wreath      wreath-product fusion classification (and table, with input)
    classify    symbolic classification of all 4140 partitions
    verify      matrix-level check of one partition on a named graph
    lattice     DOT Hasse diagram of the scan results
    crosscheck  criterion-versus-matrix comparison on a named graph

Input sources (exactly one per invocation where required):

    --n N --k K --mu MU --nu NU   strongly regular graph parameters
    --eigen k,l,r,s               exact table data, entries rational
    --graph NAME                  a named construction (see oracle module)

Exit codes: 0 success, 1 usage error, 2 a verification mismatch was found.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import __version__
from .classifier import classify_all, classify_wreath
from .exact import value_to_json
from .fusion import bm_check, fused_table, scan_all
from .oracle import (
    IntersectionTensor,
    build_graph,
    cross_check,
    scheme_matrices,
    srg_params,
    tensor_fuse,
    verify_scheme,
)
from .partitions import coarsenings, hasse_edges, parse
from .products import tensor_square_table, wreath_partition, wreath_table
from .scheme import (
    CharTable,
    SrgParams,
    char_table,
    eigen_from_params,
    eigen_from_values,
    feasibility,
)


class UsageError(ValueError):
    pass


def _eigen_from_args(args, required=True):
    sources = [
        args.n is not None or args.k is not None,
        args.eigen is not None,
        args.graph is not None,
    ]
    if sum(bool(s) for s in sources) != 1:
        if not required and not any(sources):
            return None
        raise UsageError("give exactly one input source: --n/--k/--mu/--nu, "
                         "--eigen, or --graph")
    integral = not args.table_algebra
    if args.eigen is not None:
        parts = args.eigen.split(",")
        if len(parts) != 4:
            raise UsageError("--eigen needs four comma-separated values k,l,r,s")
        k, l, r, s = (Fraction(x) for x in parts)
        return eigen_from_values(k, l, r, s, integral=integral)
    if args.graph is not None:
        return eigen_from_params(srg_params(build_graph(args.graph)),
                                 integral=integral)
    if None in (args.n, args.k, args.mu, args.nu):
        raise UsageError("all of --n, --k, --mu, --nu are required together")
    return eigen_from_params(SrgParams(args.n, args.k, args.mu, args.nu),
                             integral=integral)


def _echo_input(args) -> dict:
    if args.eigen is not None:
        return {"eigen": args.eigen}
    if args.graph is not None:
        return {"graph": args.graph}
    return {"n": args.n, "k": args.k, "mu": args.mu, "nu": args.nu}


def _print_table(table: CharTable, out):
    width = max(len(str(v)) for row in table.rows for v in row)
    width = max(width, *(len(c) for c in table.col_labels))
    head = " ".join(f"{c:>{width}}" for c in table.col_labels)
    label_w = max(len(r) for r in table.row_labels)
    print(f"{'':{label_w}}  {head}  mult", file=out)
    for label, row, mult in zip(table.row_labels, table.rows, table.mults):
        cells = " ".join(f"{str(v):>{width}}" for v in row)
        print(f"{label:{label_w}}  {cells}  {mult}", file=out)


def _scan_report(eigen, args) -> dict:
    table = tensor_square_table(char_table(eigen))
    verdicts = scan_all(table)
    entries = []
    for v in verdicts:
        ft = fused_table(table, v.partition)
        entries.append({
            "partition": str(v.partition),
            "rank": v.fused_rank,
            "fused_valencies": [value_to_json(x) for x in ft.valency_row()],
            "fused_multiplicities": [value_to_json(x) for x in ft.mults],
        })
    parts = [v.partition for v in verdicts]
    edges = [(str(a), str(b)) for a, b in hasse_edges(parts)]
    return {
        "input": _echo_input(args),
        "tool_version": __version__,
        "count": len(entries),
        "partitions": entries,
        "lattice_edges": edges,
    }


def cmd_table(args, out) -> int:
    eigen = _eigen_from_args(args)
    table = char_table(eigen)
    if args.format == "json":
        doc = {
            "input": _echo_input(args),
            "tool_version": __version__,
            "table": table.to_json(),
            "feasibility": {
                "primitive": feasibility(eigen).primitive,
                "imprimitive_kind": feasibility(eigen).imprimitive_kind,
            },
        }
        print(json.dumps(doc, indent=2, sort_keys=True), file=out)
    else:
        _print_table(table, out)
        rep = feasibility(eigen)
        kind = rep.imprimitive_kind
        print(f"primitive: {rep.primitive}"
              + (f" (imprimitive case {kind})" if kind != "none" else ""), file=out)
    return 0


def cmd_scan(args, out) -> int:
    eigen = _eigen_from_args(args)
    doc = _scan_report(eigen, args)
    if args.format == "json":
        print(json.dumps(doc, indent=2, sort_keys=True), file=out)
    else:
        print(f"{doc['count']} nontrivial fusion partitions", file=out)
        for entry in doc["partitions"]:
            print(f"  rank {entry['rank']}: {entry['partition']}", file=out)
    return 0


def cmd_lattice(args, out) -> int:
    eigen = _eigen_from_args(args)
    table = tensor_square_table(char_table(eigen))
    verdicts = scan_all(table)
    parts = [v.partition for v in verdicts]
    edges = hasse_edges(parts)
    by_rank: dict[int, list[str]] = {}
    for p in parts:
        by_rank.setdefault(p.rank, []).append(str(p))
    print("digraph fusions {", file=out)
    print("  rankdir=BT;", file=out)
    for rank in sorted(by_rank, reverse=True):
        names = " ".join(f'"{t}";' for t in sorted(by_rank[rank]))
        print(f"  {{ rank=same; {names} }}", file=out)
    for a, b in edges:
        print(f'  "{a}" -> "{b}";', file=out)
    print("}", file=out)
    return 0


def cmd_wreath(args, out) -> int:
    w = classify_wreath(args.orientation)
    doc = {
        "orientation": args.orientation,
        "base": str(w.base),
        "guaranteed": list(w.guaranteed),
        "special_clique_case": list(w.clique_case),
        "special_multipartite_case": list(w.multipartite_case),
        "never": list(w.never),
        "trivial": list(w.trivial),
    }
    eigen = _eigen_from_args(args, required=False)
    if eigen is not None:
        table = char_table(eigen)
        wt = wreath_table(table, args.orientation)
        tensor = tensor_square_table(table)
        base = wreath_partition(args.orientation)
        positives = [
            str(q) for q in coarsenings(base)
            if q != base and not q.is_single_block()
            and bm_check(tensor, q).is_fusion
        ]
        doc["input"] = _echo_input(args)
        doc["input_positive_coarsenings"] = positives
        if args.format != "json":
            _print_table(wt, out)
    if args.format == "json":
        doc["tool_version"] = __version__
        print(json.dumps(doc, indent=2, sort_keys=True), file=out)
    else:
        for key in ("guaranteed", "special_clique_case",
                    "special_multipartite_case", "never", "trivial"):
            print(f"{key}: {', '.join(doc[key])}", file=out)
        if "input_positive_coarsenings" in doc:
            print("positive coarsenings for this input:", file=out)
            for t in doc["input_positive_coarsenings"]:
                print(f"  {t}", file=out)
    return 0


def cmd_classify(args, out) -> int:
    result = classify_all()
    summary = result.summary()
    if args.format == "json":
        doc = {
            "tool_version": __version__,
            "summary": summary,
            "records": [rec.to_json() for rec in result.records],
        }
        print(json.dumps(doc, indent=2, sort_keys=True), file=out)
    else:
        print("classification of all 4140 partitions", file=out)
        for key in ("guaranteed", "trivial", "family", "infeasible", "unresolved"):
            print(f"  {key}: {summary[key]}", file=out)
        print("  family membership:", file=out)
        for fid, count in summary["families"].items():
            if count:
                parts = result.family_partitions(fid)
                shown = ", ".join(parts[:6]) + (" ..." if len(parts) > 6 else "")
                print(f"    {fid}: {count}  [{shown}]", file=out)
    return 0


def cmd_verify(args, out) -> int:
    if args.graph is None or args.partition is None:
        raise UsageError("verify needs --graph and --partition")
    g = build_graph(args.graph)
    p = parse(args.partition)
    sm = scheme_matrices(g)
    result = verify_scheme(tensor_fuse(sm, p))
    eigen = eigen_from_params(srg_params(g), integral=not args.table_algebra)
    criterion = bm_check(tensor_square_table(char_table(eigen)), p)
    oracle_ok = isinstance(result, IntersectionTensor)
    doc = {
        "graph": g.name,
        "partition": str(p),
        "criterion_fusion": criterion.is_fusion,
        "matrix_fusion": oracle_ok,
    }
    if oracle_ok:
        doc["rank"] = p.rank
        doc["fused_valencies"] = list(result.valencies)
    else:
        doc["witness"] = {
            "classes": (result.i, result.j, result.klass),
            "cells": [list(result.cell_a), list(result.cell_b)],
            "values": [result.value_a, result.value_b],
        }
    if args.format == "json":
        doc["tool_version"] = __version__
        print(json.dumps(doc, indent=2, sort_keys=True), file=out)
    else:
        if oracle_ok:
            print(f"{g.name} / {p}: fusion of rank {p.rank}, "
                  f"valencies {result.valencies}", file=out)
        else:
            print(f"{g.name} / {p}: not a fusion; product of classes "
                  f"{result.i},{result.j} takes values {result.value_a} and "
                  f"{result.value_b} on class {result.klass}", file=out)
    return 0 if criterion.is_fusion == oracle_ok else 2


def cmd_crosscheck(args, out) -> int:
    if args.graph is None:
        raise UsageError("crosscheck needs --graph")
    g = build_graph(args.graph)
    report = cross_check(g)
    doc = {
        "graph": report.graph,
        "checked": report.checked,
        "positives": report.positives,
        "disagreements": [list(d) for d in report.disagreements],
    }
    if args.format == "json":
        doc["tool_version"] = __version__
        print(json.dumps(doc, indent=2, sort_keys=True), file=out)
    else:
        print(f"{report.graph}: {report.checked} partitions checked, "
              f"{report.positives} fusions, "
              f"{len(report.disagreements)} disagreements", file=out)
    return 0 if report.clean else 2


_COMMANDS = {
    "table": cmd_table,
    "scan": cmd_scan,
    "classify": cmd_classify,
    "wreath": cmd_wreath,
    "verify": cmd_verify,
    "lattice": cmd_lattice,
    "crosscheck": cmd_crosscheck,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="srgfusion",
        description="exact fusion classification for tensor squares of "
                    "strongly regular graph schemes",
    )
    parser.add_argument("command", choices=sorted(_COMMANDS))
    parser.add_argument("--n", type=int)
    parser.add_argument("--k", type=int)
    parser.add_argument("--mu", type=int)
    parser.add_argument("--nu", type=int)
    parser.add_argument("--eigen", help="k,l,r,s as exact rationals")
    parser.add_argument("--graph", help="named graph, e.g. petersen, paley13, "
                                        "rook3, clebsch, complement:clebsch, "
                                        "cliques3x3, latin6")
    parser.add_argument("--partition", help="partition of 2..9, e.g. 23|47|5689")
    parser.add_argument("--orientation", type=int, default=1, choices=(1, 2))
    parser.add_argument("--format", default="text", choices=("text", "json", "dot"))
    parser.add_argument("--table-algebra", action="store_true",
                        help="allow non-integral multiplicities")
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 1 if exc.code else 0
    if args.format == "dot" and args.command != "lattice":
        print("dot output is only available for the lattice command",
              file=sys.stderr)
        return 1
    if args.command == "lattice":
        args.format = "dot"
    try:
        return _COMMANDS[args.command](args, out)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
