"""Command-line front end.

Exit codes: 0 all checks passed; 1 a property or theorem assertion
failed (the report is still emitted); 2 input or usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Any

from .audit import audit_battery
from .bounds import bound_report, reference_lines
from .canon import canonical_g6
from .criticality import classify
from .errors import GraphFormatError, PreconditionError, TheoremViolation
from .fixtures import FIXTURE_NAMES, load_fixture
from .graph import Graph, parse_edgelist
from .graph6 import parse_graph6
from .planar import is_planar, separating_3_cycles
from .search import (
    ResultCache,
    SearchConfig,
    enumerate_graphs,
    final_filter,
    hunt,
    merge_records,
    size_table,
)
from .structure import build_hg, triangle_components

EXIT_OK = 0
EXIT_ASSERTION = 1
EXIT_USAGE = 2


def _read_graph(source: str, fmt: str) -> Graph:
    if source == "-":
        text = sys.stdin.read()
        name = "<stdin>"
    else:
        path = Path(source)
        if path.exists():
            text = path.read_text()
            name = source
        elif source.lower() in FIXTURE_NAMES:
            return load_fixture(source)
        else:
            raise GraphFormatError(f"no such file or fixture: {source}")
    if fmt == "auto":
        fmt = "graph6" if name.endswith(".g6") else "edgelist"
        stripped = text.strip()
        if "\n" not in stripped and stripped and not any(ch.isspace() for ch in stripped):
            fmt = "graph6"
    if fmt == "graph6":
        return parse_graph6(text.strip().splitlines()[0] if text.strip() else "")
    return parse_edgelist(text)


def _emit(payload: dict[str, Any], args: argparse.Namespace) -> None:
    if args.output == "json":
        print(json.dumps(payload, indent=2, sort_keys=True, default=str))
    else:
        _print_text(payload)


def _print_text(payload: dict[str, Any], indent: int = 0) -> None:
    pad = "  " * indent
    for key, val in payload.items():
        if isinstance(val, dict):
            print(f"{pad}{key}:")
            _print_text(val, indent + 1)
        elif isinstance(val, list) and val and isinstance(val[0], dict):
            print(f"{pad}{key}:")
            for item in val:
                _print_text(item, indent + 1)
                print(f"{pad}  -")
        else:
            print(f"{pad}{key}: {val}")


def _cmd_check(args: argparse.Namespace) -> int:
    g = _read_graph(args.input, args.format)
    rep = classify(g)
    _emit(rep.to_dict(), args)
    return EXIT_OK


def _cmd_audit(args: argparse.Namespace) -> int:
    g = _read_graph(args.input, args.format)
    rep = classify(g)
    if not args.relaxed:
        if not rep.tricritical:
            print(
                "strict audit requires an edge-critical uniquely 3-colorable "
                "planar graph; use --relaxed to run mechanics anyway",
                file=sys.stderr,
            )
            return EXIT_USAGE
        if separating_3_cycles(g):
            print(
                "strict audit requires no separating 3-cycles; use --relaxed",
                file=sys.stderr,
            )
            return EXIT_USAGE
    battery = audit_battery(g, classification=rep, binding=not args.relaxed)
    _emit(battery, args)
    failed = any(
        isinstance(c, dict) and c.get("status") == "fail"
        for c in battery["checks"].values()
    )
    return EXIT_ASSERTION if failed else EXIT_OK


def _cmd_decompose(args: argparse.Namespace) -> int:
    g = _read_graph(args.input, args.format)
    ok, emb = is_planar(g)
    if not ok:
        print("graph is not planar", file=sys.stderr)
        return EXIT_USAGE
    assert emb is not None
    decomp = triangle_components(g, strict=not args.relaxed)
    aux = build_hg(g, emb, decomp)
    payload = {
        "graph6": canonical_g6(g),
        "decomposition": decomp.to_dict(),
        "aux_graph": aux.to_dict(),
        "embedding_rotation": [list(r) for r in emb.rotation],
    }
    _emit(payload, args)
    return EXIT_OK


def _cmd_bound(args: argparse.Namespace) -> int:
    g = _read_graph(args.input, args.format)
    ok, emb = is_planar(g)
    if not ok:
        print("graph is not planar", file=sys.stderr)
        return EXIT_USAGE
    assert emb is not None
    rep = classify(g)
    decomp = triangle_components(g, strict=False)
    report = bound_report(g, emb, decomp, tricritical=rep.tricritical and decomp.domain_ok)
    _emit(report.to_dict(), args)
    return EXIT_OK


def _parse_shard(text: str | None) -> tuple[int, int, int] | None:
    if text is None:
        return None
    try:
        part, total = text.split("/")
        depth = 4
        if "@" in total:
            total, d = total.split("@")
            depth = int(d)
        return (depth, int(part), int(total))
    except ValueError as exc:
        raise PreconditionError(f"bad shard spec {text!r}; expected i/t or i/t@depth") from exc


def _cmd_search(args: argparse.Namespace) -> int:
    cfg = SearchConfig(
        n=args.n,
        m_min=args.m_min,
        m_max=args.m_max,
        budget_seconds=args.budget_seconds,
        budget_nodes=args.budget_nodes,
    )
    cache = ResultCache(args.cache) if args.cache else ResultCache(None)
    if args.hunt_m is not None:
        result = hunt(
            args.n,
            args.hunt_m,
            strategy=args.strategy,
            budget_seconds=args.budget_seconds,
            budget_nodes=args.budget_nodes,
            cache=cache,
        )
        _emit(result.to_dict(), args)
        return EXIT_OK
    shard = _parse_shard(args.shard)
    from .search import classify_all, classify_candidate

    if shard is not None:
        res = enumerate_graphs(cfg, shard=shard)
        records = merge_records(
            [
                [
                    classify_candidate(g, cache=cache)
                    for g in res.final_graphs()
                    if final_filter(g, cfg)
                ]
            ]
        )
        complete = res.complete
    else:
        records, complete = classify_all(cfg, cache=cache, jobs=args.jobs)
    payload = {
        "n": args.n,
        "complete": complete,
        "candidates": len(records),
        "hits": [r.to_line() for r in records if r.tricritical],
    }
    _emit(payload, args)
    return EXIT_OK


def _cmd_size_table(args: argparse.Namespace) -> int:
    from .bounds import size_table_assert
    from .search import shard_and_resume

    cache = ResultCache(args.cache) if args.cache else ResultCache(None)
    shard = _parse_shard(args.shard)
    if args.jobs > 1 and shard is None:
        depth = min(4, max(2, args.max_n - 1))
        shards = [(depth, i, args.jobs) for i in range(args.jobs)]
        rows = shard_and_resume(args.max_n, shards, min_n=args.min_n, jobs=args.jobs)
    else:
        rows = size_table(args.max_n, min_n=args.min_n, cache=cache, shard=shard)
    table = {n: row.to_dict() for n, row in rows.items()}
    verdicts = size_table_assert(table)
    if args.output == "json":
        payload = {
            "rows": {str(n): table[n] for n in table},
            "verdicts": {str(n): verdicts[n] for n in verdicts},
        }
        print(json.dumps(payload, indent=2, sort_keys=True, default=str))
    else:
        print(f"{'n':>3} {'size':>5} {'#crit':>5} {'2n-3':>5} {'9n/4-6':>7} {'5n/2-6':>7}  complete")
        for n, row in rows.items():
            lines = reference_lines(n)
            upper = lines["ceiling_5n2_minus_6"] if n >= 6 else "-"
            print(
                f"{n:>3} {str(row.size):>5} {row.tricritical_count:>5} "
                f"{lines['floor_2n_minus_3']:>5} {lines['line_9n4_minus_6']:>7.2f} "
                f"{str(upper):>7}  {row.complete}"
            )
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tricrit",
        description=(
            "Verification and exhaustive search for edge-critical uniquely "
            "3-colorable planar graphs"
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_io(p: argparse.ArgumentParser) -> None:
        p.add_argument("input", help="file path, '-' for stdin, or a fixture name")
        p.add_argument(
            "--format",
            choices=("auto", "graph6", "edgelist"),
            default="auto",
            help="input format (default: inferred)",
        )
        p.add_argument("--output", choices=("json", "text"), default="json")

    p_check = sub.add_parser("check", help="classify one graph")
    add_io(p_check)
    p_check.set_defaults(fn=_cmd_check)

    p_audit = sub.add_parser("audit", help="run the full theorem battery")
    add_io(p_audit)
    p_audit.add_argument(
        "--relaxed",
        action="store_true",
        help="run mechanics on out-of-domain inputs; verdicts are non-binding",
    )
    p_audit.set_defaults(fn=_cmd_audit)

    p_dec = sub.add_parser("decompose", help="triangle decomposition and aux graph")
    add_io(p_dec)
    p_dec.add_argument("--relaxed", action="store_true")
    p_dec.set_defaults(fn=_cmd_decompose)

    p_bound = sub.add_parser("bound", help="edge-count accounting report")
    add_io(p_bound)
    p_bound.set_defaults(fn=_cmd_bound)

    p_search = sub.add_parser("search", help="enumerate candidates / hunt witnesses")
    p_search.add_argument("--n", type=int, required=True)
    p_search.add_argument("--m-min", type=int, default=None)
    p_search.add_argument("--m-max", type=int, default=None)
    p_search.add_argument("--hunt-m", type=int, default=None, help="hunt for edge-critical uniquely 3-colorable planar graphs with exactly this many edges")
    p_search.add_argument(
        "--strategy",
        choices=("augmentation", "triangulation-carving"),
        default="triangulation-carving",
    )
    p_search.add_argument("--budget-seconds", type=float, default=None)
    p_search.add_argument("--budget-nodes", type=int, default=None)
    p_search.add_argument("--cache", type=str, default=None)
    p_search.add_argument("--shard", type=str, default=None, help="i/t or i/t@depth")
    p_search.add_argument("--jobs", type=int, default=1)
    p_search.add_argument("--output", choices=("json", "text"), default="json")
    p_search.set_defaults(fn=_cmd_search)

    p_table = sub.add_parser("size-table", help="exact size(n) table")
    p_table.add_argument("--max-n", type=int, required=True)
    p_table.add_argument("--min-n", type=int, default=3)
    p_table.add_argument("--cache", type=str, default=None)
    p_table.add_argument("--shard", type=str, default=None)
    p_table.add_argument("--jobs", type=int, default=1)
    p_table.add_argument("--output", choices=("json", "text"), default="json")
    p_table.set_defaults(fn=_cmd_size_table)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (GraphFormatError, PreconditionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except TheoremViolation as exc:
        print(
            json.dumps(
                {"theorem_violation": str(exc), "detail": exc.detail},
                indent=2,
                sort_keys=True,
                default=str,
            )
        )
        return EXIT_ASSERTION


if __name__ == "__main__":
    sys.exit(main())
