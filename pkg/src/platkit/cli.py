"""Command-line interface.

Plats are given in the canonical text form ("2 4 1 3 1", optionally with a
"strands=<m>;" header) plus an optional --strands flag.  Every subcommand
accepts --json for machine-readable output; errors then come back as
{"error": {"code", "message"}} with exit code 1.

equiv exit codes: 0 found, 2 distinct certificates, 3 budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import corpus as corpus_mod
from . import platgraph as pg
from .braids import exponent_sum, free_reduce, parse_braid_word
from .errors import PlatkitError
from .invariants import certificate
from .plats import (Plat, apply_move, component_count, destabilize_syntactic,
                    flip, plat_closure, pocket_move, stabilize)
from .render import RenderSpec, render_svg
from .search import (DestabilizationFound, DistinctCertificates, Found,
                     SearchBudget, default_budget, destabilization_search,
                     equivalence_search)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_DISTINCT = 2
EXIT_EXHAUSTED = 3


def _parse_plat(text: str, strands: int | None) -> Plat:
    return plat_closure(parse_braid_word(text, strands))


def _budget_from_args(args) -> SearchBudget:
    base = default_budget()
    return SearchBudget(
        max_nodes=args.budget_nodes or base.max_nodes,
        max_word_length=args.budget_length or base.max_word_length,
        max_seconds=args.budget_seconds or base.max_seconds)


def _add_budget_flags(sub):
    sub.add_argument("--budget-nodes", type=int, default=0)
    sub.add_argument("--budget-length", type=int, default=0)
    sub.add_argument("--budget-seconds", type=float, default=0.0)


def _emit(args, payload: dict, text_lines: list[str]) -> None:
    if args.json:
        # canonical form: matches the service's response bytes exactly
        print(json.dumps(payload, sort_keys=True, separators=(",", ":")))
    else:
        for line in text_lines:
            print(line)


def _plat_payload(p: Plat) -> dict:
    return p.to_json_dict()


def cmd_info(args) -> int:
    p = _parse_plat(args.plat, args.strands)
    payload = {
        "strands": p.strands,
        "bridge_index": p.bridges,
        "components": component_count(p),
        "writhe": exponent_sum(p.word),
        "word_length": len(p.word.letters),
        "reduced_word": list(free_reduce(p.word).letters),
    }
    _emit(args, payload, [
        f"strands {payload['strands']}",
        f"bridge index {payload['bridge_index']}",
        f"components {payload['components']}",
        f"writhe {payload['writhe']}",
    ])
    return EXIT_OK


def cmd_invariants(args) -> int:
    p = _parse_plat(args.plat, args.strands)
    cert = certificate(p)
    payload = cert.to_json_dict()
    _emit(args, payload, [
        f"components {cert.components}",
        f"coset type {cert.coset_type.to_list()}",
        f"jones {cert.jones}",
        f"alexander {cert.alexander_normalized}",
    ])
    return EXIT_OK


def cmd_move(args) -> int:
    p = _parse_plat(args.plat, args.strands)
    moved = apply_move(p, args.side, args.gen, inverse=args.inverse)
    _emit(args, _plat_payload(moved), [moved.to_text()])
    return EXIT_OK


def cmd_stabilize(args) -> int:
    p = _parse_plat(args.plat, args.strands)
    out = stabilize(p, sign=args.sign)
    _emit(args, _plat_payload(out), [out.to_text()])
    return EXIT_OK


def cmd_destabilize(args) -> int:
    p = _parse_plat(args.plat, args.strands)
    if args.search:
        result = destabilization_search(p, _budget_from_args(args))
        if isinstance(result, DestabilizationFound):
            payload = {"found": True, "plat": _plat_payload(result.plat),
                       "trace": result.trace.to_json_dict()}
            _emit(args, payload, [result.plat.to_text(),
                                  f"via {len(result.trace.moves)} moves"])
            return EXIT_OK
        payload = {"found": False, "nodes_expanded": result.nodes_expanded,
                   "reason": result.reason}
        _emit(args, payload, [f"exhausted ({result.reason}, "
                              f"{result.nodes_expanded} nodes)"])
        return EXIT_EXHAUSTED
    out = destabilize_syntactic(p)
    if out is None:
        _emit(args, {"found": False, "plat": None},
              ["no syntactic destabilization"])
        return EXIT_OK
    _emit(args, {"found": True, "plat": _plat_payload(out)}, [out.to_text()])
    return EXIT_OK


def cmd_flip(args) -> int:
    p = _parse_plat(args.plat, args.strands)
    out = flip(p)
    _emit(args, _plat_payload(out), [out.to_text()])
    return EXIT_OK


def _parse_path(text: str):
    steps = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        direction, _, layer = chunk.partition(":")
        if direction not in ("left", "right") or layer not in ("over", "under"):
            raise PlatkitError(
                f"bad path step {chunk!r}; expected direction:layer like right:over")
        steps.append((direction, layer))
    return steps


def cmd_pocket(args) -> int:
    p = _parse_plat(args.plat, args.strands)
    out, trace = pocket_move(p, args.side, args.bridge, _parse_path(args.path))
    payload = {"plat": _plat_payload(out),
               "trace": [{"gen": g, "inverse": inv, "side": side}
                         for g, inv, side in trace]}
    _emit(args, payload,
          [out.to_text()] + [f"{g}{'^-1' if inv else ''} ({side})"
                             for g, inv, side in trace])
    return EXIT_OK


def cmd_equiv(args) -> int:
    p1 = _parse_plat(args.plat1, args.strands)
    p2 = _parse_plat(args.plat2, args.strands)
    result = equivalence_search(p1, p2, _budget_from_args(args))
    if isinstance(result, Found):
        payload = {"result": "found", "trace": result.trace.to_json_dict(),
                   "moves": len(result.trace.moves)}
        _emit(args, payload, [f"found: trace of {len(result.trace.moves)} moves"])
        return EXIT_OK
    if isinstance(result, DistinctCertificates):
        payload = {"result": "distinct", "reason": result.reason}
        _emit(args, payload, [f"distinct certificates: {result.reason}"])
        return EXIT_DISTINCT
    payload = {"result": "exhausted", "nodes_expanded": result.nodes_expanded,
               "reason": result.reason}
    _emit(args, payload,
          [f"exhausted ({result.reason}, {result.nodes_expanded} nodes)"])
    return EXIT_EXHAUSTED


def cmd_graph(args) -> int:
    p = _parse_plat(args.plat, args.strands)
    graph = pg.explore(p, args.max_level, _budget_from_args(args),
                       rng_seed=args.rng_seed)
    if args.dot:
        print(pg.to_dot(graph))
        return EXIT_OK
    levels = graph.levels()
    report = pg.cycle_check(graph)
    lines = [f"vertices {len(graph.vertices)}, edges {len(graph.edges)}"]
    lines += [f"level {level}: classes {ids}" for level, ids in levels.items()]
    lines.append(f"cycle check: {report.status}")
    _emit(args, pg.to_json_dict(graph), lines)
    return EXIT_OK


def cmd_render(args) -> int:
    p = _parse_plat(args.plat, args.strands)
    spec = RenderSpec(labels=args.labels)
    svg = render_svg(p, spec)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(svg)
        _emit(args, {"written": args.output, "bytes": len(svg)},
              [f"wrote {args.output} ({len(svg)} bytes)"])
    else:
        print(svg)
    return EXIT_OK


def cmd_corpus(args) -> int:
    if args.corpus_action == "list":
        entries = corpus_mod.load_corpus()
        payload = {"entries": [{"name": e.name, "note": e.note,
                                "plat": e.plat.to_json_dict()}
                               for e in entries]}
        _emit(args, payload,
              [f"{e.name}: {e.plat.to_text()}  ({e.note})" for e in entries])
        return EXIT_OK
    results = corpus_mod.verify_corpus()
    payload = {"checks": [r.to_json_dict() for r in results],
               "ok": all(r.ok for r in results)}
    _emit(args, payload,
          [f"[{'ok' if r.ok else 'FAIL'}] {r.name}: {r.detail}" for r in results])
    return EXIT_OK if payload["ok"] else EXIT_ERROR


def cmd_serve(args) -> int:
    from .service import serve
    serve(port=args.port, bind=args.bind, state_dir=args.state_dir)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="platkit",
        description="plat closures of braid words: moves, invariants, search")
    parser.add_argument("--json", action="store_true",
                        help="machine-readable output")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, **kwargs):
        s = sub.add_parser(name, **kwargs)
        s.set_defaults(fn=fn)
        return s

    s = add("info", cmd_info, help="strand/bridge/component/writhe summary")
    s.add_argument("plat")
    s.add_argument("--strands", type=int)

    s = add("invariants", cmd_invariants, help="certificate of the closure")
    s.add_argument("plat")
    s.add_argument("--strands", type=int)

    s = add("move", cmd_move, help="apply a Hilden catalog move")
    s.add_argument("plat")
    s.add_argument("--strands", type=int)
    s.add_argument("--side", choices=("top", "bottom"), required=True)
    s.add_argument("--gen", required=True)
    s.add_argument("--inverse", action="store_true")

    s = add("stabilize", cmd_stabilize, help="add a trivial strand pair")
    s.add_argument("plat")
    s.add_argument("--strands", type=int)
    s.add_argument("--sign", type=int, choices=(1, -1), default=1)

    s = add("destabilize", cmd_destabilize,
            help="strip a trailing edge crossing (or --search the move graph)")
    s.add_argument("plat")
    s.add_argument("--strands", type=int)
    s.add_argument("--search", action="store_true")
    _add_budget_flags(s)

    s = add("flip", cmd_flip, help="rotate the diagram half a turn")
    s.add_argument("plat")
    s.add_argument("--strands", type=int)

    s = add("pocket", cmd_pocket, help="drag a bridge along a path")
    s.add_argument("plat")
    s.add_argument("--strands", type=int)
    s.add_argument("--side", choices=("top", "bottom"), required=True)
    s.add_argument("--bridge", type=int, required=True)
    s.add_argument("--path", required=True,
                   help="comma-separated steps like right:over,left:under")

    s = add("equiv", cmd_equiv, help="search for a move trace between two plats")
    s.add_argument("plat1")
    s.add_argument("plat2")
    s.add_argument("--strands", type=int)
    _add_budget_flags(s)

    s = add("graph", cmd_graph, help="explore the stabilization graph")
    s.add_argument("plat")
    s.add_argument("--strands", type=int)
    s.add_argument("--max-level", type=int, required=True)
    s.add_argument("--rng-seed", type=int, default=0)
    s.add_argument("--dot", action="store_true")
    _add_budget_flags(s)

    s = add("render", cmd_render, help="deterministic SVG diagram")
    s.add_argument("plat")
    s.add_argument("--strands", type=int)
    s.add_argument("-o", "--output")
    s.add_argument("--labels", action="store_true")

    s = add("corpus", cmd_corpus, help="shipped corpus utilities")
    s.add_argument("corpus_action", choices=("verify", "list"))

    s = add("serve", cmd_serve, help="run the HTTP service")
    s.add_argument("--port", type=int, default=8042)
    s.add_argument("--bind", default="127.0.0.1")
    s.add_argument("--state-dir")

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except PlatkitError as exc:
        if args.json:
            print(json.dumps({"error": {"code": exc.code, "message": str(exc)}}))
        else:
            print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
