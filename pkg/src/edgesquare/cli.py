"""Command-line interface.

Exit status is 0 whenever the query ran to completion, whatever the verdict.
Input errors exit with 2, size-cap refusals with 3, and a route mismatch or an
internal inconsistency with 1.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import graph as g
from .census import DEFAULT_CAP, census
from .cm import (
    DEFAULT_CYCLE_CAP,
    InconsistencyError,
    ResourceCapError,
    RouteMismatchError,
    cycle_square_classification,
    necessary_condition_screen,
    purity_report,
    square_complex,
    square_is_cm,
)
from .complexes import render_label
from .facets import catalog_facets, group_by_facet
from .graph import Graph, GraphError
from .graphio import from_graph6, parse_edge_list
from .homology import FieldSpec
from .ideals import edge_ideal, ideal_power, polarize_ideal

EXIT_OK, EXIT_MISMATCH, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3


def parse_graph_spec(spec: str) -> Graph:
    """Builtin name, ``g6:<string>``, ``whisker:<spec>``, or a file path.

    Builtins: ``p3`` (path z-x-y-w), ``p<k>``, ``c<t>``, ``k<n>``, ``k<m>,<n>``,
    ``edge``, ``triangle``, ``stars``, ``doublestar:<s>,<t>``.
    Files ending in ``.g6`` are graph6, anything else is an edge list.
    """
    s = spec.strip()
    low = s.lower()
    if low.startswith("whisker:"):
        return g.whisker(parse_graph_spec(s[len("whisker:"):]))
    if low.startswith("g6:"):
        return from_graph6(s[3:])
    if low.startswith("doublestar:"):
        m = re.fullmatch(r"(\d+),(\d+)", low[len("doublestar:"):])
        if not m:
            raise GraphError(f"bad double star spec {spec!r}; expected doublestar:<s>,<t>")
        return g.double_star(int(m.group(1)), int(m.group(2)))
    if low == "p3":
        return g.p3()
    if low in ("edge", "k2", "k1,1"):
        return g.single_edge()
    if low == "triangle":
        return g.triangle()
    if low == "stars":
        return g.stars_example()
    m = re.fullmatch(r"([pck])(\d+)(?:,(\d+))?", low)
    if m:
        kind, a, b = m.group(1), int(m.group(2)), m.group(3)
        if kind == "k" and b is not None:
            return g.complete_bipartite(a, int(b))
        if b is None:
            return {"p": g.path_graph, "c": g.cycle, "k": g.complete_graph}[kind](a)
    path = Path(s)
    if path.is_file():
        text = path.read_text()
        if path.suffix == ".g6":
            return from_graph6(text.splitlines()[0] if text.strip() else "")
        return parse_edge_list(text)
    raise GraphError(f"unknown graph {spec!r}: not a builtin and not a file")


def _emit(args, text: str, record: dict) -> None:
    if args.format == "json":
        print(json.dumps(record, sort_keys=True))
    else:
        print(text, end="" if text.endswith("\n") else "\n")


def _lbl(x: str, args) -> str:
    return render_label(x, args.subscript)


def cmd_show_ideal(args) -> int:
    G = parse_graph_spec(args.graph)
    I = edge_ideal(G)
    I2 = ideal_power(I, 2)
    P = polarize_ideal(I2, copies=2)
    rec = {
        "edge_ideal": [m.render(I.variables) for m in I.generators],
        "square": [m.render(I2.variables) for m in I2.generators],
        "polarized_square": [m.render(P.variables, args.subscript) for m in P.generators],
    }
    text = (f"I(G)      = {I.render()}\n"
            f"I(G)^2    = {I2.render()}\n"
            f"P(I(G)^2) = {P.render(args.subscript)}\n")
    _emit(args, text, rec)
    return EXIT_OK


def cmd_facets(args) -> int:
    G = parse_graph_spec(args.graph)
    cx = square_complex(G, args.route)
    if args.witness:
        groups = group_by_facet(catalog_facets(G))
        lines = []
        records = []
        for F in cx.facets:
            names = [_lbl(x, args) for x in cx.names(F)]
            ws = groups.get(F, [])
            tags = " | ".join(w.describe(G) for w in ws)
            lines.append((" ".join(names), tags, [w.kind for w in ws]))
        lines.sort()
        for facet, tags, kinds in lines:
            records.append({"facet": facet.split(), "kinds": kinds, "witness": tags})
        if args.format == "json":
            for r in records:
                print(json.dumps(r, sort_keys=True))
        else:
            width = max(len(f) for f, _, _ in lines)
            for facet, tags, _ in lines:
                print(f"{facet:<{width}}  -- {tags}")
        return EXIT_OK
    if args.format == "json":
        for line in cx.render(args.subscript).splitlines():
            print(json.dumps({"facet": line.split()}))
    else:
        print(cx.render(args.subscript), end="")
    return EXIT_OK


def cmd_is_pure(args) -> int:
    G = parse_graph_spec(args.graph)
    rep = purity_report(G)
    rec = dict(vars(rep))
    text = (f"pure={rep.is_pure} expected(unmixed and triangle-free)={rep.expected} "
            f"dim={rep.dim} n+alpha-1={rep.formula_dim}")
    _emit(args, text, rec)
    return EXIT_OK


def _verdict_text(v, args) -> str:
    if v.is_cm:
        return f"CM (p={v.field.p})"
    if v.fast_fail:
        return f"NOT CM (p={v.field.p}); fast-fail: {v.fast_fail}"
    w = v.witness
    face = ",".join(_lbl(x, args) for x in (v.labels[i] for i in range(len(v.labels)) if w.face >> i & 1))
    links = "; ".join("{" + ",".join(_lbl(v.labels[i], args) for i in range(len(v.labels)) if F >> i & 1) + "}"
                      for F in w.link_facets)
    return (f"NOT CM (p={v.field.p}); witness face {{{face}}}, b~{w.degree}(link)={w.betti}\n"
            f"link facets: {links}")


def cmd_is_cm(args) -> int:
    G = parse_graph_spec(args.graph)
    field = FieldSpec(args.char)
    v = square_is_cm(G, field, use_fast_fail=not args.no_fast_fail, route=args.route, workers=args.workers)
    rec = v.to_record()
    _emit(args, _verdict_text(v, args), rec)
    return EXIT_OK


def cmd_classify_cycle(args) -> int:
    field = FieldSpec(args.char)
    theorem = cycle_square_classification(args.t, field, "theorem")
    word = {True: "CM", False: "NOT CM"}
    rec = {"t": args.t, "theorem": theorem, "char": field.p}
    text = f"C{args.t}: {word[theorem]} (theorem)"
    if args.verify:
        verified = cycle_square_classification(args.t, field, "verify", cap=args.cap)
        rec["verified"] = verified
        text += f" {'=' if verified == theorem else '!='} {word[verified]} (verified, p={field.p})"
        if verified != theorem:
            _emit(args, text, rec)
            return EXIT_MISMATCH
    _emit(args, text, rec)
    return EXIT_OK


def cmd_screen(args) -> int:
    G = parse_graph_spec(args.graph)
    res = necessary_condition_screen(G)
    if res is None:
        _emit(args, "no rejection", {"reason": None, "witness": None})
        return EXIT_OK
    path = [G.names[v] for v in res.witness] if res.witness else None
    text = f"rejected: {res.reason}" + (f" (path {'-'.join(path)})" if path else "")
    _emit(args, text, {"reason": res.reason, "witness": path})
    return EXIT_OK


def cmd_census(args) -> int:
    chars = tuple(args.char) if args.char else (2, 3)
    rep = census(args.n, chars, cap=args.cap, screen_first=not args.no_screen)
    if args.format == "json":
        print(rep.json_lines(), end="")
    else:
        print(rep.table(), end="")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text",
                        help="human-readable text or one JSON record per line")
    common.add_argument("--subscript", action="store_true", help="render polarized variables as x_1")

    parser = argparse.ArgumentParser(
        prog="edgesquare",
        description="Stanley-Reisner complexes of squared edge ideals and their Cohen-Macaulay property.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("show-ideal", parents=[common], help="print I(G), I(G)^2 and its polarization")
    p.add_argument("graph")
    p.set_defaults(func=cmd_show_ideal)

    p = sub.add_parser("facets", parents=[common], help="facets of the complex of P(I(G)^2)")
    p.add_argument("graph")
    p.add_argument("--witness", action="store_true", help="tag each facet with its family and (W, A, Z)")
    p.add_argument("--route", choices=("catalog", "generic", "both"), default="catalog")
    p.set_defaults(func=cmd_facets)

    p = sub.add_parser("is-pure", parents=[common], help="purity against the graph-side prediction")
    p.add_argument("graph")
    p.set_defaults(func=cmd_is_pure)

    p = sub.add_parser("is-cm", parents=[common], help="Reisner check of P(I(G)^2)")
    p.add_argument("graph")
    p.add_argument("--char", type=int, default=2, help="field characteristic (prime)")
    p.add_argument("--no-fast-fail", action="store_true", help="always run the full face sweep")
    p.add_argument("--route", choices=("catalog", "generic", "both"), default="catalog")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_is_cm)

    p = sub.add_parser("classify-cycle", parents=[common], help="is I(C_t)^2 Cohen-Macaulay")
    p.add_argument("t", type=int)
    p.add_argument("--verify", action="store_true", help="also compute the answer")
    p.add_argument("--char", type=int, default=2)
    p.add_argument("--cap", type=int, default=DEFAULT_CYCLE_CAP)
    p.set_defaults(func=cmd_classify_cycle)

    p = sub.add_parser("screen", parents=[common], help="necessary-condition screen")
    p.add_argument("graph")
    p.set_defaults(func=cmd_screen)

    p = sub.add_parser("census", parents=[common], help="all connected graphs on at most n vertices")
    p.add_argument("n", type=int)
    p.add_argument("--char", type=int, action="append", help="repeatable; default 2 and 3")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.add_argument("--no-screen", action="store_true", help="run the Reisner check on every graph")
    p.set_defaults(func=cmd_census)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ResourceCapError as exc:
        print(f"error: too big: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (RouteMismatchError, InconsistencyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except (GraphError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
