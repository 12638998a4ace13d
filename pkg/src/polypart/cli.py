"""Command-line front door.

Verbs: count (one exact number, explicit engine choice), sequence (TSV
lines "<index>\\t<value>"), enumerate (JSON-lines partitions or preorder
tree strings), biject (apply a named map to JSON partitions on stdin),
flipgraph (DOT or component summary), verify (cross-validation suites),
and report (TSV tables plus rendered figures).

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 resource
guard tripped.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .bijections import (
    blocks_to_tri3,
    kpartition_to_superblocks,
    partition_to_tree,
    proper_tri_to_quad,
    quad_to_proper_tris,
    rooted_block_fiber,
    rooted_block_inverse,
    rooted_block_map,
    superblocks_to_kpartition,
    tri3_to_blocks,
)
from .enumeration import (
    DEFAULT_MAX_ITEMS,
    enumerate_k_partitions,
    enumerate_kary_trees,
    enumerate_kd_partitions,
    enumerate_proper,
)
from .families import ENGINES, SequenceSpec, count_family
from .flips import build_flip_graph, components, to_dot, tree_flip_graph
from .model import (
    Blocks,
    ColoringScheme,
    Cyclic,
    CyclicAdjusted3,
    Explicit,
    ParameterError,
    PolypartError,
    ResourceLimitError,
    make_coloring,
    partition_from_obj,
    partition_to_obj,
)
from .trees import preorder
from .verify import ALL_SUITES, run_suites

USAGE_ERROR = 2
RESOURCE_ERROR = 3


def parse_scheme(text: str) -> ColoringScheme:
    """cyclic:C | adjusted3 | blocks:M:N | explicit:1,2,..."""
    parts = text.split(":")
    try:
        if parts[0] == "cyclic" and len(parts) == 2:
            return Cyclic(int(parts[1]))
        if parts[0] == "adjusted3" and len(parts) == 1:
            return CyclicAdjusted3()
        if parts[0] == "blocks" and len(parts) == 3:
            return Blocks(int(parts[1]), int(parts[2]))
        if parts[0] == "explicit" and len(parts) == 2:
            return Explicit(tuple(int(c) for c in parts[1].split(",")))
    except ValueError:
        pass
    raise ParameterError(f"cannot parse coloring scheme {text!r}")


def _spec_from_args(args) -> SequenceSpec:
    return SequenceSpec(family=args.family, k=args.k, d=args.d, m=args.m)


def _cmd_count(args) -> int:
    spec = _spec_from_args(args)
    value = count_family(spec, args.N, args.engine, max_items=args.max_items)
    print(value)
    return 0


def _cmd_sequence(args) -> int:
    spec = _spec_from_args(args)
    start = args.start
    if spec.family == "d_blocks":
        start = max(start, 1)
    for n in range(start, args.end + 1):
        value = count_family(spec, n, args.engine, max_items=args.max_items)
        print(f"{n}\t{value}")
    return 0


def _cmd_enumerate(args) -> int:
    if args.kind == "trees":
        for t in enumerate_kary_trees(args.k, args.internal, max_items=args.max_items):
            print(preorder(t))
        return 0
    if args.kind == "partitions":
        stream = enumerate_k_partitions(args.vertices, args.k, max_items=args.max_items)
        colors = None
    elif args.kind == "proper":
        poly = make_coloring(parse_scheme(args.scheme), args.vertices)
        stream = enumerate_proper(poly, args.k, max_items=args.max_items)
        colors = poly.colors
    else:  # kd
        stream = enumerate_kd_partitions(
            args.vertices, args.K, args.D, max_items=args.max_items
        )
        colors = None
    for p in stream:
        print(json.dumps(partition_to_obj(p, colors)))
    return 0


_BIJECT_MAPS = (
    "to-tree",
    "tri-to-quad",
    "quad-fiber",
    "tri3-to-blocks",
    "blocks-to-tri3",
    "rooted",
    "rooted-fiber",
    "rooted-inverse",
    "superblocks",
    "superblocks-inverse",
)


def _cmd_biject(args) -> int:
    lines = [ln for ln in sys.stdin.read().splitlines() if ln.strip()]
    for line in lines:
        p, colors = partition_from_obj(json.loads(line))
        if args.scheme:
            poly = make_coloring(parse_scheme(args.scheme), p.num_vertices)
        elif colors is not None:
            poly = make_coloring(Explicit(colors), p.num_vertices)
        else:
            poly = None
        if args.map == "to-tree":
            print(preorder(partition_to_tree(p, args.arity)))
            continue
        if poly is None:
            raise ParameterError("this map needs colors: supply --scheme or a colors field")
        if args.map == "tri-to-quad":
            results = [proper_tri_to_quad(p, poly)]
        elif args.map == "quad-fiber":
            results = quad_to_proper_tris(p, poly)
        elif args.map == "tri3-to-blocks":
            results = [tri3_to_blocks(p, poly)]
        elif args.map == "blocks-to-tri3":
            results = [blocks_to_tri3(p, poly)]
        elif args.map == "rooted":
            results = [rooted_block_map(p, poly, args.family)]
        elif args.map == "rooted-fiber":
            results = rooted_block_fiber(p, poly, args.family)
        elif args.map == "rooted-inverse":
            results = [rooted_block_inverse(p, poly, args.family)]
        elif args.map == "superblocks":
            results = [kpartition_to_superblocks(p, poly, args.k)]
        else:
            results = [superblocks_to_kpartition(p, poly, args.k)]
        for r in results:
            print(json.dumps(partition_to_obj(r, poly.colors)))
    return 0


def _cmd_flipgraph(args) -> int:
    if args.kind == "trees":
        g = tree_flip_graph(
            enumerate_kary_trees(args.k, args.internal, max_items=args.max_items), args.k
        )
    else:
        poly = None
        if args.proper:
            if not args.scheme:
                raise ParameterError("--proper needs --scheme")
            poly = make_coloring(parse_scheme(args.scheme), args.vertices)
        g = build_flip_graph(
            enumerate_k_partitions(args.vertices, args.k, max_items=args.max_items),
            args.k,
            restrict_proper=poly,
        )
    if args.format == "dot":
        sys.stdout.write(to_dot(g, by_index=args.by_index))
    else:
        comps = components(g)
        print(f"nodes\t{g.num_nodes}")
        print(f"edges\t{g.num_edges}")
        print(f"components\t{len(comps)}")
        for i, comp in enumerate(comps):
            print(f"component\t{i}\tsize\t{len(comp)}")
    return 0


def _cmd_verify(args) -> int:
    names = list(ALL_SUITES) if args.suite == "all" else [args.suite]
    failures = 0
    for name, ok, detail in run_suites(names, args.max_n):
        status = "PASS" if ok else "FAIL"
        print(f"{status} {name}: {detail}")
        failures += 0 if ok else 1
    return 0 if failures == 0 else 1


def _cmd_report(args) -> int:
    from .report import render_report

    specs = []
    for token in args.families.split(","):
        token = token.strip()
        if token == "a":
            specs.append(SequenceSpec("a"))
        elif token == "b":
            specs.append(SequenceSpec("b"))
        elif token.startswith("c"):
            specs.append(SequenceSpec("c", k=int(token[1:] or 4)))
        elif token.startswith("d"):
            specs.append(SequenceSpec("d_blocks", m=int(token[1:] or 2)))
        else:
            raise ParameterError(f"cannot parse report family {token!r}")
    written = render_report(args.outdir, specs, max_n=args.max_n)
    for path in written:
        print(path)
    return 0


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="polypart",
        description="Exact counting, enumeration, bijections, and flip graphs "
        "for proper partitions of colored convex polygons.",
    )
    sub = top.add_subparsers(dest="verb", required=True)

    def add_family_args(p):
        p.add_argument("--family", required=True,
                       choices=["a", "b", "c", "d_blocks", "catalan_k", "catalan_kd", "b_prime"])
        p.add_argument("--k", type=int, default=None, help="region/arity parameter where needed")
        p.add_argument("--d", type=int, default=None, help="root parameter for catalan_kd")
        p.add_argument("--m", type=int, default=None, help="first block size for d_blocks")
        p.add_argument("--engine", default="formula", choices=list(ENGINES))
        p.add_argument("--max-items", type=int, default=DEFAULT_MAX_ITEMS,
                       help="enumeration guard for brute engines")

    p = sub.add_parser("count", help="print one exact count")
    add_family_args(p)
    p.add_argument("--N", type=int, required=True, help="sequence index")
    p.set_defaults(fn=_cmd_count)

    p = sub.add_parser("sequence", help="print <index>\\t<value> lines")
    add_family_args(p)
    p.add_argument("--start", type=int, default=0)
    p.add_argument("--end", type=int, required=True)
    p.set_defaults(fn=_cmd_sequence)

    p = sub.add_parser("enumerate", help="stream partitions (JSON lines) or trees (preorder)")
    p.add_argument("--kind", required=True, choices=["partitions", "proper", "kd", "trees"])
    p.add_argument("--vertices", type=int, help="polygon vertex count")
    p.add_argument("--k", type=int, help="region size (or tree arity for trees)")
    p.add_argument("--K", type=int, help="non-root region size for kd")
    p.add_argument("--D", type=int, help="root region size for kd")
    p.add_argument("--internal", type=int, help="internal vertex count for trees")
    p.add_argument("--scheme", help="coloring scheme for proper (e.g. cyclic:2)")
    p.add_argument("--max-items", type=int, default=DEFAULT_MAX_ITEMS)
    p.set_defaults(fn=_cmd_enumerate)

    p = sub.add_parser("biject", help="apply a map to JSON partitions on stdin")
    p.add_argument("--map", required=True, choices=list(_BIJECT_MAPS))
    p.add_argument("--scheme", help="coloring scheme; else the colors field is used")
    p.add_argument("--family", choices=["a", "b"], help="family for the rooted maps")
    p.add_argument("--k", type=int, help="region size for the superblock maps")
    p.add_argument("--arity", type=int, default=2, help="tree arity for to-tree")
    p.set_defaults(fn=_cmd_biject)

    p = sub.add_parser("flipgraph", help="flip graph as DOT or a component summary")
    p.add_argument("--kind", default="partitions", choices=["partitions", "trees"])
    p.add_argument("--vertices", type=int)
    p.add_argument("--k", type=int, required=True, help="region size or tree arity")
    p.add_argument("--internal", type=int, help="internal vertex count for trees")
    p.add_argument("--proper", action="store_true", help="restrict to proper partitions")
    p.add_argument("--scheme", help="coloring scheme for --proper")
    p.add_argument("--format", default="summary", choices=["summary", "dot"])
    p.add_argument("--by-index", action="store_true", help="label DOT nodes by index")
    p.add_argument("--max-items", type=int, default=DEFAULT_MAX_ITEMS)
    p.set_defaults(fn=_cmd_flipgraph)

    p = sub.add_parser("verify", help="run the cross-validation suites")
    p.add_argument("--suite", default="all", choices=["all"] + list(ALL_SUITES))
    p.add_argument("--max-n", type=int, default=10)
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("report", help="write TSV tables and figures to a directory")
    p.add_argument("--outdir", required=True)
    p.add_argument("--families", default="a,b,c4",
                   help="comma list: a, b, cK (e.g. c4), dM (e.g. d3)")
    p.add_argument("--max-n", type=int, default=10)
    p.set_defaults(fn=_cmd_report)

    return top


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return RESOURCE_ERROR
    except (PolypartError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
