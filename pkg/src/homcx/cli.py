"""``homcx`` command line.

Graph sources are either ``family:NAME[:p1,p2]`` or a path to a DIMACS file.
Exit codes: 0 success, 1 verification failed, 2 usage/parse error, 3 cap hit.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import complex as cx
from .chromatic import chromatic_number
from .counterexample import verify_paper
from .errors import CapExceeded, GraphParseError
from .flip import build_flip_graph, components, shortest_path
from .graph import Graph, generate, parse_graph
from .homs import DEFAULT_MAX_COLORINGS, enumerate_homs, format_coloring, parse_coloring

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3


class UsageError(Exception):
    pass


def load_family(spec: str) -> Graph:
    name, _, params = spec.partition(":")
    try:
        args = [int(p) for p in params.split(",")] if params else []
    except ValueError:
        raise UsageError(f"bad family parameters in {spec!r}") from None
    try:
        return generate(name, *args)
    except ValueError as e:
        raise UsageError(str(e)) from None


def load_graph(source: str) -> Graph:
    if source.startswith("family:"):
        return load_family(source[len("family:"):])
    try:
        text = Path(source).read_text()
    except OSError as e:
        raise UsageError(f"cannot read graph file {source!r}: {e.strerror}") from None
    return parse_graph(text)


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True) + "\n"


def cmd_chi(args) -> tuple[int, str]:
    if (args.family is None) == (args.g is None):
        raise UsageError("chi needs exactly one of --family or --g")
    g = load_family(args.family) if args.family else load_graph(args.g)
    r = chromatic_number(g)
    witness = [c + 1 for c in r.witness]
    clique = [v + 1 for v in r.lower_bound_clique]
    if args.format == "json":
        return EXIT_OK, _dump({"chi": r.chi, "witness": witness, "clique": clique})
    return EXIT_OK, (
        f"chi: {r.chi}\n"
        f"witness: {' '.join(map(str, witness))}\n"
        f"clique: {' '.join(map(str, clique))}\n"
    )


def _homset(args):
    return enumerate_homs(
        load_graph(args.g), load_graph(args.h), args.max_colorings, args.threads
    )


def cmd_hom(args) -> tuple[int, str]:
    hs = _homset(args)
    if args.action == "count":
        if args.format == "json":
            return EXIT_OK, _dump({"count": len(hs)})
        return EXIT_OK, f"{len(hs)}\n"
    if args.format == "json":
        return EXIT_OK, _dump({"colorings": [[x + 1 for x in c] for c in hs]})
    return EXIT_OK, "".join(format_coloring(c) + "\n" for c in hs)


def cmd_flip(args) -> tuple[int, str]:
    fg = build_flip_graph(_homset(args), args.threads)
    if args.action == "components":
        rep = components(fg)
        if args.format == "json":
            return EXIT_OK, _dump(rep.to_json())
        return EXIT_OK, (
            f"components: {rep.component_count}\n"
            f"sizes: {' '.join(map(str, rep.component_sizes))}\n"
        )
    if args.action == "path":
        if args.source is None or args.target is None:
            raise UsageError("flip path needs --from and --to")
        try:
            p = shortest_path(fg, parse_coloring(args.source), parse_coloring(args.target))
        except (KeyError, ValueError) as e:
            raise UsageError(str(e).strip("'\"")) from None
        if args.format == "json":
            return EXIT_OK, _dump({"path": None if p is None else [[x + 1 for x in c] for c in p]})
        if p is None:
            return EXIT_OK, "no path\n"
        return EXIT_OK, "".join(format_coloring(c) + "\n" for c in p)
    return EXIT_OK, fg.to_dot()


def cmd_complex(args) -> tuple[int, str]:
    g, h = load_graph(args.g), load_graph(args.h)
    if args.action == "cells":
        fp = cx.enumerate_cells(g, h, args.max_dim, args.max_cells, args.threads)
        counts = fp.cell_counts()
        if args.format == "json":
            out = {"cells": counts}
            if fp.complete:
                out["euler"] = cx.euler_characteristic(fp)
            return EXIT_OK, _dump(out)
        text = "".join(f"dim {d}: {n}\n" for d, n in enumerate(counts))
        text += f"total: {len(fp.cells)}\n"
        if fp.complete:
            text += f"euler: {cx.euler_characteristic(fp)}\n"
        return EXIT_OK, text
    if args.max_dim is not None:
        raise UsageError("homology needs the full complex; drop --max-dim")
    fp = cx.enumerate_cells(g, h, None, args.max_cells, args.threads)
    rep = cx.betti_gf2(fp, args.max_chains)
    if args.format == "json":
        return EXIT_OK, _dump(rep.to_json())
    return EXIT_OK, (
        f"cells: {' '.join(map(str, rep.cell_counts))}\n"
        f"euler: {rep.euler_characteristic}\n"
        f"betti_gf2 (homological evidence): {' '.join(map(str, rep.betti_gf2))}\n"
    )


def cmd_verify_paper(args) -> tuple[int, str]:
    g = load_graph(args.g) if args.g else None
    rep = verify_paper(g, threads=args.threads)
    code = EXIT_OK if rep.passed else EXIT_FAIL
    if args.format == "json":
        return code, _dump(rep.to_json())
    return code, rep.summary()


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="homcx",
        description="Graph homomorphisms, coloring flip graphs and Hom complexes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, formats=("text", "json")):
        p.add_argument("--format", choices=formats, default=formats[0])
        p.add_argument("--threads", type=int, default=1)
        p.add_argument("-o", "--output", help="write output here instead of stdout")

    def pair(p):
        p.add_argument("--g", required=True, help="source graph G")
        p.add_argument("--h", required=True, help="target graph H")
        p.add_argument("--max-colorings", type=int, default=DEFAULT_MAX_COLORINGS)

    p = sub.add_parser("chi", help="exact chromatic number")
    p.add_argument("--family", help="NAME[:p1,p2]")
    p.add_argument("--g", help="graph source")
    common(p)
    p.set_defaults(run=cmd_chi)

    p = sub.add_parser("hom", help="homomorphisms G -> H")
    p.add_argument("action", choices=("count", "list"))
    pair(p)
    common(p)
    p.set_defaults(run=cmd_hom)

    p = sub.add_parser("flip", help="flip graph of Hom(G, H)")
    p.add_argument("action", choices=("components", "path", "export"))
    pair(p)
    p.add_argument("--from", dest="source", help="coloring, 1-indexed colors")
    p.add_argument("--to", dest="target", help="coloring, 1-indexed colors")
    common(p, ("text", "json", "dot"))
    p.set_defaults(run=cmd_flip)

    p = sub.add_parser("complex", help="cells and GF(2) homology of Hom(G, H)")
    p.add_argument("action", choices=("cells", "homology"))
    p.add_argument("--g", required=True)
    p.add_argument("--h", required=True)
    p.add_argument("--max-dim", type=int)
    p.add_argument("--max-cells", type=int, default=cx.DEFAULT_MAX_CELLS)
    p.add_argument("--max-chains", type=int, default=cx.DEFAULT_MAX_CHAINS)
    common(p)
    p.set_defaults(run=cmd_complex)

    p = sub.add_parser("verify-paper", help="check every claim about the 9-vertex counterexample")
    p.add_argument("--g", help="run the checks against another graph instead")
    common(p)
    p.set_defaults(run=cmd_verify_paper)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.threads < 1:
        print("homcx: --threads must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    if args.command == "flip" and args.action == "export" and args.format == "text":
        args.format = "dot"
    try:
        code, out = args.run(args)
    except (UsageError, GraphParseError) as e:
        print(f"homcx: {e}", file=sys.stderr)
        return EXIT_USAGE
    except CapExceeded as e:
        print(f"homcx: resource cap: {e}", file=sys.stderr)
        return EXIT_CAP
    if args.output:
        Path(args.output).write_text(out)
    else:
        sys.stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
