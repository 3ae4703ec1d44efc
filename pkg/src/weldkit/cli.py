"""Command-line front end.

Subcommands: parse | invariants | surface | census | homcount | search |
movie-check | render.  Exit codes: 0 success, 1 domain error (unreadable or
invalid input), 2 usage error, 3 movie REJECT.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from weldkit import codec
from weldkit.diagram import PlanarDiagram
from weldkit.fiberwise import check_movie, fiber_census
from weldkit.groups import PANEL_NAMES, load_bundled
from weldkit.invariants import (
    alexander_polynomial,
    format_polynomial,
    hom_count,
    parity_profile,
    whitney_degree,
    wirtinger_presentation,
)
from weldkit.moves import THEORIES
from weldkit.render import render_svg
from weldkit.search import Distinguished, Exhausted, MovePath, SearchLimits, bfs_path
from weldkit.surface import representing_surface, surface_genus


class _Report:
    """text or tsv key/value report writer."""

    def __init__(self, fmt: str):
        self.fmt = fmt
        self.rows: list[tuple[str, str]] = []

    def add(self, key: str, value) -> None:
        self.rows.append((key, str(value)))

    def emit(self, out) -> None:
        for key, value in self.rows:
            if self.fmt == "tsv":
                out.write(f"{key}\t{value}\n")
            else:
                out.write(f"{key}={value}\n")


def _read_diagram(path: str) -> PlanarDiagram:
    return codec.parse_diagram(Path(path).read_text())


def _open_out(args):
    if args.out:
        return open(args.out, "w")
    return sys.stdout


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("text", "tsv"), default="text")
    p.add_argument("--out", default=None, help="write the report to a file")


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="weldkit",
        description="combinatorial workbench for virtual and welded knot diagrams",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("parse", help="validate a diagram file, print canonical code")
    p.add_argument("diagram")
    _add_common(p)

    p = sub.add_parser("invariants", help="parities, Whitney degree, group panel")
    p.add_argument("diagram")
    p.add_argument("--groups", default=",".join(PANEL_NAMES))
    _add_common(p)

    p = sub.add_parser("surface", help="representing-surface genus and Euler data")
    p.add_argument("diagram")
    _add_common(p)

    p = sub.add_parser("census", help="fiber-circle census")
    p.add_argument("diagram")
    _add_common(p)

    p = sub.add_parser("homcount", help="homomorphism counts into finite groups")
    p.add_argument("diagram")
    p.add_argument("--groups", default=",".join(PANEL_NAMES))
    _add_common(p)

    p = sub.add_parser("search", help="move path between two diagrams (emits a movie)")
    p.add_argument("start")
    p.add_argument("goal")
    p.add_argument("--theory", choices=sorted(THEORIES), default="welded")
    p.add_argument("--depth", type=int, default=8)
    p.add_argument("--nodes", type=int, default=200_000)
    p.add_argument("--max-crossings", type=int, default=12)
    _add_common(p)

    p = sub.add_parser("movie-check", help="verify a movie certificate")
    p.add_argument("movie")
    p.add_argument("--theory", choices=sorted(THEORIES), default="welded")
    _add_common(p)

    p = sub.add_parser("render", help="render a diagram to SVG")
    p.add_argument("diagram")
    _add_common(p)

    return ap


def _cmd_parse(args) -> int:
    d = _read_diagram(args.diagram)
    rep = _Report(args.format)
    rep.add("status", "ok")
    rep.add("crossings", d.n_crossings)
    rep.add("classical", d.n_classical)
    rep.add("virtual", d.n_virtual)
    rep.add("canonical", d.canonical_code())
    with _open_out(args) as out:
        rep.emit(out)
    return 0


def _cmd_invariants(args) -> int:
    d = _read_diagram(args.diagram)
    rep = _Report(args.format)
    prof = parity_profile(d)
    rep.add("virtual_parity", prof.virtual_parity)
    rep.add("classical_parity", prof.classical_parity)
    rep.add("mixed_parity", prof.mixed_parity)
    rep.add("whitney_degree", whitney_degree(d))
    pres = wirtinger_presentation(d)
    for name in args.groups.split(","):
        g = load_bundled(name.strip())
        rep.add(f"hom_count[{g.name}]", hom_count(pres, g))
    rep.add("alexander_polynomial", format_polynomial(alexander_polynomial(d)))
    with _open_out(args) as out:
        rep.emit(out)
    return 0


def _cmd_surface(args) -> int:
    d = _read_diagram(args.diagram)
    sc = representing_surface(d)
    v, e, f, chi = sc.euler_summary()
    rep = _Report(args.format)
    rep.add("genus", surface_genus(sc))
    rep.add("curve_vertices", sc.n_vertices)
    rep.add("V", v)
    rep.add("E", e)
    rep.add("F", f)
    rep.add("chi", chi)
    with _open_out(args) as out:
        rep.emit(out)
    return 0


def _cmd_census(args) -> int:
    d = _read_diagram(args.diagram)
    census = fiber_census(d)
    rep = _Report(args.format)
    rep.add("nested_pairs", census.nested_pairs)
    rep.add("disjoint_pairs", census.disjoint_pairs)
    rep.add("regular_arcs", census.regular_arcs)
    for stratum, section in census.sections.items():
        rep.add(f"section[{stratum}]", section.value)
    with _open_out(args) as out:
        rep.emit(out)
    return 0


def _cmd_homcount(args) -> int:
    d = _read_diagram(args.diagram)
    pres = wirtinger_presentation(d)
    rep = _Report(args.format)
    for name in args.groups.split(","):
        g = load_bundled(name.strip())
        rep.add(f"hom_count[{g.name}]", hom_count(pres, g))
    with _open_out(args) as out:
        rep.emit(out)
    return 0


def _cmd_search(args) -> int:
    a = _read_diagram(args.start)
    b = _read_diagram(args.goal)
    theory = THEORIES[args.theory]
    lim = SearchLimits(args.depth, args.nodes, args.max_crossings)
    result = bfs_path(a, b, theory, lim)
    with _open_out(args) as out:
        if isinstance(result, MovePath):
            out.write(codec.serialize_movie(result.to_movie(a), name="search-result"))
            return 0
        if isinstance(result, Distinguished):
            out.write(f"distinguished {result.witness}\n")
            return 0
        out.write(f"exhausted nodes={result.nodes_expanded} ({result.reason})\n")
        return 0


def _cmd_movie_check(args) -> int:
    movie = codec.parse_movie(Path(args.movie).read_text())
    verdict = check_movie(movie, THEORIES[args.theory])
    with _open_out(args) as out:
        out.write(verdict.summary() + "\n")
    return 0 if verdict.accepted else 3


def _cmd_render(args) -> int:
    d = _read_diagram(args.diagram)
    with _open_out(args) as out:
        out.write(render_svg(d))
    return 0


_COMMANDS = {
    "parse": _cmd_parse,
    "invariants": _cmd_invariants,
    "surface": _cmd_surface,
    "census": _cmd_census,
    "homcount": _cmd_homcount,
    "search": _cmd_search,
    "movie-check": _cmd_movie_check,
    "render": _cmd_render,
}


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (codec.ParseError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
