"""Command line frontend.

One subcommand per invocation; output is line oriented, one fact per
line, and byte-stable for fixed inputs and seeds.  Exit codes: 0 success,
1 validation failure, 2 usage error, 3 precondition error (for example a
disconnected atlas passed to ``kernel``).  ``STRIPES_THREADS`` caps
internal parallelism of the automorphism search (0 or unset = serial).
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from .atlas import (
    AtlasError,
    StripedAtlas,
    isomorphic,
    parse_atlas,
    serialize_atlas,
    validate,
)
from .corpus import random_atlas
from .dualgraph import build_dual_graph, euler_invariant, export_dot
from .leafspace import build_leaf_space, classify_leaf, hcl_point
from .reduction import SurfaceKind, reduce_atlas
from .render import leafspace_dot, leafspace_svg
from .selfcheck import selfcheck
from .symmetry import (
    AtlasAutomorphism,
    DisconnectedAtlasError,
    enumerate_automorphisms,
    homeotopy_report,
    leaf_action_kernel,
)

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_USAGE = 2
EXIT_PRECONDITION = 3


def _threads() -> int:
    raw = os.environ.get("STRIPES_THREADS", "0")
    try:
        value = int(raw)
    except ValueError:
        return 0
    return max(value, 0)


def _load(path: str) -> StripedAtlas:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise SystemExit2(f"cannot read {path}: {exc.strerror or exc}") from exc
    atlas = parse_atlas(text)
    problems = validate(atlas)
    if problems:
        raise SystemExit1("\n".join(problems))
    return atlas


class SystemExit1(Exception):
    """Validation failure carrying its message."""


class SystemExit2(Exception):
    """Usage failure carrying its message."""


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stripes",
        description="combinatorial atlases of strip-glued surfaces and their leaf spaces",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    def with_file(name: str, help_text: str) -> argparse.ArgumentParser:
        sub = commands.add_parser(name, help=help_text)
        sub.add_argument("file", help="atlas text file")
        return sub

    with_file("validate", "check atlas invariants")
    with_file("classify", "classify every boundary leaf")

    leafspace = with_file("leafspace", "describe the leaf-space model")
    leafspace.add_argument("--dot", action="store_true", help="emit a DOT digraph")
    leafspace.add_argument("--svg", metavar="PATH", help="write an SVG rendering")

    reduce_cmd = with_file("reduce", "merge strips across regular seams")
    reduce_cmd.add_argument("-o", metavar="OUT", dest="out", help="output file")

    dual = with_file("dual", "dual graph of the atlas")
    dual.add_argument("--dot", action="store_true", help="emit DOT text")

    with_file("aut", "enumerate atlas automorphisms")
    with_file("kernel", "kernel of the induced leaf-space action")
    with_file("report", "group orders around the leaf-space action")

    iso = commands.add_parser("iso", help="search for an isomorphism")
    iso.add_argument("file", help="first atlas file")
    iso.add_argument("other", help="second atlas file")

    rand = commands.add_parser("random", help="emit a seeded random atlas")
    rand.add_argument("--strips", type=int, required=True, metavar="N")
    rand.add_argument("--max-ints", type=int, required=True, metavar="M")
    rand.add_argument("--seed", type=int, required=True, metavar="S")
    rand.add_argument("--glue-prob", type=float, default=0.75, metavar="P")
    rand.add_argument("-o", metavar="OUT", dest="out", help="output file")

    check = with_file("selfcheck", "run all invariant cross-checks")
    check.add_argument("--samples", type=int, default=2, metavar="K")

    return parser


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _run(args: argparse.Namespace) -> int:
    if args.command == "validate":
        try:
            _load(args.file)
        except SystemExit1 as exc:
            print(exc)
            return EXIT_INVALID
        print("OK")
        return EXIT_OK

    if args.command == "random":
        atlas = random_atlas(args.strips, args.max_ints, args.seed, args.glue_prob)
        _emit(serialize_atlas(atlas), args.out)
        return EXIT_OK

    if args.command == "iso":
        witness = isomorphic(_load(args.file), _load(args.other))
        if witness is None:
            print("NOT-ISOMORPHIC")
        else:
            print("ISOMORPHIC " + AtlasAutomorphism(*witness).format())
        return EXIT_OK

    atlas = _load(args.file)

    if args.command == "classify":
        model = build_leaf_space(atlas)
        for point in model.points:
            name = classify_leaf(atlas, point).value
            print(f"{point.kind} {' '.join(point.intervals)} {name}")
        return EXIT_OK

    if args.command == "leafspace":
        model = build_leaf_space(atlas)
        if args.svg:
            Path(args.svg).write_text(leafspace_svg(model), encoding="utf-8")
        if args.dot:
            sys.stdout.write(leafspace_dot(model))
            return EXIT_OK
        for arc in model.arcs:
            strip = atlas.strip(arc)
            print(f"arc {arc} side0={len(strip.side0)} side1={len(strip.side1)}")
        for point in model.points:
            slots = ",".join(a.label() for a in model.attachments[point])
            print(f"point {point.label()} kind={point.kind} attach={slots}")
        for point in model.points:
            closure = ",".join(q.label() for q in sorted(hcl_point(model, point)))
            print(f"hcl {point.label()} = {closure}")
        return EXIT_OK

    if args.command == "reduce":
        proper: list[StripedAtlas] = []
        for outcome in reduce_atlas(atlas):
            if outcome.kind is SurfaceKind.OPEN_CYLINDER:
                print("CYLINDER")
            elif outcome.kind is SurfaceKind.OPEN_MOEBIUS_BAND:
                print("MOEBIUS")
            else:
                proper.append(outcome.atlas)
        if proper:
            combined = StripedAtlas(
                tuple(s for a in proper for s in a.strips),
                tuple(g for a in proper for g in a.gluings),
            )
            _emit(serialize_atlas(combined), args.out)
        return EXIT_OK

    if args.command == "dual":
        graph = build_dual_graph(atlas)
        if args.dot:
            sys.stdout.write(export_dot(graph))
        else:
            print(f"vertices {len(graph.vertices)}")
            print(f"edges {len(graph.edges)}")
            print(f"euler {euler_invariant(graph)}")
        return EXIT_OK

    if args.command == "aut":
        for aut in enumerate_automorphisms(atlas, threads=_threads()):
            print(aut.format())
        return EXIT_OK

    if args.command == "kernel":
        result = leaf_action_kernel(atlas)
        if result.is_trivial:
            print("TRIVIAL")
        else:
            print("Z2 witness=(id;m=0;r=1)")
        return EXIT_OK

    if args.command == "report":
        result = homeotopy_report(atlas)
        print(f"autOrder {result.aut_order}")
        print(f"kernel {result.kernel.label()}")
        print(f"imageOrder {result.image_order}")
        print(f"leafModelAutOrder {result.leaf_model_aut_order}")
        return EXIT_OK

    if args.command == "selfcheck":
        report = selfcheck(atlas, args.samples)
        for line in report.lines():
            print(line)
        print("SELFCHECK OK" if report.ok else "SELFCHECK FAILED")
        return EXIT_OK if report.ok else EXIT_INVALID

    raise SystemExit2(f"unknown command {args.command!r}")


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 on --help
        return int(exc.code or 0)
    try:
        return _run(args)
    except SystemExit2 as exc:
        print(f"stripes: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (AtlasError, SystemExit1) as exc:
        print(f"stripes: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except DisconnectedAtlasError as exc:
        print(f"stripes: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
