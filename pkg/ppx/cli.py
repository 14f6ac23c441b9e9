#!/usr/bin/env python3
"""
Command-line interface for ppx.
"""

import argparse
import json
import logging
import sys
import time
from pathlib import Path
from typing import Any, Dict, List, Optional

from ppx import __version__
from ppx.config import Bounds
from ppx.core.polygraph import Polygraph
from ppx.core.terms import term_from_json
from ppx.core.validation import validate
from ppx.errors import PolygraphError
from ppx.fixtures.catalog import EXPECTED_FILE
from ppx.homotopy.homology import homology
from ppx.homotopy.realization import orientals_embed, realize
from ppx.polyplex.classify import classify
from ppx.polyplex.enumerate import EnumerationKind, enumerate_polyplexes
from ppx.polyplex.regularity import has_spherical_boundary, is_polyplex, non_spherical_cells
from ppx.steiner.construct import cone_polygraph, cube, oriental, tensor_polygraph
from ppx.steiner.extract import based_complex
from ppx.utils.helpers import dump_json, format_grades, load_polygraph, load_semi_simplicial, save_json
from ppx.verification.manifest import RunManifest
from ppx.verification.runner import SUITES, PaperVerifier

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_PARSE = 2


def main(argv: Optional[List[str]] = None) -> int:
    """Main CLI entry point."""
    parser = argparse.ArgumentParser(
        prog="ppx",
        description="ppx - positive and regular polygraphs, polyplexes and their constructions",
    )
    parser.add_argument("--version", action="version", version=f"ppx {__version__}")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="More log output (repeatable)")
    parser.add_argument("-q", "--quiet", action="store_true", help="Only log errors")

    subparsers = parser.add_subparsers(dest="command", help="Command to run")

    # Check command
    check_parser = subparsers.add_parser("check", help="Validate a polygraph and test its class")
    check_parser.add_argument("path", type=Path, help="Polygraph JSON file")
    check_parser.add_argument("--regular", action="store_true", help="Require a regular polygraph")
    check_parser.add_argument(
        "--spherical", action="store_true", help="Require the distinguished arrow to have spherical boundary"
    )
    check_parser.add_argument(
        "--polyplex", action="store_true", help="Require the distinguished arrow to exhibit a polyplex"
    )
    check_parser.add_argument("--json", action="store_true", help="Print a JSON report")

    # Classify command
    classify_parser = subparsers.add_parser("classify", help="Classify an arrow by its polyplex")
    classify_parser.add_argument("path", type=Path, help="Polygraph JSON file")
    classify_parser.add_argument("--term", help="Arrow as JSON, defaults to the file's distinguished arrow")
    classify_parser.add_argument("--json", action="store_true", help="Print JSON")

    # Enumerate command
    enumerate_parser = subparsers.add_parser("enumerate", help="Enumerate regular polyplexes")
    enumerate_parser.add_argument("--dim", type=int, default=2, help="Largest dimension")
    enumerate_parser.add_argument("--max-cells", type=int, help="Largest number of cells")
    enumerate_parser.add_argument(
        "--kind",
        choices=[k.value for k in EnumerationKind],
        default=EnumerationKind.POLYPLEX.value,
        help="Items to enumerate",
    )
    enumerate_parser.add_argument("--out", type=Path, help="Directory receiving one file per item and a manifest")
    enumerate_parser.add_argument("--json", action="store_true", help="Print the items as JSON")

    # Construction commands
    tensor_parser = subparsers.add_parser("tensor", help="Gray tensor product of two polygraphs")
    tensor_parser.add_argument("left", type=Path, help="First factor")
    tensor_parser.add_argument("right", type=Path, help="Second factor")

    cone_parser = subparsers.add_parser("cone", help="Cone on a polygraph")
    cone_parser.add_argument("path", type=Path, help="Polygraph JSON file")

    oriental_parser = subparsers.add_parser("oriental", help="The oriental O(n)")
    oriental_parser.add_argument("n", type=int, help="Dimension")

    cube_parser = subparsers.add_parser("cube", help="The cube D_1 tensored n times")
    cube_parser.add_argument("n", type=int, help="Dimension")

    for sub in (tensor_parser, cone_parser, oriental_parser, cube_parser):
        sub.add_argument("--out", type=Path, help="Output JSON file")
        sub.add_argument("--json", action="store_true", help="Print JSON")

    # Realize command
    realize_parser = subparsers.add_parser("realize", help="Semi-simplicial realization of a regular polygraph")
    realize_parser.add_argument("path", type=Path, help="Polygraph JSON file")
    realize_parser.add_argument("--homology", action="store_true", help="Compute integral homology")
    realize_parser.add_argument("--max-deg", type=int, help="Last homology degree")
    realize_parser.add_argument("--out", type=Path, help="Output JSON file")
    realize_parser.add_argument("--json", action="store_true", help="Print JSON")

    # Embed command
    embed_parser = subparsers.add_parser("embed", help="Glue orientals along a semi-simplicial set")
    embed_parser.add_argument("path", type=Path, help="Semi-simplicial set JSON file")
    embed_parser.add_argument("--out", type=Path, help="Output JSON file")
    embed_parser.add_argument("--json", action="store_true", help="Print JSON")

    # Verify command
    verify_parser = subparsers.add_parser("verify-paper", help="Run the property suites")
    verify_parser.add_argument("suite", choices=SUITES + ("all",), help="Suite to run")
    verify_parser.add_argument("--dim", type=int, help="Largest enumeration dimension")
    verify_parser.add_argument("--max-cells", type=int, help="Largest enumerated polyplex")
    verify_parser.add_argument("--workers", type=int, help="Worker threads")
    verify_parser.add_argument("--out", type=Path, help="Directory receiving report.json and a manifest")
    verify_parser.add_argument("--json", action="store_true", help="Print the report as JSON")

    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code) if e.code is not None else EXIT_OK

    _configure_logging(args.verbose, args.quiet)

    if not args.command:
        parser.print_help()
        return EXIT_FAILED

    if args.command == "check":
        return check_command(args)
    elif args.command == "classify":
        return classify_command(args)
    elif args.command == "enumerate":
        return enumerate_command(args)
    elif args.command in ("tensor", "cone", "oriental", "cube"):
        return construct_command(args)
    elif args.command == "realize":
        return realize_command(args)
    elif args.command == "embed":
        return embed_command(args)
    elif args.command == "verify-paper":
        return verify_command(args)

    return EXIT_OK


def _configure_logging(verbose: int, quiet: bool) -> None:
    if quiet:
        level = logging.ERROR
    elif verbose >= 2:
        level = logging.DEBUG
    elif verbose == 1:
        level = logging.INFO
    else:
        level = logging.WARNING
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")


def _error(e: Exception) -> None:
    print(f"Error: {e}", file=sys.stderr)


def _emit(args, data: Dict[str, Any], lines: List[str]) -> None:
    if getattr(args, "out", None) is not None:
        save_json(data, args.out)
        lines = lines + [f"Saved to: {args.out}"]
    if args.json:
        print(dump_json(data), end="")
    else:
        for line in lines:
            print(line)


def _polygraph_data(p: Polygraph) -> Dict[str, Any]:
    return {
        "polygraph": p.to_dict(),
        "based_complex": based_complex(p).to_dict(key=lambda b: p.cell(b).label),
    }


def check_command(args) -> int:
    """Validate a polygraph and run the requested class checks."""
    try:
        p, arrow = load_polygraph(args.path)
    except (OSError, ValueError) as e:
        _error(e)
        return EXIT_PARSE

    try:
        checks: Dict[str, List[str]] = {"valid": validate(p).issues}
        if args.regular:
            checks["regular"] = _regular_issues(p)
        if args.spherical:
            checks["spherical"] = _spherical_issues(p, arrow)
        if args.polyplex:
            if arrow is None:
                checks["polyplex"] = ["no distinguished arrow in the file"]
            else:
                checks["polyplex"] = [] if is_polyplex(p, arrow) else ["the arrow fails the sigma test"]
    except PolygraphError as e:
        _error(e)
        return EXIT_FAILED

    passed = all(not issues for issues in checks.values())
    if args.json:
        report = {name: {"ok": not issues, "issues": issues} for name, issues in checks.items()}
        report["passed"] = passed
        print(dump_json(report), end="")
    else:
        print(f"{args.path}: {format_grades(p.grades())} cells")
        for name, issues in checks.items():
            print(f"  {name}: {'ok' if not issues else 'FAILED'}")
            for issue in issues:
                print(f"    {issue}")
    return EXIT_OK if passed else EXIT_FAILED


def _regular_issues(p: Polygraph) -> List[str]:
    try:
        return [f"plex {c.label} lacks spherical boundary" for c in non_spherical_cells(p)]
    except PolygraphError as e:
        return [f"not positive: {e}"]


def _spherical_issues(p: Polygraph, arrow) -> List[str]:
    if arrow is not None:
        pp = classify(p, arrow).polyplex
        return [] if has_spherical_boundary(pp) else ["the arrow lacks spherical boundary"]
    return [f"plex {c.label} lacks spherical boundary" for c in non_spherical_cells(p) if c.dim == p.dim]


def classify_command(args) -> int:
    """Classify an arrow."""
    try:
        p, arrow = load_polygraph(args.path)
        if args.term is not None:
            arrow = term_from_json(json.loads(args.term))
    except (OSError, ValueError) as e:
        _error(e)
        return EXIT_PARSE
    if arrow is None:
        _error(ValueError("No arrow given and none in the file"))
        return EXIT_PARSE

    try:
        classified = classify(p, arrow)
        pp = classified.polyplex
        names = p.names()
        data = {
            "grades": list(pp.shape.grades()),
            "digest": pp.digest,
            "kind": "plex" if pp.is_plex() else "polyplex",
            "labels": [names[classified.label.image(i).cell] for i in pp.underlying.ids],
            "spherical": has_spherical_boundary(pp),
        }
        lines = [
            f"{data['kind']} of dimension {pp.dim}, {format_grades(pp.shape.grades())} cells",
            f"  digest: {pp.digest}",
            f"  spherical boundary: {data['spherical']}",
            f"  labels: {', '.join(data['labels'])}",
        ]
        _emit(args, data, lines)
        return EXIT_OK
    except Exception as e:
        _error(e)
        return EXIT_FAILED


def enumerate_command(args) -> int:
    """Enumerate polyplexes, optionally writing them out with a manifest."""
    try:
        bounds = Bounds.from_env().override(max_dim=args.dim, max_cells=args.max_cells)
        start = time.perf_counter()
        items = list(enumerate_polyplexes(args.dim, bounds.max_cells, args.kind, bounds))
        counts: Dict[str, int] = {"total": len(items)}
        for pp in items:
            key = f"dim_{pp.dim}"
            counts[key] = counts.get(key, 0) + 1

        if args.out is not None:
            manifest = RunManifest(
                command="enumerate",
                arguments={"dim": args.dim, "max_cells": bounds.max_cells, "kind": args.kind},
                counts=counts,
                version=__version__,
            )
            for i, pp in enumerate(items):
                name = f"{i:05d}_{pp.digest[:12]}.json"
                save_json(pp.to_dict(), args.out / name)
                manifest.add_output(Path(name))
            manifest.elapsed_seconds = time.perf_counter() - start
            manifest.save(args.out)

        if args.json:
            print(dump_json([pp.to_dict() for pp in items]), end="")
        else:
            print(f"Enumerated {len(items)} items of kind {args.kind}")
            for key in sorted(k for k in counts if k != "total"):
                print(f"  {key}: {counts[key]}")
            if args.out is not None:
                print(f"Saved to: {args.out}")
        return EXIT_OK
    except Exception as e:
        _error(e)
        return EXIT_FAILED


def construct_command(args) -> int:
    """Tensor, cone, oriental and cube."""
    try:
        if args.command == "tensor":
            left, _ = load_polygraph(args.left)
            right, _ = load_polygraph(args.right)
        elif args.command == "cone":
            base, _ = load_polygraph(args.path)
    except (OSError, ValueError) as e:
        _error(e)
        return EXIT_PARSE

    try:
        bounds = Bounds.from_env()
        if args.command == "tensor":
            p = tensor_polygraph(left, right)
        elif args.command == "cone":
            p = cone_polygraph(base)
        elif args.command == "oriental":
            p = oriental(args.n, bounds)
        else:
            p = cube(args.n, bounds)
        _emit(args, _polygraph_data(p), [f"{args.command}: {format_grades(p.grades())} cells"])
        return EXIT_OK
    except Exception as e:
        _error(e)
        return EXIT_FAILED


def realize_command(args) -> int:
    """Realize a regular polygraph as a semi-simplicial set."""
    try:
        p, _ = load_polygraph(args.path)
    except (OSError, ValueError) as e:
        _error(e)
        return EXIT_PARSE

    try:
        s = realize(p)
        data: Dict[str, Any] = {"realization": s.to_dict(), "counts": list(s.counts)}
        lines = [f"R({args.path.stem}): {format_grades(s.counts)} simplices"]
        if args.homology:
            groups = homology(s, args.max_deg, Bounds.from_env())
            data["homology"] = [g.to_dict() for g in groups]
            lines += [f"  H_{n} = {g}" for n, g in enumerate(groups)]
        _emit(args, data, lines)
        return EXIT_OK
    except Exception as e:
        _error(e)
        return EXIT_FAILED


def embed_command(args) -> int:
    """Build the colimit of orientals over a semi-simplicial set."""
    try:
        s = load_semi_simplicial(args.path)
    except (OSError, ValueError) as e:
        _error(e)
        return EXIT_PARSE

    try:
        p = orientals_embed(s)
        _emit(args, _polygraph_data(p), [f"embedded {args.path.stem}: {format_grades(p.grades())} cells"])
        return EXIT_OK
    except Exception as e:
        _error(e)
        return EXIT_FAILED


def verify_command(args) -> int:
    """Run property suites and report pass/fail per property."""
    try:
        bounds = Bounds.from_env().override(max_cells=args.max_cells, workers=args.workers)
        verifier = PaperVerifier(bounds, max_dim=args.dim)
        start = time.perf_counter()
        report = verifier.run(args.suite)

        if args.out is not None:
            report.save_results(args.out / "report.json")
            summary = report.get_summary()
            manifest = RunManifest(
                command="verify-paper",
                arguments={"suite": args.suite, "max_dim": verifier.max_dim, "bounds": bounds.to_dict()},
                outputs=["report.json"],
                counts={
                    "properties": summary["total_properties"],
                    "failed": len(summary["failed_properties"]),
                    "instances": summary["total_instances"],
                },
                version=__version__,
            )
            manifest.add_input(verifier.catalog.root / EXPECTED_FILE)
            manifest.elapsed_seconds = time.perf_counter() - start
            manifest.save(args.out)

        if args.json:
            print(dump_json(report.to_dict(include_timing=False)), end="")
        else:
            for suite, results in report.by_suite().items():
                print(f"{suite}:")
                for r in results:
                    status = "PASS" if r.passed else "FAIL"
                    print(f"  [{status}] {r.name} ({r.instances} instances)")
                    for failure in r.failures[:3]:
                        print(f"      {failure}")
                    for outcome, count in r.observations.items():
                        print(f"      {outcome}: {count}")
            summary = report.get_summary()
            print(f"\n{summary['total_properties']} properties, pass rate {summary['pass_rate']:.2%}")
        return EXIT_OK if report.passed else EXIT_FAILED
    except Exception as e:
        _error(e)
        return EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
