"""
Command-line interface for Jacobson Lab.

Usage:
    jlab classify "Z3 x Z3"
    jlab verify "Z2 x Z5" --time-limit-ms 5000
    jlab survey --max-order 32 --out survey.csv
    jlab construct "Z3 x Z3" --kind hamiltonian
    jlab graph Z4 --format dot
"""

import argparse
import json
import sys
from pathlib import Path
from typing import Any, Dict, FrozenSet, List, Optional

from jacobson_lab import __version__
from jacobson_lab.config import get_settings
from jacobson_lab.rings.local_ring import RingKind
from jacobson_lab.utils import get_logger, setup_logging
from jacobson_lab.utils.exceptions import (
    ConstructionError,
    ExportFormatError,
    GraphSizeError,
    JacobsonLabError,
    RingSpecError,
)

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_DISCREPANCY = 3
EXIT_INFEASIBLE = 4
EXIT_SIZE = 5

# Checked in order; the first matching class decides the exit code.
_EXIT_CODES = (
    (RingSpecError, EXIT_PARSE),
    (ExportFormatError, EXIT_PARSE),
    (ConstructionError, EXIT_INFEASIBLE),
    (GraphSizeError, EXIT_SIZE),
)

CONSTRUCT_KINDS = ("hamiltonian", "eulerian", "pancyclic")


def _print_json(data: Dict[str, Any]) -> None:
    sys.stdout.write(json.dumps(data, indent=2) + "\n")


def _budget(args: argparse.Namespace):
    from jacobson_lab.oracles import SearchBudget

    return SearchBudget.from_settings(
        vertex_limit=getattr(args, "oracle_vertex_limit", None),
        time_limit_ms=getattr(args, "time_limit_ms", None),
    )


def cmd_classify(args: argparse.Namespace) -> int:
    """Handle the classify command."""
    from jacobson_lab.rings import parse_ring
    from jacobson_lab.survey import classify_ring

    report = classify_ring(parse_ring(args.spec), spec=args.spec)
    _print_json(report.model_dump(mode="json", exclude={"oracle", "flags"}))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    """Handle the verify command."""
    from jacobson_lab.rings import parse_ring
    from jacobson_lab.survey import verify_ring

    report = verify_ring(parse_ring(args.spec), _budget(args), spec=args.spec)
    _print_json(report.model_dump(mode="json"))
    if report.has_discrepancy:
        print(f"Discrepancies: {', '.join(report.flags)}", file=sys.stderr)
        return EXIT_DISCREPANCY
    return EXIT_OK


def cmd_survey(args: argparse.Namespace) -> int:
    """Handle the survey command."""
    from pydantic import ValidationError

    from jacobson_lab.survey import CatalogFilter, run_survey, write_csv

    try:
        filt = CatalogFilter(
            max_order=args.max_order,
            include_local=args.include_local,
            kinds=args.kinds or frozenset(RingKind),
        )
    except ValidationError as e:
        print(f"Error: invalid survey filter: {e.errors()[0]['msg']}", file=sys.stderr)
        return EXIT_PARSE

    reports = run_survey(filt, _budget(args))
    if args.out is None:
        write_csv(reports, sys.stdout)
        return EXIT_OK

    args.out.parent.mkdir(parents=True, exist_ok=True)
    with open(args.out, "w", newline="") as f:
        write_csv(reports, f)
    flagged = sum(1 for r in reports if r.has_discrepancy)
    logger.info(f"Wrote {len(reports)} rows ({flagged} with discrepancies) to {args.out}")
    return EXIT_OK


def _witness(args: argparse.Namespace) -> Dict[str, Any]:
    from jacobson_lab.graph import build_graph
    from jacobson_lab.oracles import eulerian, validate_walk
    from jacobson_lab.rings import parse_ring
    from jacobson_lab.survey import witness_document
    from jacobson_lab.theory import (
        construct_hamiltonian,
        cycles_all_lengths,
        thm_euler_trail,
        thm_eulerian,
    )

    R = parse_ring(args.spec)
    G = build_graph(R)

    if args.kind == "hamiltonian":
        trace = construct_hamiltonian(R)
        strategy, walks, spanning = trace.strategy.value, [trace.walk], True
    elif args.kind == "eulerian":
        strategy, spanning = "Hierholzer", True
        if not (thm_eulerian(R) or thm_euler_trail(R)):
            raise ConstructionError(
                f"{R.label} has neither an Eulerian tour nor an Eulerian trail "
                "(Eulerian and Eulerian-trail classification theorems)",
                strategy,
            )
        result = eulerian(G)
        if result.walk is None:
            raise ConstructionError(f"{R.label}: degree parity rules out an Eulerian walk", strategy)
        walks = [result.walk]
    else:
        strategy, spanning = "Shortening", False
        walks = cycles_all_lengths(R, _budget(args))

    for walk in walks:
        check = validate_walk(G, walk, spanning=spanning)
        if not check:
            raise ConstructionError(f"{R.label}: {check.message}", strategy)
    return witness_document(R, G, args.kind, strategy, walks)


def cmd_construct(args: argparse.Namespace) -> int:
    """Handle the construct command."""
    document = _witness(args)
    out = args.out
    if out is None and args.save:
        settings = get_settings()
        settings.ensure_directories()
        slug = "_".join(document["spec"].replace("(", "").replace(")", "").split(" x "))
        out = settings.output_dir / f"{slug}_{args.kind}.json"

    if out is None:
        _print_json(document)
        return EXIT_OK

    out = Path(out)
    out.parent.mkdir(parents=True, exist_ok=True)
    with open(out, "w") as f:
        json.dump(document, f, indent=2)
    logger.info(f"Saved {len(document['walks'])} {args.kind} walk(s) to {out}")
    return EXIT_OK


def cmd_graph(args: argparse.Namespace) -> int:
    """Handle the graph command."""
    from jacobson_lab.graph import build_graph, export
    from jacobson_lab.rings import parse_ring

    sys.stdout.write(export(build_graph(parse_ring(args.spec)), args.format))
    return EXIT_OK


def _kinds(text: str) -> FrozenSet[RingKind]:
    try:
        return frozenset(RingKind(part.strip()) for part in text.split(",") if part.strip())
    except ValueError:
        allowed = ", ".join(k.value for k in RingKind)
        raise argparse.ArgumentTypeError(f"kinds must be a comma-separated subset of {allowed}")


def _add_budget_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--oracle-vertex-limit",
        type=int,
        help="Largest graph the NP-hard oracles will search (default from settings)",
    )
    parser.add_argument(
        "--time-limit-ms",
        type=int,
        help="Wall-clock budget per search in milliseconds",
    )


def create_parser() -> argparse.ArgumentParser:
    """Create the argument parser."""
    parser = argparse.ArgumentParser(
        prog="jlab",
        description="Jacobson graphs of finite commutative rings: formulas versus exact oracles",
    )
    parser.add_argument(
        "--version",
        action="version",
        version=f"%(prog)s {__version__}",
    )
    parser.add_argument(
        "-v", "--verbose",
        action="store_true",
        help="Enable debug logging",
    )

    subparsers = parser.add_subparsers(
        title="commands",
        dest="command",
        required=True,
    )

    classify_parser = subparsers.add_parser(
        "classify",
        help="Evaluate every closed-form formula for a ring",
    )
    classify_parser.add_argument("spec", help='Ring spec, e.g. "Z3 x GF(4)"')
    classify_parser.set_defaults(func=cmd_classify)

    verify_parser = subparsers.add_parser(
        "verify",
        help="Compare formulas with the exact oracles",
    )
    verify_parser.add_argument("spec", help="Ring spec")
    _add_budget_flags(verify_parser)
    verify_parser.set_defaults(func=cmd_verify)

    survey_parser = subparsers.add_parser(
        "survey",
        help="Verify every catalog ring up to an order and write CSV",
    )
    survey_parser.add_argument(
        "--max-order",
        type=int,
        required=True,
        help="Largest ring order",
    )
    survey_parser.add_argument(
        "--include-local",
        action="store_true",
        help="Also survey local rings",
    )
    survey_parser.add_argument(
        "--kinds",
        type=_kinds,
        help="Factor families to use (Z,GF,TRUNC)",
    )
    survey_parser.add_argument(
        "-o", "--out",
        type=Path,
        help="CSV output path (default: stdout)",
    )
    _add_budget_flags(survey_parser)
    survey_parser.set_defaults(func=cmd_survey)

    construct_parser = subparsers.add_parser(
        "construct",
        help="Build and export a validated witness walk",
    )
    construct_parser.add_argument("spec", help="Ring spec")
    construct_parser.add_argument(
        "--kind",
        choices=CONSTRUCT_KINDS,
        required=True,
        help="Walk family to construct",
    )
    construct_parser.add_argument(
        "-o", "--out",
        type=Path,
        help="JSON output path (default: stdout)",
    )
    construct_parser.add_argument(
        "--save",
        action="store_true",
        help="Write into the configured output directory",
    )
    construct_parser.add_argument(
        "--time-limit-ms",
        type=int,
        help="Budget for the per-length cycle search (pancyclic)",
    )
    construct_parser.set_defaults(func=cmd_construct)

    graph_parser = subparsers.add_parser(
        "graph",
        help="Export the Jacobson graph",
    )
    graph_parser.add_argument("spec", help="Ring spec")
    graph_parser.add_argument(
        "--format",
        choices=("dot", "edges"),
        default="dot",
        help="Output format",
    )
    graph_parser.set_defaults(func=cmd_graph)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point."""
    parser = create_parser()
    args = parser.parse_args(argv)

    settings = get_settings()
    log_level = "DEBUG" if args.verbose else settings.log_level
    setup_logging(level=log_level, log_file=settings.log_file)

    try:
        return args.func(args)
    except JacobsonLabError as e:
        for error_type, code in _EXIT_CODES:
            if isinstance(e, error_type):
                print(f"Error: {e}", file=sys.stderr)
                return code
        print(f"Error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
