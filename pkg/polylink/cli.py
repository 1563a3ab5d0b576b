"""Command-line interface: ``python -m polylink <command>``."""

from __future__ import annotations

import argparse
import logging
import sys
from functools import partial
from pathlib import Path
from typing import TYPE_CHECKING, Any, NamedTuple

import colorlog

from .bounds import k_table
from .cofacet import (
    characterization_predicates,
    classify_extremal,
    recognize_canonical,
)
from .config import PolylinkConfig, load_config
from .const import (
    DOMAIN,
    EDGE_LIST_SUFFIXES,
    EXIT_INVALID_INPUT,
    EXIT_OK,
    EXIT_PROPERTY_VIOLATED,
    EXIT_TIME_LIMIT,
    FORMAT_JSON,
    FORMAT_TEXT,
    SUITE_ALL,
    SUITES,
    TABLE_MAX_DIM,
)
from .coordinator import VerificationCoordinator
from .data import CaseStatus, Pairing
from .deadline import time_limit
from .exceptions import (
    InvalidInputError,
    LinkageAssemblyError,
    PolylinkError,
    PreconditionError,
    SearchTimeoutError,
)
from .expression import build
from .lattice import graph_of, validate
from .linkage import check_pairing, disjoint_paths, linkedness
from .report import (
    analysis_report,
    bounds_report,
    classification_report,
    link_report,
    linkedness_report,
    render,
    table_report,
    verify_report,
)
from .storage import (
    dump_polytope,
    load_polytope,
    polytope_to_json,
    read_edge_list,
    write_edge_list,
)
from .subdivision import simplex_face_linkage, subdivision_linkage
from .suites import build_cases

if TYPE_CHECKING:
    from collections.abc import Callable, Sequence

    import networkx as nx

    from .data import Linkage
    from .polytope import CombinatorialPolytope

_LOGGER = logging.getLogger(__name__)

_LOG_FORMAT = "%(log_color)s%(levelname)-8s%(reset)s %(name)s: %(message)s"


class CommandResult(NamedTuple):
    """A report and the exit code it implies."""

    report: dict[str, Any]
    exit_code: int = EXIT_OK
    output_format: str | None = None


def setup_logging(config: PolylinkConfig, verbose: int = 0) -> None:
    """Install one coloured stderr handler on the package logger."""
    package = logging.getLogger(DOMAIN)
    for handler in list(package.handlers):
        if isinstance(handler, colorlog.StreamHandler):
            package.removeHandler(handler)
    handler = colorlog.StreamHandler(sys.stderr)
    handler.setFormatter(colorlog.ColoredFormatter(_LOG_FORMAT))
    package.addHandler(handler)
    package.setLevel(config.log_default.upper())
    for name, level in config.log_levels.items():
        logging.getLogger(name).setLevel(level.upper())
    if verbose:
        package.setLevel(logging.DEBUG)


def load_target(target: str) -> CombinatorialPolytope:
    """Read a polytope file, or build the polytope an expression describes."""
    path = Path(target)
    if path.suffix == ".json" or path.is_file():
        return load_polytope(path)
    return build(target)


def load_graph_target(target: str) -> tuple[nx.Graph, CombinatorialPolytope | None]:
    """Read an edge-list file, or take the graph of a polytope target.

    The polytope is None when the target is a bare graph.
    """
    if Path(target).suffix in EDGE_LIST_SUFFIXES:
        return read_edge_list(target), None
    polytope = load_target(target)
    return graph_of(polytope), polytope


def _positive_float(text: str) -> float:
    try:
        value = float(text)
    except ValueError as exception:
        msg = f"{text!r} is not a number"
        raise argparse.ArgumentTypeError(msg) from exception
    if value <= 0:
        msg = f"{text!r} is not positive"
        raise argparse.ArgumentTypeError(msg)
    return value


def _add_common(parser: argparse.ArgumentParser, *, suppress: bool) -> None:
    """Global flags, accepted before or after the subcommand."""

    def default(value: Any) -> Any:
        return argparse.SUPPRESS if suppress else value

    parser.add_argument(
        "--format",
        choices=(FORMAT_TEXT, FORMAT_JSON),
        default=default(FORMAT_TEXT),
    )
    parser.add_argument(
        "--seed",
        type=int,
        default=default(None),
        help="accepted and ignored; every search is deterministic",
    )
    parser.add_argument(
        "--time-limit", type=_positive_float, default=default(None), metavar="SECONDS"
    )
    parser.add_argument("--config", type=Path, default=default(None))
    parser.add_argument("-v", "--verbose", action="count", default=default(0))


def _parse_args(argv: Sequence[str] | None = None) -> argparse.Namespace:
    parser = argparse.ArgumentParser(
        prog=DOMAIN,
        description="Linkedness of combinatorial polytopes.",
    )
    _add_common(parser, suppress=False)
    commands = parser.add_subparsers(dest="command", required=True)

    def command(name: str, help_text: str) -> argparse.ArgumentParser:
        sub = commands.add_parser(name, help=help_text)
        _add_common(sub, suppress=True)
        return sub

    sub = command("build", "emit the polytope file of an expression")
    sub.add_argument("expression")
    sub.add_argument("--output", type=Path)
    sub.add_argument(
        "--graph-output", type=Path, help="also write the graph as an edge list"
    )

    sub = command("analyze", "graph, complement and facet-complement report")
    sub.add_argument("target", help="expression or polytope file")

    sub = command("linkedness", "exact linkedness of the graph")
    sub.add_argument("target", help="expression, polytope file or edge list")
    sub.add_argument("--max-k", type=int)
    sub.add_argument("--witness", action="store_true")

    sub = command("link", "link the given pairs by every method")
    sub.add_argument("target", help="expression, polytope file or edge list")
    sub.add_argument("--pairs", required=True, help="s1:t1,s2:t2,...")

    sub = command("classify", "small-cofacet conditions and extremal case")
    sub.add_argument("target")

    sub = command("bounds", "known bounds on k(d) and k(d, gamma)")
    sub.add_argument("--d", type=int, required=True)
    sub.add_argument("--gamma", type=int)

    sub = command("table1", "the k(d) table")
    sub.add_argument("--max-dim", type=int, default=TABLE_MAX_DIM)

    sub = command("verify", "run a verification suite")
    sub.add_argument("suite", choices=(*SUITES, SUITE_ALL))
    sub.add_argument("--workers", type=int)

    return parser.parse_args(argv)


def _build(args: argparse.Namespace, _config: PolylinkConfig) -> CommandResult:
    polytope = build(args.expression)
    if args.output is not None:
        dump_polytope(polytope, args.output)
        _LOGGER.info("Wrote %s", args.output)
    if args.graph_output is not None:
        write_edge_list(graph_of(polytope), args.graph_output)
        _LOGGER.info("Wrote %s", args.graph_output)
    return CommandResult(polytope_to_json(polytope), output_format=FORMAT_JSON)


def _analyze(args: argparse.Namespace, _config: PolylinkConfig) -> CommandResult:
    polytope = load_target(args.target)
    report = analysis_report(polytope, recognize_canonical(polytope))
    code = EXIT_OK if validate(polytope).ok else EXIT_PROPERTY_VIOLATED
    return CommandResult(report, code)


def _linkedness(args: argparse.Namespace, _config: PolylinkConfig) -> CommandResult:
    graph, polytope = load_graph_target(args.target)
    if args.max_k is not None and args.max_k < 1:
        msg = f"--max-k must be >= 1, got {args.max_k}"
        raise InvalidInputError(msg)
    result = linkedness(graph, args.max_k)
    source = polytope if polytope is not None else graph
    return CommandResult(linkedness_report(source, result, witness=args.witness))


def _link(args: argparse.Namespace, _config: PolylinkConfig) -> CommandResult:
    graph, polytope = load_graph_target(args.target)
    pairing = Pairing.parse(args.pairs)
    check_pairing(graph, pairing)
    exact = disjoint_paths(graph, pairing)
    constructions: dict[str, Callable[[], Linkage]] = {
        "subdivision": partial(subdivision_linkage, graph, pairing),
    }
    if polytope is not None:
        constructions["simplex-face"] = partial(simplex_face_linkage, polytope, pairing)
    methods: dict[str, Linkage | str] = {}
    assembled = True
    for name, construct in constructions.items():
        try:
            methods[name] = construct()
        except PreconditionError as exception:
            methods[name] = f"not applicable: {exception}"
        except LinkageAssemblyError as exception:
            _LOGGER.error("Method %s failed: %s", name, exception)
            methods[name] = f"failed: {exception}"
            assembled = False
    if polytope is None:
        methods["simplex-face"] = "not applicable: the target is a bare graph"
    found = any(not isinstance(outcome, str) for outcome in methods.values())
    consistent = exact is not None or not found
    if not consistent:
        _LOGGER.error("A constructive linkage exists but the exact search found none")
    report = link_report(pairing, exact, methods, consistent=consistent)
    code = EXIT_OK if consistent and assembled else EXIT_PROPERTY_VIOLATED
    return CommandResult(report, code)


def _classify(args: argparse.Namespace, _config: PolylinkConfig) -> CommandResult:
    polytope = load_target(args.target)
    linked = linkedness(graph_of(polytope))
    predicates = characterization_predicates(polytope)
    result = classify_extremal(polytope, linked.k)
    report = classification_report(polytope, result, predicates, linked.witness)
    code = EXIT_OK if predicates.agree() else EXIT_PROPERTY_VIOLATED
    return CommandResult(report, code)


def _bounds(args: argparse.Namespace, _config: PolylinkConfig) -> CommandResult:
    return CommandResult(bounds_report(args.d, args.gamma))


def _table(args: argparse.Namespace, _config: PolylinkConfig) -> CommandResult:
    if args.max_dim < 1:
        msg = f"--max-dim must be >= 1, got {args.max_dim}"
        raise InvalidInputError(msg)
    return CommandResult(table_report(k_table(args.max_dim)))


def _verify(args: argparse.Namespace, config: PolylinkConfig) -> CommandResult:
    if args.workers is not None and args.workers < 1:
        msg = f"--workers must be >= 1, got {args.workers}"
        raise InvalidInputError(msg)
    config = config.with_overrides(workers=args.workers)
    results = VerificationCoordinator(config.workers).run(
        build_cases(args.suite, config)
    )
    statuses = {result.status for result in results}
    if CaseStatus.FAILED in statuses:
        code = EXIT_PROPERTY_VIOLATED
    elif CaseStatus.TIMEOUT in statuses:
        code = EXIT_TIME_LIMIT
    else:
        code = EXIT_OK
    return CommandResult(verify_report(args.suite, results), code)


COMMANDS: dict[str, Callable[[argparse.Namespace, PolylinkConfig], CommandResult]] = {
    "build": _build,
    "analyze": _analyze,
    "linkedness": _linkedness,
    "link": _link,
    "classify": _classify,
    "bounds": _bounds,
    "table1": _table,
    "verify": _verify,
}


def main(argv: Sequence[str] | None = None) -> int:
    """Run one command and return its exit code."""
    args = _parse_args(argv)
    try:
        config = load_config(args.config)
    except InvalidInputError as exception:
        setup_logging(PolylinkConfig(), args.verbose)
        _LOGGER.error("%s", exception)
        return EXIT_INVALID_INPUT
    setup_logging(config, args.verbose)
    if args.seed is not None:
        _LOGGER.debug("Ignoring --seed %s: every search is deterministic", args.seed)
    limit = args.time_limit if args.time_limit is not None else config.time_limit
    try:
        with time_limit(limit):
            result = COMMANDS[args.command](args, config)
    except SearchTimeoutError as exception:
        _LOGGER.error("%s after %ss", exception, limit)
        return EXIT_TIME_LIMIT
    except InvalidInputError as exception:
        _LOGGER.error("Invalid input: %s", exception)
        return EXIT_INVALID_INPUT
    except PolylinkError as exception:
        _LOGGER.error("%s: %s", type(exception).__name__, exception)
        return EXIT_PROPERTY_VIOLATED
    sys.stdout.write(render(result.report, result.output_format or args.format) + "\n")
    return result.exit_code
