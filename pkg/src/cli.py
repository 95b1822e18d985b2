"""
Command-line front end for the matching-polynomial toolkit.

Exit codes: 0 on success, 1 when a verified claim reports violations,
2 on bad arguments, malformed input or a failed search.
Data goes to stdout (or --output); diagnostics go to stderr.
"""

import argparse
import json
import sys
from contextlib import contextmanager
from typing import IO, Any, Iterator, Optional

from pydantic import BaseModel

from app.criticality.schemas import CriticalResult, Verdict
from app.criticality.service import CriticalityService
from app.enumeration.generators import enum_connected, enum_trees
from app.enumeration.schemas import GraphKind, NThetaResult
from app.enumeration.service import EnumerationService
from app.families.schemas import FamilyMember, MemberSet
from app.families.service import (
    FamiliesService,
    FamilyName,
    graph_from_source,
    members_sorted,
    spec_from_args,
)
from app.graphs.graph import Graph
from app.graphs.graph6 import dump_graph6, iter_graph6, write_graph6
from app.graphs.schemas import GraphSummary
from app.matching.path_tree import verify_path_tree_divisibility
from app.matching.schemas import MatchingPolynomial, PathTreeResult
from app.matching.service import get_matching_service
from app.polynomials.algebraic import AlgebraicRoot
from app.verification.service import get_verification_service
from config import settings
from exceptions import ArgumentError, MatchcritError, UnknownClaimError
from logger import get_logger

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2


# --------------------------------------------------------------------------- #
# Helpers
# --------------------------------------------------------------------------- #

def _parse_params(pairs: Optional[list[str]]) -> dict[str, Any]:
    """key=value pairs; values are read as JSON when they parse, else kept as text."""
    params: dict[str, Any] = {}
    for pair in pairs or []:
        key, sep, raw = pair.partition("=")
        if not sep or not key:
            raise ArgumentError(f"parameter '{pair}' is not of the form key=value")
        try:
            params[key] = json.loads(raw)
        except json.JSONDecodeError:
            params[key] = raw
    return params


@contextmanager
def _output(path: Optional[str]) -> Iterator[IO[str]]:
    if path is None or path == "-":
        yield sys.stdout
        return
    with open(path, "w", encoding="utf-8") as stream:
        yield stream


@contextmanager
def _input(path: str) -> Iterator[IO[str]]:
    if path == "-":
        yield sys.stdin
        return
    with open(path, "r", encoding="utf-8") as stream:
        yield stream


def _emit_model(model: BaseModel, out: IO[str]) -> None:
    out.write(model.model_dump_json(indent=2) + "\n")


def _graph(args: argparse.Namespace) -> Graph:
    return graph_from_source(
        FamiliesService(),
        graph6=args.g6,
        family=args.family,
        n=args.n,
        params=_parse_params(args.param),
    )


def _theta(args: argparse.Namespace) -> AlgebraicRoot:
    if not args.theta:
        raise ArgumentError("--theta is required")
    return AlgebraicRoot.parse(args.theta)


# --------------------------------------------------------------------------- #
# Commands
# --------------------------------------------------------------------------- #

def cmd_poly(args: argparse.Namespace) -> int:
    graph = _graph(args)
    poly = get_matching_service().matching_polynomial(graph)
    with _output(args.output) as out:
        if args.json:
            counts = [abs(poly.coefficient(graph.n - 2 * k)) for k in range(graph.n // 2 + 1)]
            _emit_model(
                MatchingPolynomial(
                    graph=GraphSummary.of(graph),
                    polynomial=poly.to_text(),
                    coefficients=list(poly.coeffs),
                    matching_counts=counts,
                ),
                out,
            )
        else:
            out.write(poly.to_text() + "\n")
    return EXIT_OK


def cmd_classify(args: argparse.Namespace) -> int:
    graph = _graph(args)
    verdict = CriticalityService(get_matching_service()).classify_vertices(graph, _theta(args))
    with _output(args.output) as out:
        _emit_model(Verdict.of(verdict), out)
    return EXIT_OK


def cmd_critical(args: argparse.Namespace) -> int:
    graph = _graph(args)
    theta = _theta(args)
    critical = CriticalityService(get_matching_service()).is_theta_critical(graph, theta)
    with _output(args.output) as out:
        if args.json:
            _emit_model(
                CriticalResult(graph=GraphSummary.of(graph), theta=theta.to_text(), critical=critical),
                out,
            )
        else:
            out.write(("true" if critical else "false") + "\n")
    return EXIT_OK


def cmd_family(args: argparse.Namespace) -> int:
    if not args.family:
        raise ArgumentError("--family is required")
    families = FamiliesService()
    with _output(args.output) as out:
        if args.members:
            if args.n is None:
                raise ArgumentError("--n is required with --members")
            name = spec_from_args(args.family, args.n).name
            if name is FamilyName.HUB:
                graphs = members_sorted(families.f_family_members(args.n))
            elif name is FamilyName.H:
                graphs = members_sorted(families.h_family_members(_theta(args), args.n, args.t))
            else:
                raise ArgumentError("--members is available for the hub and H families only")
            if args.json:
                _emit_model(
                    MemberSet(
                        family=name.value,
                        count=len(graphs),
                        members=[GraphSummary.of(g) for g in graphs],
                    ),
                    out,
                )
            else:
                dump_graph6(graphs, out)
            return EXIT_OK

        spec = spec_from_args(args.family, args.n, _parse_params(args.param))
        graph = families.make_named(spec)
        if args.json:
            _emit_model(FamilyMember(family=spec.describe(), graph=GraphSummary.of(graph)), out)
        else:
            out.write(write_graph6(graph) + "\n")
    return EXIT_OK


def cmd_pathtree(args: argparse.Namespace) -> int:
    graph = _graph(args)
    check = verify_path_tree_divisibility(
        graph, args.u, get_matching_service(), node_limit=settings.path_tree_node_limit
    )
    result = PathTreeResult(
        tree_order=check.tree_order,
        divisible=check.divisible,
        quotient=check.quotient.to_text() if check.quotient is not None else None,
        quotient_identity=check.quotient_identity,
    )
    with _output(args.output) as out:
        if args.json:
            _emit_model(result, out)
        else:
            out.write(f"tree_order={result.tree_order} divisible={str(result.divisible).lower()}\n")
            if result.quotient is not None:
                out.write(result.quotient + "\n")
    return EXIT_OK if check.divisible and check.quotient_identity else EXIT_VIOLATION


def _graph_stream(args: argparse.Namespace) -> Iterator[Graph]:
    if args.input:
        with _input(args.input) as stream:
            yield from iter_graph6(stream)
        return
    if args.n is None:
        raise ArgumentError("--n is required unless --input is given")
    kind = GraphKind(args.kind)
    yield from (enum_trees(args.n) if kind is GraphKind.TREES else enum_connected(args.n))


def cmd_enum(args: argparse.Namespace) -> int:
    graphs: Iterator[Graph] = _graph_stream(args)
    if args.filter_critical:
        theta = AlgebraicRoot.parse(args.filter_critical)
        filtering = EnumerationService(CriticalityService(get_matching_service()))
        graphs = filtering.filter_critical(graphs, theta, jobs=args.jobs)
    with _output(args.output) as out:
        written = dump_graph6(graphs, out)
    logger.info(f"Wrote {written} graphs")
    return EXIT_OK


def cmd_ntheta(args: argparse.Namespace) -> int:
    theta = _theta(args)
    service = EnumerationService(CriticalityService(get_matching_service()))
    result = service.compute_n_theta(theta, args.n_max)
    with _output(args.output) as out:
        if args.json:
            _emit_model(
                NThetaResult(
                    theta=theta.to_text(),
                    found=result.found,
                    n_theta=result.n_theta,
                    graphs=[GraphSummary.of(g) for g in result.graphs],
                    scanned=result.scanned,
                    anomalies=result.anomalies,
                ),
                out,
            )
        elif result.found:
            out.write(f"n_theta={result.n_theta}\n")
            dump_graph6(result.graphs, out)
    if not result.found:
        print(f"no graph with m({theta}, G) = 1 up to order {args.n_max}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    service = get_verification_service()
    if args.claim in (None, "list"):
        for item in service.list_claims():
            print(f"{item.id}\t{item.summary}")
        return EXIT_OK

    params = _parse_params(args.param)
    for name in ("n", "theta", "t", "k"):
        value = getattr(args, name)
        if value is not None:
            params.setdefault(name, value)

    def run(source: Optional[Iterator[Graph]]) -> int:
        report = service.run(args.claim, params, source=source, jobs=args.jobs)
        with _output(args.output) as out:
            out.write(json.dumps({**report.to_dict(), "passed": report.passed}, indent=2, default=str) + "\n")
        if not report.passed:
            print(
                f"claim {report.claim} failed with {len(report.violations)} violation(s)",
                file=sys.stderr,
            )
            return EXIT_VIOLATION
        return EXIT_OK

    if args.input:
        with _input(args.input) as stream:
            return run(iter_graph6(stream))
    return run(None)


# --------------------------------------------------------------------------- #
# Parser
# --------------------------------------------------------------------------- #

def _add_graph_source(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--g6", help="graph in graph6 format")
    parser.add_argument("--family", help="named family, e.g. W or Fstar")
    parser.add_argument("--n", type=int, help="order of the family member")
    parser.add_argument("--param", action="append", metavar="KEY=VALUE", help="extra family parameter")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="matchcrit",
        description="Matching polynomials, theta-critical graphs and their verification.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--jobs", type=int, default=settings.default_jobs, help="worker processes")
    common.add_argument("--output", help="write results to this file instead of stdout")
    sub = parser.add_subparsers(dest="command")

    p = sub.add_parser("poly", parents=[common], help="matching polynomial of a graph")
    _add_graph_source(p)
    p.set_defaults(handler=cmd_poly)

    p = sub.add_parser("classify", parents=[common], help="essential/neutral/positive vertices at theta")
    _add_graph_source(p)
    p.add_argument("--theta", required=True, help="minimal polynomial of theta, e.g. x^2-2")
    p.set_defaults(handler=cmd_classify)

    p = sub.add_parser("critical", parents=[common], help="decide theta-criticality")
    _add_graph_source(p)
    p.add_argument("--theta", required=True)
    p.set_defaults(handler=cmd_critical)

    p = sub.add_parser("family", parents=[common], help="build a family member or list a member set")
    p.add_argument("--family", required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--param", action="append", metavar="KEY=VALUE")
    p.add_argument("--members", action="store_true", help="every member of order n (hub or H)")
    p.add_argument("--theta", help="theta for the H family")
    p.add_argument("--t", type=int, default=1, help="H family parameter")
    p.set_defaults(handler=cmd_family)

    p = sub.add_parser("pathtree", parents=[common], help="check mu(G) divides mu(path tree)")
    _add_graph_source(p)
    p.add_argument("--u", type=int, default=0, help="root vertex")
    p.set_defaults(handler=cmd_pathtree)

    p = sub.add_parser("enum", parents=[common], help="generate graphs in graph6")
    p.add_argument("kind", choices=[k.value for k in GraphKind])
    p.add_argument("--n", type=int)
    p.add_argument("--input", help="graph6 file to read instead of generating ('-' for stdin)")
    p.add_argument("--filter-critical", metavar="THETA", help="keep theta-critical graphs only")
    p.set_defaults(handler=cmd_enum)

    p = sub.add_parser("ntheta", parents=[common], help="smallest order of a graph with theta as a simple root")
    p.add_argument("--theta", required=True)
    p.add_argument("--n-max", type=int, default=settings.n_theta_max_order)
    p.set_defaults(handler=cmd_ntheta)

    p = sub.add_parser("verify", parents=[common], help="run a registered claim ('list' shows them)")
    p.add_argument("claim", nargs="?")
    p.add_argument("--param", action="append", metavar="KEY=VALUE")
    p.add_argument("--n", type=int)
    p.add_argument("--theta")
    p.add_argument("--t", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--input", help="graph6 census file ('-' for stdin)")
    p.set_defaults(handler=cmd_verify)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command is None:
        parser.print_help()
        return EXIT_USAGE
    try:
        return args.handler(args)
    except UnknownClaimError as e:
        print(f"error: {e}", file=sys.stderr)
        print("available claims: " + ", ".join(e.available), file=sys.stderr)
        return EXIT_USAGE
    except MatchcritError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
