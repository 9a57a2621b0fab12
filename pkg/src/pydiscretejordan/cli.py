"""Command line interface for checking ``.dcx`` complexes.

Every command except ``generate`` reads a document, runs its checks and
prints a :class:`~pydiscretejordan.report.RunReport`. The exit status is 0
when every check passed, 1 when one failed or was refuted, 2 when one is
undecided within the search budget and 3 on input errors.
"""

__all__ = ["build_parser", "main", "run"]

import argparse
import logging
import sys
from collections.abc import Callable, Sequence
from typing import Any

from .classify import (
    build_orientation_atlas,
    contained_cell,
    is_discrete_curve,
    is_regular_point,
    is_semi_curve,
    is_simple_surface_point,
    neighborhood,
    two_cell_witness,
)
from .complex import CellComplex, SurfaceRegion, default_u2, validate_u2, validate_u3
from .const import (
    DEFAULT_MAX_CYCLE_LEN,
    DEFAULT_MAX_STEPS,
    DEFAULT_SUITE_MAX_LEN,
    EXIT_INPUT_ERROR,
    EXIT_OK,
    LIST_SEPARATOR,
)
from .document import ComplexDocument
from .exceptions import (
    ComplexError,
    DiscreteTopologyError,
    InputError,
    NoDiskError,
)
from .fixtures import FIXTURE_KINDS, generate
from .homotopy import (
    check_arc_sweepable,
    check_contractible,
    contract_to_point,
    crosscheck_simply_connected,
    find_homotopy,
    is_gradual_variation,
    is_side_gradual_variation,
)
from .jordan import exhaustive_jordan_suite, separation_check
from .models import Budget, Curve, SeparationMode, parse_vertex_list
from .report import Check, RunReport, verdict_check

_LOGGER = logging.getLogger(__name__)
_LOGGER.addHandler(logging.NullHandler())

_SIMPLY_CONNECTED_METHODS = {
    "contraction": "contraction",
    "b": "contraction",
    "arc-sweep": "arc-sweep",
    "c": "arc-sweep",
    "crosscheck": "crosscheck",
}

Handler = Callable[[argparse.Namespace], RunReport]


def _load(args: argparse.Namespace) -> ComplexDocument:
    return ComplexDocument.load(args.file, strict=not args.lenient)


def _build(args: argparse.Namespace, document: ComplexDocument) -> CellComplex:
    return document.build(
        strict_u3=not args.loose_u3, trust_minimal=args.trust_minimal
    )


def _budget(args: argparse.Namespace) -> Budget:
    return Budget(max_cycle_len=args.max_len, max_steps=args.budget)


def _curve(cx: CellComplex, text: str, *, closed: bool) -> Curve:
    names = parse_vertex_list(text)
    if closed:
        return cx.graph.cycle(names)
    return cx.graph.path(names)


def _given(args: argparse.Namespace, name: str) -> str:
    """Value of an argument accepted both as a positional and as a flag."""
    flag = getattr(args, name)
    positional = getattr(args, f"{name}_arg")
    if flag is not None and positional is not None and flag != positional:
        raise InputError(f"{name} given twice: {positional!r} and {flag!r}")
    value = flag if flag is not None else positional
    if value is None:
        raise InputError(f"missing {name}")
    return str(value)


def _boundary_or_none(region: SurfaceRegion) -> frozenset[str] | None:
    return region.boundary() if region.is_semi_surface() else None


def _cmd_validate(args: argparse.Namespace) -> RunReport:
    document = _load(args)
    graph = document.build_graph()
    checks = [Check("graph", True, f"{len(graph)} vertices, simple and connected")]
    payload: dict[str, Any] = {"document": document.to_dict()}
    if document.cells is None:
        cells = default_u2(graph)
        checks.append(Check("surface-cells", True, f"{len(cells)} by default"))
    else:
        cells = tuple(graph.cycle(cell) for cell in document.cells)
        u2 = validate_u2(graph, cells)
        payload["surface_cells"] = u2.to_dict()
        checks.append(Check("surface-cells", u2.passed, u2.describe()))
        if not u2.passed:
            return RunReport(args.command, tuple(checks), payload)
    cx = CellComplex(graph, cells)
    if document.u3 is not None:
        u3 = validate_u3(
            cx,
            tuple(frozenset(s) for s in document.u3),
            strict=not args.loose_u3,
            trust_minimal=args.trust_minimal,
        )
        payload["u3"] = u3.to_dict()
        checks.append(Check("3-cells", u3.passed, u3.describe()))
    region = cx.region()
    boundary = _boundary_or_none(region)
    payload["region"] = {
        "cells": len(cx.cells),
        "semi_surface": region.is_semi_surface(),
        "closed": region.is_closed_semi_surface(),
        "boundary_size": None if boundary is None else len(boundary),
        "orientable": build_orientation_atlas(region).consistent,
    }
    return RunReport(args.command, tuple(checks), payload)


def _classify_vertex(cx: CellComplex, vertex: str) -> RunReport:
    region = cx.region()
    cx.graph.order(vertex)
    payload: dict[str, Any] = {"vertex": vertex}
    try:
        payload["neighborhood"] = neighborhood(region, vertex).to_dict()
    except NoDiskError as err:
        payload["neighborhood"] = None
        payload["reason"] = str(err)
    regular = is_regular_point(region, vertex)
    payload["simple_surface_point"] = is_simple_surface_point(region, vertex)
    boundary = _boundary_or_none(region)
    payload["on_boundary"] = None if boundary is None else vertex in boundary
    if len(region.subgraph.neighbors(vertex)) == 2:
        try:
            payload["two_cell_witness"] = two_cell_witness(region, vertex).to_dict()
        except DiscreteTopologyError as err:
            payload["two_cell_witness"] = str(err)
    detail = "cells around the point share edges"
    if not regular:
        detail = "irregular point: cells around the point are not edge-connected"
    return RunReport("classify", (Check("regular point", regular, detail),), payload)


def _classify_curve(cx: CellComplex, text: str, *, closed: bool) -> RunReport:
    curve = _curve(cx, text, closed=closed)
    semi = is_semi_curve(cx, curve)
    cell = contained_cell(cx, curve)
    checks = [
        Check("semi-curve", semi, "" if semi else "the path has a chord"),
        Check(
            "discrete curve",
            is_discrete_curve(cx, curve),
            "" if cell is None else f"contains surface-cell #{cell}",
        ),
    ]
    boundary = _boundary_or_none(cx.region())
    payload = {
        "curve": curve.to_list(),
        "closed": curve.closed,
        "contained_cell": cell,
        "touches_boundary": (
            None if boundary is None else bool(curve.vertex_set & boundary)
        ),
    }
    return RunReport("classify", tuple(checks), payload)


def _cmd_classify(args: argparse.Namespace) -> RunReport:
    vertex, curve = args.vertex, args.curve
    if args.target_arg is not None:
        if vertex is not None or curve is not None:
            raise InputError("give either a positional target or --vertex/--curve")
        if LIST_SEPARATOR in args.target_arg:
            curve = args.target_arg
        else:
            vertex = args.target_arg
    cx = _build(args, _load(args))
    if vertex is not None:
        return _classify_vertex(cx, vertex)
    if curve is None:
        raise InputError("missing vertex or curve to classify")
    return _classify_curve(cx, curve, closed=not args.open)


def _cmd_u2_default(args: argparse.Namespace) -> RunReport:
    document = _load(args)
    graph = document.build_graph()
    cells = default_u2(graph)
    checks = [Check("default construction", True, f"{len(cells)} surface-cells")]
    if document.cells is not None:
        listed = {graph.cycle(cell) for cell in document.cells}
        same = listed == set(cells)
        checks.append(
            Check(
                "matches listed cells",
                same,
                "" if same else "listed surface-cells differ from the default set",
            )
        )
    payload = {"cells": [cell.to_list() for cell in cells]}
    return RunReport(args.command, tuple(checks), payload)


def _cmd_boundary(args: argparse.Namespace) -> RunReport:
    cx = _build(args, _load(args))
    region = cx.region()
    if not region.is_semi_surface():
        detail = "an edge lies in no cell or in more than two"
        check = Check("semi-surface", False, detail)
        return RunReport(args.command, (check,), {"boundary": None})
    boundary = region.sorted_boundary()
    closed = region.is_closed_semi_surface()
    checks = (
        Check("semi-surface", True),
        Check(
            "closed exactly when boundary is empty",
            closed == (not boundary),
        ),
    )
    payload = {"boundary": list(boundary), "closed": closed}
    return RunReport(args.command, checks, payload)


def _cmd_jordan(args: argparse.Namespace) -> RunReport:
    cx = _build(args, _load(args))
    mode = SeparationMode.STRICT if args.strict else SeparationMode.PSEUDO
    curve = parse_vertex_list(_given(args, "curve"))
    report = separation_check(cx.region(), curve, mode)
    expected = "exactly two" if mode is SeparationMode.PSEUDO else "at least two"
    checks = (
        Check(
            "separates",
            report.holds,
            f"{report.count} components, expected {expected}",
        ),
        Check("flank sides apart", not report.flank_violations),
        Check("oracle agrees", report.oracle_agrees),
    )
    return RunReport(args.command, checks, report.to_dict())


def _cmd_jordan_suite(args: argparse.Namespace) -> RunReport:
    cx = _build(args, _load(args))
    mode = SeparationMode.STRICT if args.strict else SeparationMode.PSEUDO
    suite = exhaustive_jordan_suite(cx.region(), args.max_len, mode)
    detail = (
        f"{len(suite.outcomes)} curves, {len(suite.non_separating)} not separating"
    )
    check = Check("all curves separate", suite.all_hold, detail)
    return RunReport(args.command, (check,), suite.to_dict())


def _cmd_simply_connected(args: argparse.Namespace) -> RunReport:
    cx = _build(args, _load(args))
    region = cx.region()
    budget = _budget(args)
    method = _SIMPLY_CONNECTED_METHODS[args.method]
    if method == "crosscheck":
        both = crosscheck_simply_connected(region, budget)
        checks = (
            verdict_check("contraction", both.contraction.verdict),
            verdict_check("arc sweep", both.arc_sweep.verdict),
            Check("checks agree", both.consistent),
        )
        return RunReport(args.command, checks, both.to_dict())
    if method == "contraction":
        report = check_contractible(region, budget)
    else:
        report = check_arc_sweepable(region, budget)
    check = verdict_check(
        "simply connected", report.verdict, f"{method}: {report.verdict}"
    )
    return RunReport(args.command, (check,), report.to_dict())


def _cmd_homotopy(args: argparse.Namespace) -> RunReport:
    cx = _build(args, _load(args))
    region = cx.region()
    source = _curve(cx, _given(args, "source"), closed=args.closed)
    target = _curve(cx, _given(args, "target"), closed=args.closed)
    payload: dict[str, Any] = {
        "gradual_variation": is_gradual_variation(cx, source, target, region).to_dict()
    }
    direct = is_side_gradual_variation(region, source, target)
    if direct.sided:
        check = Check("homotopic", True, "side-gradually varied in one step")
        payload["side_variation"] = direct.to_dict()
        return RunReport(args.command, (check,), payload)
    result = find_homotopy(region, source, target, _budget(args))
    payload["search"] = result.to_dict()
    check = verdict_check("homotopic", result.verdict, result.reason or "")
    return RunReport(args.command, (check,), payload)


def _cmd_contract(args: argparse.Namespace) -> RunReport:
    cx = _build(args, _load(args))
    cycle = cx.graph.cycle(parse_vertex_list(_given(args, "cycle")))
    point = _given(args, "point")
    result = contract_to_point(cx.region(), cycle, point, _budget(args))
    check = verdict_check("contracts to point", result.verdict, result.reason or "")
    return RunReport(args.command, (check,), result.to_dict())


def _add_file(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("file", help="complex document (.dcx)")
    sub.add_argument(
        "--loose-u3",
        action="store_true",
        help="accept surface-type 3-cell intersections without shared edges",
    )
    sub.add_argument(
        "--trust-minimal",
        action="store_true",
        help="skip the exhaustive minimality search for 3-cells",
    )


def _add_budget(sub: argparse.ArgumentParser) -> None:
    sub.add_argument(
        "--max-len",
        type=int,
        default=DEFAULT_MAX_CYCLE_LEN,
        help="longest cycle to enumerate or pass through",
    )
    sub.add_argument(
        "--budget",
        type=int,
        default=DEFAULT_MAX_STEPS,
        help="longest deformation sequence to search for",
    )


def build_parser() -> argparse.ArgumentParser:
    """Return the argument parser for the ``dcx`` command."""
    parser = argparse.ArgumentParser(
        prog="dcx", description="Discrete curves, surfaces and Jordan separation."
    )
    parser.add_argument("--json", action="store_true", help="emit JSON reports")
    parser.add_argument(
        "-v", "--verbose", action="store_true", help="debug logging to stderr"
    )
    parser.add_argument(
        "--lenient",
        action="store_true",
        help="skip duplicate declarations in documents instead of failing",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    gen = commands.add_parser("generate", help="write a reference complex")
    gen.add_argument("kind", choices=sorted(FIXTURE_KINDS))
    gen.add_argument("--n", type=int, help="grid or torus rows")
    gen.add_argument("--m", type=int, help="torus columns")
    gen.add_argument("--length", type=int, help="moebius strip length")
    gen.add_argument("-o", "--output", help="file to write instead of stdout")

    sub = commands.add_parser("validate", help="check the cell structure")
    _add_file(sub)
    sub.set_defaults(handler=_cmd_validate)

    sub = commands.add_parser("classify", help="classify a vertex or a curve")
    _add_file(sub)
    sub.add_argument(
        "target_arg",
        nargs="?",
        metavar="target",
        help="vertex, or comma-separated curve",
    )
    target = sub.add_mutually_exclusive_group()
    target.add_argument("--vertex")
    target.add_argument("--curve", help="comma-separated vertex list")
    sub.add_argument("--open", action="store_true", help="treat the curve as open")
    sub.set_defaults(handler=_cmd_classify)

    sub = commands.add_parser("u2-default", help="default surface-cells")
    sub.add_argument("file", help="complex document (.dcx)")
    sub.set_defaults(handler=_cmd_u2_default)

    sub = commands.add_parser("boundary", help="boundary of the whole surface")
    _add_file(sub)
    sub.set_defaults(handler=_cmd_boundary)

    sub = commands.add_parser("jordan", help="separation by one closed curve")
    _add_file(sub)
    sub.add_argument("curve_arg", nargs="?", metavar="curve", help="closed curve")
    sub.add_argument("--curve", help="comma-separated vertex list")
    sub.add_argument("--strict", action="store_true", help="no central points")
    sub.set_defaults(handler=_cmd_jordan)

    sub = commands.add_parser("jordan-suite", help="separation by every short curve")
    _add_file(sub)
    sub.add_argument("--max-len", type=int, default=DEFAULT_SUITE_MAX_LEN)
    sub.add_argument("--strict", action="store_true", help="no central points")
    sub.set_defaults(handler=_cmd_jordan_suite)

    sub = commands.add_parser("simply-connected", help="bounded simple connectivity")
    _add_file(sub)
    sub.add_argument("method", choices=sorted(_SIMPLY_CONNECTED_METHODS))
    _add_budget(sub)
    sub.set_defaults(handler=_cmd_simply_connected)

    sub = commands.add_parser("homotopy", help="deform one path into another")
    _add_file(sub)
    sub.add_argument("source_arg", nargs="?", metavar="source")
    sub.add_argument("target_arg", nargs="?", metavar="target")
    sub.add_argument("--source", help="comma-separated vertex list")
    sub.add_argument("--target", help="comma-separated vertex list")
    sub.add_argument("--closed", action="store_true", help="paths are cycles")
    _add_budget(sub)
    sub.set_defaults(handler=_cmd_homotopy)

    sub = commands.add_parser("contract", help="contract a cycle to one of its points")
    _add_file(sub)
    sub.add_argument("cycle_arg", nargs="?", metavar="cycle")
    sub.add_argument("point_arg", nargs="?", metavar="point")
    sub.add_argument("--cycle", help="comma-separated vertex list")
    sub.add_argument("--point")
    _add_budget(sub)
    sub.set_defaults(handler=_cmd_contract)
    return parser


def _generate(args: argparse.Namespace) -> int:
    params = {
        key: value
        for key, value in (("n", args.n), ("m", args.m), ("length", args.length))
        if value is not None
    }
    document = generate(args.kind, **params)
    if args.output is None:
        sys.stdout.write(document.to_text())
        return EXIT_OK
    document.save(args.output)
    report = RunReport(
        args.command,
        (Check("written", True, args.output),),
        {"document": document.to_dict()},
    )
    _emit(report, as_json=args.json)
    return report.exit_code


def _emit(report: RunReport, *, as_json: bool) -> None:
    print(report.render_json() if as_json else report.render_text())


def run(args: argparse.Namespace) -> RunReport:
    """Run a parsed command and turn library errors into a report."""
    handler: Handler = args.handler
    try:
        return handler(args)
    except (InputError, ComplexError, OSError) as err:
        _LOGGER.error("%s failed: %s", args.command, err)
        return RunReport(args.command, error=str(err))
    except DiscreteTopologyError as err:
        _LOGGER.error("%s stopped: %s", args.command, err)
        return RunReport(args.command, (Check("consistency", False, str(err)),))


def main(argv: Sequence[str] | None = None) -> int:
    """Entry point of the ``dcx`` console script."""
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )
    if args.command == "generate":
        try:
            return _generate(args)
        except (InputError, OSError) as err:
            _LOGGER.error("generate failed: %s", err)
            _emit(RunReport(args.command, error=str(err)), as_json=args.json)
            return EXIT_INPUT_ERROR
    report = run(args)
    _emit(report, as_json=args.json)
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
