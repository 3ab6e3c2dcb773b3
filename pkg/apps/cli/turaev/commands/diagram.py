"""parse: validate and normalize a diagram."""
import argparse

from ..schemas import DiagnosticOut, ParseResult
from ..services.builders import build_from_code
from ..services.diagram import is_alternating, is_reduced, validate_and_orient
from ..services.errors import DiagramStructureError
from . import add_input, read_code


def run_parse(args: argparse.Namespace) -> tuple[ParseResult, bool]:
    code = read_code(args)
    diagnostics: list[DiagnosticOut] = []
    if ":" not in code and " # " not in code:
        report, _, _ = validate_and_orient(code)
        diagnostics = [DiagnosticOut(**vars(dg)) for dg in report.diagnostics]
        if not report.ok:
            first = next(dg for dg in report.diagnostics if dg.severity == "error")
            raise DiagramStructureError(first.message, diagnostics=report.diagnostics)
    d = build_from_code(code)
    result = ParseResult(
        pd=d.pd_string(),
        crossings=d.crossing_count,
        components=d.component_count,
        writhe=d.writhe,
        signs=list(d.signs),
        alternating=is_alternating(d),
        reduced=is_reduced(d),
        diagnostics=diagnostics,
    )
    return result, True


def register(subparsers: argparse._SubParsersAction, parents: list[argparse.ArgumentParser]) -> None:
    parser = subparsers.add_parser("parse", parents=parents, help="validate, orient and relabel a diagram")
    add_input(parser)
    parser.set_defaults(handler=run_parse)
