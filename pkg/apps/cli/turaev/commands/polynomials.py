"""jones and span subcommands."""
import argparse

from ..schemas import JonesResult, SpanResult
from ..services.polynomials import bracket, jones, span_report
from . import add_input, load_diagram


def run_jones(args: argparse.Namespace) -> tuple[JonesResult, bool]:
    d = load_diagram(args)
    value = bracket(d, args.cap)
    v = jones(d, value)
    in_t = str(v.compress(2, var="t")) if all(e % 2 == 0 for e, _ in v) else None
    return (
        JonesResult(writhe=d.writhe, bracket=str(value), jones_q=str(v), jones_t=in_t, terms_q=v.terms()),
        True,
    )


def run_span(args: argparse.Namespace) -> tuple[SpanResult, bool]:
    """Span bound report; a violated bound is a failed check."""
    d = load_diagram(args)
    report = span_report(d, jones(d, cap=args.cap))
    return SpanResult(**report.to_json()), report.holds


def register(subparsers: argparse._SubParsersAction, parents: list[argparse.ArgumentParser]) -> None:
    jones_parser = subparsers.add_parser("jones", parents=parents, help="Kauffman bracket and Jones polynomial")
    add_input(jones_parser)
    jones_parser.set_defaults(handler=run_jones)

    span = subparsers.add_parser("span", parents=parents, help="span V against c(D) - g_T(D)")
    add_input(span)
    span.set_defaults(handler=run_span)
