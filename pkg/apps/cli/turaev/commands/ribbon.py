"""ribbon, tutte and br subcommands."""
import argparse
from typing import Any

from ..schemas import PolyResult
from ..services.diagram import is_alternating
from ..services.ribbon import (
    bollobas_riordan,
    bracket_from_ribbon,
    check_thistlethwaite,
    ribbon_from_all_A,
    ribbon_from_all_B,
)
from ..services.polynomials import bracket
from ..services.states import turaev_genus_diagram
from ..services.tutte import tutte
from . import add_input, load_diagram


def run_ribbon(args: argparse.Namespace) -> tuple[dict[str, Any], bool]:
    d = load_diagram(args)
    g = ribbon_from_all_B(d) if args.side == "B" else ribbon_from_all_A(d)
    payload = g.to_json()
    payload["side"] = args.side
    payload["turaev_genus"] = turaev_genus_diagram(d)
    return payload, payload["genus"] == payload["turaev_genus"]


def run_tutte(args: argparse.Namespace) -> tuple[PolyResult, bool]:
    """Tutte polynomial of G_A; reduced alternating inputs also get Thistlethwaite's check."""
    d = load_diagram(args)
    if is_alternating(d):
        report = check_thistlethwaite(d)
        poly, matches = report.tutte, report.matches
        detail = {"sign": report.sign, "shift": report.shift, "jones_q": str(report.jones)}
    else:
        poly = tutte(ribbon_from_all_A(d).underlying_graph())
        matches, detail = None, {}
    result = PolyResult(
        polynomial=str(poly),
        variables=list(poly.variables),
        terms=poly.to_json()["terms"],
        matches=matches,
        detail=detail,
    )
    return result, matches is not False


def run_br(args: argparse.Namespace) -> tuple[PolyResult, bool]:
    d = load_diagram(args)
    g = ribbon_from_all_A(d)
    poly = bollobas_riordan(g, cap=args.cap)
    from_ribbon = bracket_from_ribbon(g, poly)
    direct = bracket(d)
    matches = from_ribbon == direct
    result = PolyResult(
        polynomial=str(poly),
        variables=list(poly.variables),
        terms=poly.to_json()["terms"],
        matches=matches,
        detail={"bracket_from_ribbon": str(from_ribbon), "bracket": str(direct)},
    )
    return result, matches


def register(subparsers: argparse._SubParsersAction, parents: list[argparse.ArgumentParser]) -> None:
    ribbon = subparsers.add_parser("ribbon", parents=parents, help="all-A (or all-B) ribbon graph")
    add_input(ribbon)
    ribbon.add_argument("--side", choices=["A", "B"], default="A")
    ribbon.set_defaults(handler=run_ribbon)

    tutte_parser = subparsers.add_parser("tutte", parents=parents, help="Tutte polynomial of G_A")
    add_input(tutte_parser)
    tutte_parser.set_defaults(handler=run_tutte)

    br = subparsers.add_parser("br", parents=parents, help="Bollobas-Riordan polynomial of G_A")
    add_input(br)
    br.set_defaults(handler=run_br)
