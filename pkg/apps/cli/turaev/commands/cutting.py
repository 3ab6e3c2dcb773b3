"""decompose and surgery subcommands."""
import argparse
from typing import Any

from ..services.cutting import (
    alternating_tangle_decomposition,
    cutting_arcs,
    genus_one_structure,
    non_alternating_edges,
    surgery,
)
from ..services.errors import PreconditionError
from ..services.states import turaev_genus_diagram
from . import add_input, load_diagram


def run_decompose(args: argparse.Namespace) -> tuple[dict[str, Any], bool]:
    d = load_diagram(args)
    genus = turaev_genus_diagram(d)
    payload: dict[str, Any] = {
        "genus": genus,
        "non_alternating_edges": non_alternating_edges(d),
        "cutting_arcs": [arc.to_json() for arc in cutting_arcs(d)],
        "decomposition": alternating_tangle_decomposition(d).to_json(d),
    }
    ok = True
    if genus == 1:
        structure = genus_one_structure(d)
        payload["cycle"] = structure.to_json()
        ok = structure.ok
    return payload, ok


def run_surgery(args: argparse.Namespace) -> tuple[dict[str, Any], bool]:
    """Surgery along one cutting arc (by index) or all of them."""
    d = load_diagram(args)
    arcs = cutting_arcs(d)
    if not arcs:
        raise PreconditionError("the diagram has no cutting arcs")
    if args.arc is not None:
        if not 0 <= args.arc < len(arcs):
            raise PreconditionError(f"arc index {args.arc} out of range 0..{len(arcs) - 1}")
        arcs = [arcs[args.arc]]
    results = []
    ok = True
    for arc in arcs:
        try:
            result = surgery(d, arc)
        except PreconditionError as exc:
            results.append({"arc": arc.to_json(), "error": str(exc)})
            ok = False
            continue
        results.append({"arc": arc.to_json(), **result.to_json()})
        if result.degenerate or result.genus_after != result.genus_before - 1:
            ok = False
    return {"results": results}, ok


def register(subparsers: argparse._SubParsersAction, parents: list[argparse.ArgumentParser]) -> None:
    decompose = subparsers.add_parser(
        "decompose", parents=parents, help="non-alternating edges, cutting arcs and alternating tangles"
    )
    add_input(decompose)
    decompose.set_defaults(handler=run_decompose)

    surgery_parser = subparsers.add_parser("surgery", parents=parents, help="surgery along cutting arcs")
    add_input(surgery_parser)
    surgery_parser.add_argument("--arc", type=int, help="index into the cutting-arc list (default: all)")
    surgery_parser.set_defaults(handler=run_surgery)
