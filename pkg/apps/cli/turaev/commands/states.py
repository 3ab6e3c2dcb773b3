"""genus and adequacy subcommands."""
import argparse

from ..schemas import AdequacyResult, GenusResult
from ..services.states import adequacy, all_A, all_B, resolve, turaev_genus_diagram
from . import add_input, load_diagram


def run_genus(args: argparse.Namespace) -> tuple[GenusResult, bool]:
    d = load_diagram(args)
    return (
        GenusResult(
            c=d.crossing_count,
            sA=resolve(d, all_A(d)).circle_count,
            sB=resolve(d, all_B(d)).circle_count,
            genus=turaev_genus_diagram(d),
        ),
        True,
    )


def run_adequacy(args: argparse.Namespace) -> tuple[AdequacyResult, bool]:
    d = load_diagram(args)
    return AdequacyResult(**adequacy(d).as_dict()), True


def register(subparsers: argparse._SubParsersAction, parents: list[argparse.ArgumentParser]) -> None:
    genus = subparsers.add_parser("genus", parents=parents, help="Turaev genus of the diagram")
    add_input(genus)
    genus.set_defaults(handler=run_genus)

    adequate = subparsers.add_parser("adequacy", parents=parents, help="A- and B-adequacy")
    add_input(adequate)
    adequate.set_defaults(handler=run_adequacy)
