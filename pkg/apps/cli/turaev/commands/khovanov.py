"""khovanov subcommand."""
import argparse
from typing import Any

from ..services.khovanov import check_euler, check_width_bound, cube_complex, homology
from . import add_input, load_diagram


def run_khovanov(args: argparse.Namespace) -> tuple[dict[str, Any], bool]:
    d = load_diagram(args)
    table = homology(cube_complex(d, args.field))
    report = check_width_bound(d, table)
    euler = check_euler(d, table)
    payload = table.to_json()
    payload["width_bound"] = report.to_json()
    payload["euler_matches_jones"] = euler
    return payload, report.holds and euler


def register(subparsers: argparse._SubParsersAction, parents: list[argparse.ArgumentParser]) -> None:
    parser = subparsers.add_parser("khovanov", parents=parents, help="Khovanov homology and delta-width")
    add_input(parser)
    parser.set_defaults(handler=run_khovanov)
