"""batch and catalog subcommands: identity checks over a catalog, and its PD listing."""
import argparse
from typing import Any

from ..config import settings
from ..schemas import DiagnosticOut, RunOptions, RunReport
from ..services.catalog import export_catalog, ingest_catalog
from ..services.diagram import Diagnostic
from ..services.runner import run_invariants


def run_batch(args: argparse.Namespace) -> tuple[RunReport, bool]:
    diagnostics: list[Diagnostic] = []
    entries = ingest_catalog(args.catalog, diagnostics)
    if args.only:
        wanted = set(args.only.split(","))
        entries = [e for e in entries if e.name in wanted]
    options = RunOptions(
        khovanov=args.khovanov,
        khovanov_cap=args.khovanov_cap,
        field=args.field or settings.khovanov_field,
        state_cap=settings.state_cap if args.cap is None else args.cap,
        jobs=args.jobs or settings.jobs,
        timings=args.timings,
    )
    report = run_invariants(entries, options, diagnostics)
    return report, report.ok


def run_catalog(args: argparse.Namespace) -> tuple[dict[str, Any], bool]:
    diagnostics: list[Diagnostic] = []
    entries = ingest_catalog(args.catalog, diagnostics)
    payload: dict[str, Any] = {
        "entries": [entry.to_json() for entry in entries],
        "diagnostics": [DiagnosticOut(**vars(dg)).model_dump() for dg in diagnostics],
    }
    if args.export:
        payload["exported"] = export_catalog(entries, args.export)
    return payload, not diagnostics


def register(subparsers: argparse._SubParsersAction, parents: list[argparse.ArgumentParser]) -> None:
    parser = subparsers.add_parser("batch", parents=parents, help="run every check over a catalog")
    parser.add_argument("catalog", nargs="?", default=None, help="catalog TSV (default: bundled table)")
    parser.add_argument("--khovanov", action="store_true", help="include Khovanov width and Euler checks")
    parser.add_argument("--khovanov-cap", type=int, default=9, help="skip homology above this crossing count")
    parser.add_argument("--only", help="comma-separated entry names")
    parser.add_argument("--timings", action="store_true", help="record per-entry seconds")
    parser.set_defaults(handler=run_batch)

    parser = subparsers.add_parser("catalog", parents=parents, help="list catalog entries with their PD codes")
    parser.add_argument("catalog", nargs="?", default=None, help="catalog TSV (default: bundled table)")
    parser.add_argument("--export", help="also write the entries as a name<TAB>pdcode catalog to this path")
    parser.set_defaults(handler=run_catalog)
