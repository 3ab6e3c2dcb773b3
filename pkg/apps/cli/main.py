"""Command-line entry point.

Exit codes: 0 on success, 1 when a mathematical check fails, 2 on input errors.
"""
import argparse
import logging
import sys

from turaev import __version__
from turaev.commands import batch, cutting, diagram, khovanov, polynomials, render, ribbon, states
from turaev.config import settings
from turaev.services.errors import IdentityCheckError, InputError, TuraevError
from turaev.telemetry.logging import setup_logging

logger = logging.getLogger("turaev")

EXIT_OK, EXIT_CHECK_FAILED, EXIT_INPUT_ERROR = 0, 1, 2


def common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--cap", type=int, help="state-enumeration cap (crossings)")
    common.add_argument("--field", choices=["q", "f2"], help="Khovanov coefficients: rationals or F2")
    common.add_argument("--pretty", action="store_true", default=None, help="indented JSON output")
    common.add_argument("--jobs", type=int, help="worker processes for batch runs")
    common.add_argument("--log-level", help="DEBUG, INFO, WARNING or ERROR (logs go to stderr)")
    return common


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="turaev", description="Turaev surface invariants of link diagrams")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subparsers = parser.add_subparsers(dest="command", required=True)
    parents = [common_options()]
    for module in (diagram, states, polynomials, ribbon, cutting, khovanov, batch):
        module.register(subparsers, parents)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    setup_logging(args.log_level)

    try:
        payload, ok = args.handler(args)
    except InputError as e:
        logger.error("%s", e)
        for diagnostic in getattr(e, "diagnostics", []):
            logger.error("  [%s] %s %s", diagnostic.code, diagnostic.location, diagnostic.message)
        return EXIT_INPUT_ERROR
    except IdentityCheckError as e:
        logger.error("Check failed: %s", e)
        return EXIT_CHECK_FAILED
    except TuraevError as e:
        logger.exception("Internal error: %s", e)
        return EXIT_CHECK_FAILED

    pretty = settings.pretty if args.pretty is None else args.pretty
    sys.stdout.write(render(payload, pretty) + "\n")
    return EXIT_OK if ok else EXIT_CHECK_FAILED


if __name__ == "__main__":
    sys.exit(main())
