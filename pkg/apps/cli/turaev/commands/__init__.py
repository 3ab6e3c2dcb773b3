"""CLI subcommands.

Each module exposes ``register(subparsers, parents)``; handlers take the parsed
arguments and return ``(payload, ok)``.
"""
import argparse
import json
import sys
from pathlib import Path
from typing import Any, Callable

from pydantic import BaseModel

from ..config import settings
from ..services.builders import build_from_code
from ..services.diagram import LinkDiagram
from ..services.errors import InputError

Handler = Callable[[argparse.Namespace], tuple[Any, bool]]


def add_input(parser: argparse.ArgumentParser) -> None:
    """Diagram input: a PD string or builder code, or a file holding one."""
    parser.add_argument("code", nargs="?", help='PD code such as "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)"')
    parser.add_argument("-f", "--file", help="read the code from this file ('-' for stdin)")


def read_code(args: argparse.Namespace) -> str:
    if args.file:
        if args.file == "-":
            return sys.stdin.read().strip()
        try:
            return Path(args.file).read_text(encoding="utf-8").strip()
        except OSError as exc:
            raise InputError(f"cannot read {args.file}: {exc}") from exc
    if not args.code:
        raise InputError("a diagram code or --file is required")
    return args.code.strip()


def load_diagram(args: argparse.Namespace) -> LinkDiagram:
    return build_from_code(read_code(args))


def render(payload: Any, pretty: bool) -> str:
    """JSON text for stdout; compact unless ``pretty``. Plain dict payloads get a ``schema_version``."""
    if isinstance(payload, BaseModel):
        return payload.model_dump_json(indent=2 if pretty else None, exclude_none=True)
    if isinstance(payload, dict):
        payload = {**payload, "schema_version": settings.schema_version}
    if pretty:
        return json.dumps(payload, indent=2)
    return json.dumps(payload, separators=(",", ":"))
