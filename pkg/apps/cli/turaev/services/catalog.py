"""Bundled knot table ingestion and PD export."""
from __future__ import annotations

import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Iterable

from ..config import settings
from .builders import build_from_code
from .diagram import Diagnostic, LinkDiagram
from .errors import InputError, TuraevError

logger = logging.getLogger(__name__)

_FLAGS = {"1": True, "0": False, "-": None, "": None}
_FLAG_TEXT = {True: "1", False: "0", None: "-"}


@dataclass(frozen=True)
class CatalogEntry:
    """One row of a catalog: a name, the code it was built from and known flags."""

    name: str
    code: str
    diagram: LinkDiagram
    alternating: bool | None = None
    adequate: bool | None = None

    def to_tsv(self) -> str:
        """The entry as a ``name<TAB>pdcode<TAB>alternating<TAB>adequate`` line."""
        return "\t".join(
            (self.name, self.diagram.pd_string(), _FLAG_TEXT[self.alternating], _FLAG_TEXT[self.adequate])
        )

    def to_json(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "code": self.code,
            "pd": self.diagram.pd_string(),
            "crossings": self.diagram.crossing_count,
            "components": self.diagram.component_count,
            "alternating": self.alternating,
            "adequate": self.adequate,
        }


def _flag(text: str, column: str, line_no: int) -> bool | None:
    try:
        return _FLAGS[text.strip()]
    except KeyError:
        raise InputError(f"line {line_no}: {column} flag must be 1, 0 or -, got {text!r}") from None


def parse_catalog_line(line: str, line_no: int) -> CatalogEntry | None:
    """Parse ``name<TAB>code[<TAB>alternating[<TAB>adequate]]``; comments and blanks give None."""
    stripped = line.strip()
    if not stripped or stripped.startswith("#"):
        return None
    fields = line.rstrip("\n").split("\t")
    if len(fields) < 2 or not fields[0].strip() or not fields[1].strip():
        raise InputError(f"line {line_no}: expected name<TAB>code")
    name, code = fields[0].strip(), fields[1].strip()
    alternating = _flag(fields[2], "alternating", line_no) if len(fields) > 2 else None
    adequate = _flag(fields[3], "adequate", line_no) if len(fields) > 3 else None
    return CatalogEntry(name, code, build_from_code(code), alternating, adequate)


def ingest_catalog(
    path: str | Path | None = None, diagnostics: list[Diagnostic] | None = None
) -> list[CatalogEntry]:
    """Read a catalog file; bad lines are skipped and recorded in ``diagnostics``.

    Args:
        path: TSV file; the bundled table by default.
        diagnostics: list that receives one diagnostic per skipped line.

    Returns:
        Entries in file order.

    Raises:
        InputError: if the file cannot be read.
    """
    path = Path(path or settings.catalog_path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read catalog {path}: {exc}") from exc

    diagnostics = [] if diagnostics is None else diagnostics
    entries: list[CatalogEntry] = []
    names: set[str] = set()
    for line_no, line in enumerate(text.splitlines(), start=1):
        try:
            entry = parse_catalog_line(line, line_no)
        except TuraevError as exc:
            diagnostics.append(Diagnostic("catalog-line", str(exc), f"{path.name}:{line_no}", "warning"))
            logger.warning("Skipping catalog line %d: %s", line_no, exc)
            continue
        if entry is None:
            continue
        if entry.name in names:
            diagnostics.append(
                Diagnostic("duplicate", f"duplicate name {entry.name}", f"{path.name}:{line_no}", "warning")
            )
            logger.warning("Skipping duplicate catalog entry %s on line %d", entry.name, line_no)
            continue
        names.add(entry.name)
        entries.append(entry)

    if not entries:
        logger.warning("Catalog %s has no entries", path)
    logger.info("Loaded %d catalog entries from %s", len(entries), path)
    return entries


def export_catalog(entries: Iterable[CatalogEntry], path: str | Path) -> int:
    """Write entries as a PD-only catalog that :func:`ingest_catalog` reads back.

    Returns:
        Number of entries written.

    Raises:
        InputError: if the file cannot be written.
    """
    lines = ["# name<TAB>pdcode<TAB>alternating<TAB>adequate"]
    lines += [entry.to_tsv() for entry in entries]
    try:
        Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot write catalog {path}: {exc}") from exc
    logger.info("Exported %d catalog entries to %s", len(lines) - 1, path)
    return len(lines) - 1
