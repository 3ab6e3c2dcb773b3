"""Batch identity runs over catalog entries."""
from __future__ import annotations

import logging
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from itertools import repeat
from typing import Callable

from ..schemas import (
    AdequacySummary,
    CheckOutcome,
    DiagnosticOut,
    EntryReport,
    RunOptions,
    RunReport,
    SpanSummary,
)
from .catalog import CatalogEntry
from .cutting import cutting_arcs, genus_one_structure, is_prime, surgery
from .diagram import Diagnostic, LinkDiagram, is_alternating
from .errors import CapExceededError, PreconditionError, TuraevError
from .khovanov import check_euler, check_width_bound, cube_complex, homology
from .polynomials import bracket_bruteforce, jones, span_report
from .ribbon import check_br_specialization, check_thistlethwaite, ribbon_from_all_A, ribbon_genus
from .states import adequacy, all_A, all_B, resolve, turaev_genus_diagram, turaev_surface_map
from .sweep import bracket_sweep

logger = logging.getLogger(__name__)


def _outcome(name: str, check: Callable[[], tuple[bool, str]]) -> CheckOutcome:
    """Run one check; precondition and cap errors turn into a skip."""
    try:
        ok, reason = check()
    except (PreconditionError, CapExceededError) as exc:
        return CheckOutcome(name=name, status="skipped", reason=str(exc))
    except TuraevError as exc:
        return CheckOutcome(name=name, status="fail", reason=f"{type(exc).__name__}: {exc}")
    return CheckOutcome(name=name, status="pass" if ok else "fail", reason=reason)


def _skip(name: str, reason: str) -> CheckOutcome:
    return CheckOutcome(name=name, status="skipped", reason=reason)


def _surgery_check(d: LinkDiagram) -> tuple[bool, str]:
    """Surgery along every cutting arc; a precondition failure here is a failed check, not a skip."""
    try:
        structure = genus_one_structure(d)
        arcs = cutting_arcs(d)
    except PreconditionError as exc:
        return False, str(exc)
    if not structure.ok:
        return False, "; ".join(structure.problems)
    if not arcs:
        return False, "genus-one diagram without cutting arcs"
    for arc in arcs:
        try:
            result = surgery(d, arc)
        except PreconditionError as exc:
            return False, f"surgery on edges {arc.edges}: {exc}"
        if result.degenerate:
            return False, f"surgery on edges {arc.edges} disconnects the diagram"
        if result.genus_after != 0:
            return False, f"surgery on edges {arc.edges} left genus {result.genus_after}"
    return True, f"{len(arcs)} cutting arcs, cycle of {len(structure.order)} tangles"


def evaluate_entry(entry: CatalogEntry, options: RunOptions) -> EntryReport:
    """Every invariant and identity check for one catalog entry."""
    started = time.perf_counter()
    d = entry.diagram
    c = d.crossing_count
    s_a = resolve(d, all_A(d)).circle_count
    s_b = resolve(d, all_B(d)).circle_count
    genus = turaev_genus_diagram(d)
    adequate = adequacy(d)
    alternating = is_alternating(d)
    v = jones(d, cap=options.state_cap)
    span = span_report(d, v)
    checks: list[CheckOutcome] = []

    def alternating_baseline() -> tuple[bool, str]:
        if not alternating:
            raise PreconditionError("diagram is not reduced alternating")
        return genus == 0 and span.span == c, f"genus {genus}, span {span.span}, c {c}"

    checks.append(_outcome("alternating_baseline", alternating_baseline))
    checks.append(
        _outcome("span_bound", lambda: (span.holds, f"span {span.span} <= {span.bound}, slack {span.slack}"))
    )

    def expected_flags() -> tuple[bool, str]:
        if entry.alternating is None and entry.adequate is None:
            raise PreconditionError("no expected flags recorded")
        problems = []
        if entry.alternating is not None and entry.alternating != alternating:
            problems.append(f"alternating expected {entry.alternating}")
        if entry.adequate is not None and entry.adequate != adequate.adequate:
            problems.append(f"adequate expected {entry.adequate}")
        return not problems, "; ".join(problems)

    checks.append(_outcome("expected_flags", expected_flags))

    def surface_ribbon() -> tuple[bool, str]:
        surface = turaev_surface_map(d).genus
        ribbon = ribbon_genus(ribbon_from_all_A(d))
        return surface == ribbon == genus, f"surface {surface}, ribbon {ribbon}, formula {genus}"

    checks.append(_outcome("surface_ribbon", surface_ribbon))

    def sweep_oracle() -> tuple[bool, str]:
        return bracket_sweep(d) == bracket_bruteforce(d, cap=options.state_cap), ""

    checks.append(_outcome("sweep_oracle", sweep_oracle))

    def thistlethwaite() -> tuple[bool, str]:
        report = check_thistlethwaite(d)
        return report.matches, f"sign {report.sign}, shift {report.shift}" if report.matches else ""

    checks.append(_outcome("thistlethwaite", thistlethwaite))
    checks.append(_outcome("br_specialization", lambda: (check_br_specialization(d, options.state_cap).matches, "")))

    if genus == 1 and is_prime(d):
        checks.append(_outcome("surgery", lambda: _surgery_check(d)))
    else:
        checks.append(_skip("surgery", "applies to prime genus-one diagrams"))

    width = None
    if not options.khovanov:
        checks.append(_skip("width_bound", "khovanov disabled"))
        checks.append(_skip("euler_characteristic", "khovanov disabled"))
    elif c > options.khovanov_cap:
        checks.append(_skip("width_bound", f"{c} crossings exceed the batch khovanov cap"))
        checks.append(_skip("euler_characteristic", f"{c} crossings exceed the batch khovanov cap"))
    else:
        table = homology(cube_complex(d, options.field))
        report = check_width_bound(d, table)
        width = report.width
        checks.append(
            CheckOutcome(
                name="width_bound",
                status="pass" if report.holds else "fail",
                reason=f"w {report.width}, g_T {report.genus}, adequate {report.adequate}",
            )
        )
        checks.append(CheckOutcome(name="euler_characteristic", status="pass" if check_euler(d, table) else "fail"))

    for check in checks:
        if check.status == "fail":
            logger.warning("%s: check %s failed: %s", entry.name, check.name, check.reason)
    return EntryReport(
        name=entry.name,
        code=entry.code,
        crossings=c,
        components=d.component_count,
        sA=s_a,
        sB=s_b,
        genus=genus,
        alternating=alternating,
        adequacy=AdequacySummary(**adequate.as_dict()),
        jones_q=str(v),
        span=SpanSummary(**span.to_json()),
        width=width,
        checks=checks,
        seconds=round(time.perf_counter() - started, 4) if options.timings else None,
    )


def run_invariants(
    entries: list[CatalogEntry],
    options: RunOptions | None = None,
    diagnostics: list[Diagnostic] | None = None,
) -> RunReport:
    """Evaluate every entry; results keep entry order whatever the job count."""
    options = options or RunOptions()
    logger.info("Running %d entries with %d job(s)", len(entries), options.jobs)
    if options.jobs > 1 and len(entries) > 1:
        with ProcessPoolExecutor(max_workers=options.jobs) as pool:
            reports = list(pool.map(evaluate_entry, entries, repeat(options), chunksize=4))
    else:
        reports = [evaluate_entry(entry, options) for entry in entries]
    summary: Counter[str] = Counter({"pass": 0, "fail": 0, "skipped": 0})
    for report in reports:
        summary.update(check.status for check in report.checks)
    return RunReport(
        options=options,
        entries=reports,
        diagnostics=[DiagnosticOut(**vars(dg)) for dg in diagnostics or []],
        summary=dict(sorted(summary.items())),
    )
