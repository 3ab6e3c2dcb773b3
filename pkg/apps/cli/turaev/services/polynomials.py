"""Kauffman bracket, Jones polynomial, span report and the Turaev genus certificate.

Conventions:
    <D> = sum over states of A^(a(s) - b(s)) * d^(|s| - 1), d = -A^2 - A^-2
    V(D) = (-A^3)^(-w(D)) <D>, stored in q = t^(1/2) = A^-2
"""
from __future__ import annotations

import logging
from collections import Counter
from dataclasses import asdict, dataclass
from typing import Any

from ..config import settings
from .diagram import LinkDiagram
from .errors import CapExceededError, IdentityCheckError, PreconditionError
from .laurent import LaurentPoly, loop_value
from .states import adequacy, state_circle_counts, turaev_genus_diagram

logger = logging.getLogger(__name__)


def bracket_bruteforce(
    d: LinkDiagram, cap: int | None = None, start: int = 0, stop: int | None = None
) -> LaurentPoly:
    """Full state sum over the state-index range [start, stop).

    Partial ranges add up to the full bracket, so the sum can be split across
    workers.
    """
    c = d.crossing_count
    tally: Counter[tuple[int, int]] = Counter()
    for b, circles in state_circle_counts(d, cap=cap, start=start, stop=stop):
        tally[(c - 2 * b, circles)] += 1
    loop = loop_value()
    powers: dict[int, LaurentPoly] = {}
    total = LaurentPoly.zero()
    for (exponent, circles), count in sorted(tally.items()):
        if circles not in powers:
            powers[circles] = loop ** (circles - 1)
        total = total + powers[circles].shift(exponent) * count
    return total


def bracket(d: LinkDiagram, cap: int | None = None) -> LaurentPoly:
    """Bracket by brute force on small diagrams, by the sweep otherwise."""
    cap = settings.state_cap if cap is None else cap
    if d.crossing_count <= min(settings.bruteforce_crossings, cap):
        return bracket_bruteforce(d, cap=cap)
    from .sweep import bracket_sweep

    return bracket_sweep(d)


def normalize(d: LinkDiagram, value: LaurentPoly) -> LaurentPoly:
    """(-A^3)^(-w) * value, retagged in q = A^-2."""
    w = d.writhe
    framed = value.shift(-3 * w) * (-1 if w % 2 else 1)
    return framed.compress(-2, var="q")


def jones(d: LinkDiagram, value: LaurentPoly | None = None, cap: int | None = None) -> LaurentPoly:
    """Jones polynomial in q = t^(1/2); ``value`` may carry a precomputed bracket."""
    return normalize(d, bracket(d, cap) if value is None else value)


def jones_t(d: LinkDiagram) -> LaurentPoly:
    """Jones polynomial in t; only defined when every q-exponent is even."""
    v = jones(d)
    if any(e % 2 for e, _ in v):
        raise PreconditionError("Jones polynomial has half-integer powers of t; use the q form")
    return v.compress(2, var="t")


@dataclass(frozen=True)
class SpanReport:
    span: int
    crossings: int
    genus: int
    adequate: bool

    @property
    def bound(self) -> int:
        return self.crossings - self.genus

    @property
    def slack(self) -> int:
        return self.bound - self.span

    @property
    def holds(self) -> bool:
        return self.slack >= 0 and (self.slack == 0 or not self.adequate)

    def to_json(self) -> dict[str, Any]:
        data = asdict(self)
        data.update(bound=self.bound, slack=self.slack, holds=self.holds)
        return data


def span_report(d: LinkDiagram, v: LaurentPoly | None = None) -> SpanReport:
    """Compare span V (in t) with c(D) - g_T(D)."""
    v = jones(d) if v is None else v
    report = SpanReport(
        span=v.span() // 2,
        crossings=d.crossing_count,
        genus=turaev_genus_diagram(d),
        adequate=adequacy(d).adequate,
    )
    logger.debug("span report: %s", report)
    return report


@dataclass(frozen=True)
class GenusCertificate:
    """Bounds on the Turaev genus of the link drawn by a diagram."""

    lower: int
    upper: int
    certified: bool
    reason: str

    @property
    def exact(self) -> int | None:
        return self.lower if self.lower == self.upper else None

    def to_json(self) -> dict[str, Any]:
        data = asdict(self)
        data["exact"] = self.exact
        return data


def turaev_genus_certificate(d: LinkDiagram, width: int | None = None) -> GenusCertificate:
    """Exact Turaev genus for adequate diagrams, otherwise an interval.

    Args:
        d: the diagram.
        width: Khovanov delta-width if already known; computed here when the
            diagram is within the homology cap.

    Raises:
        IdentityCheckError: if the width lower bound exceeds the diagram genus.
    """
    genus = turaev_genus_diagram(d)
    if adequacy(d).adequate:
        return GenusCertificate(genus, genus, True, "adequate diagram: g_T(L) = c(D) - span V = g_T(D)")
    if width is None and d.crossing_count <= settings.khovanov_cap:
        from .khovanov import cube_complex, delta_width, homology

        try:
            width = delta_width(homology(cube_complex(d)))
        except CapExceededError:
            width = None
    lower = max(0, width - 2) if width is not None else 0
    if lower > genus:
        raise IdentityCheckError(
            f"width lower bound {lower} exceeds the diagram genus {genus}; Turaev genus bound violated"
        )
    reason = "width bound w_KH - 2 <= g_T" if width is not None else "no lower bound available"
    return GenusCertificate(lower, genus, False, reason)
