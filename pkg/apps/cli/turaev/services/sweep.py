"""Kauffman bracket by sweeping crossings into a growing tangle.

The state vector maps each way of pairing up the open ends of the processed
tangle to the bracket contribution of all partial states inducing it. Cost is
exponential in the number of open ends, not in the crossing count.
"""
from __future__ import annotations

import logging
from collections import defaultdict

from ..config import settings
from .diagram import HalfEdge, LinkDiagram
from .errors import CapExceededError, InternalError
from .laurent import LaurentPoly, loop_value
from .states import A_PAIRS, B_PAIRS

logger = logging.getLogger(__name__)

Matching = tuple[tuple[HalfEdge, HalfEdge], ...]


def sweep_order(d: LinkDiagram) -> list[int]:
    """Greedy order: next is the crossing with most edges into the processed set."""
    order = [0]
    done = {0}
    while len(order) < d.crossing_count:
        best, best_links = -1, -1
        for x in range(d.crossing_count):
            if x in done:
                continue
            links = sum(1 for s in range(4) if d.partner((x, s))[0] in done)
            if links > best_links:
                best, best_links = x, links
        order.append(best)
        done.add(best)
    return order


def _close(links: list[tuple[HalfEdge, HalfEdge]], open_ends: set[HalfEdge]) -> tuple[Matching, int]:
    """Pair the open ends joined by paths and count the closed loops."""
    adjacency: dict[HalfEdge, list[tuple[int, HalfEdge]]] = defaultdict(list)
    for index, (u, v) in enumerate(links):
        adjacency[u].append((index, v))
        adjacency[v].append((index, u))
    used: set[int] = set()
    visited: set[HalfEdge] = set()
    pairs: list[tuple[HalfEdge, HalfEdge]] = []
    for start in sorted(open_ends):
        if start in visited:
            continue
        node = start
        visited.add(node)
        while True:
            step = next(((i, v) for i, v in adjacency[node] if i not in used), None)
            if step is None:
                break
            used.add(step[0])
            node = step[1]
            visited.add(node)
        if node == start or node not in open_ends:
            raise InternalError(f"open end {start} does not reach another open end")
        pairs.append((start, node))
    loops = 0
    for node in adjacency:
        if node in visited:
            continue
        loops += 1
        stack = [node]
        while stack:
            current = stack.pop()
            if current in visited:
                continue
            visited.add(current)
            stack.extend(v for _, v in adjacency[current] if v not in visited)
    return tuple(sorted(pairs)), loops


def bracket_sweep(d: LinkDiagram, width_cap: int | None = None) -> LaurentPoly:
    """Kauffman bracket by the sweep; equals the brute-force state sum.

    Raises:
        CapExceededError: if the open ends outnumber the width cap.
    """
    cap = settings.sweep_width_cap if width_cap is None else width_cap
    loop = loop_value()
    smoothings = ((LaurentPoly.monomial(1), A_PAIRS), (LaurentPoly.monomial(-1), B_PAIRS))
    states: dict[Matching, LaurentPoly] = {(): LaurentPoly.constant(1)}
    processed: set[int] = set()
    open_ends: set[HalfEdge] = set()
    widest = 0
    for x in sweep_order(d):
        ports = [(x, s) for s in range(4)]
        processed.add(x)
        glue = sorted(
            {tuple(sorted((h, d.partner(h)))) for h in ports if d.partner(h)[0] in processed}
        )
        new_open = {h for h in open_ends if d.partner(h)[0] != x}
        new_open.update(h for h in ports if d.partner(h)[0] not in processed)
        if len(new_open) > cap:
            raise CapExceededError(f"sweep width {len(new_open)} exceeds the cap {cap}")
        widest = max(widest, len(new_open))
        advanced: dict[Matching, LaurentPoly] = {}
        for matching, value in states.items():
            for monomial, pairs in smoothings:
                links = list(matching) + [((x, p), (x, q)) for p, q in pairs] + glue  # type: ignore[misc]
                key, loops = _close(links, new_open)
                term = value * monomial * loop**loops if loops else value * monomial
                advanced[key] = advanced[key] + term if key in advanced else term
        states = {k: v for k, v in advanced.items() if v}
        open_ends = new_open
    logger.debug("sweep over %d crossings, max width %d", d.crossing_count, widest)
    total = states.get((), LaurentPoly.zero())
    return total.divexact(loop)
