"""The all-A ribbon graph and its Tutte and Bollobas-Riordan polynomials.

Darts: edge i (one per crossing) has dart 2i at the {0,3} corner of crossing
i and dart 2i+1 at the {1,2} corner.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Any

import networkx as nx

from ..config import settings
from .diagram import LinkDiagram, is_alternating, mirror
from .errors import CapExceededError, PreconditionError
from .laurent import LaurentPoly, loop_value
from .polynomials import bracket, jones
from .states import turaev_surface_map
from .tutte import GraphPoly, tutte

logger = logging.getLogger(__name__)

BR_VARS = ("X", "Y", "Z")


@dataclass(frozen=True)
class RibbonGraph:
    """Orientable ribbon graph given by the cyclic order of darts at each vertex."""

    rotations: tuple[tuple[int, ...], ...]

    @cached_property
    def edge_count(self) -> int:
        return sum(len(r) for r in self.rotations) // 2

    @property
    def vertex_count(self) -> int:
        return len(self.rotations)

    @cached_property
    def vertex_of(self) -> dict[int, int]:
        return {dart: v for v, rotation in enumerate(self.rotations) for dart in rotation}

    @cached_property
    def _successor(self) -> dict[int, int]:
        succ: dict[int, int] = {}
        for rotation in self.rotations:
            for k, dart in enumerate(rotation):
                succ[dart] = rotation[(k + 1) % len(rotation)]
        return succ

    def next_at_vertex(self, dart: int) -> int:
        return self._successor[dart]

    @staticmethod
    def opposite(dart: int) -> int:
        return dart ^ 1

    def endpoints(self, edge: int) -> tuple[int, int]:
        return self.vertex_of[2 * edge], self.vertex_of[2 * edge + 1]

    def edges(self) -> list[int]:
        return sorted({dart // 2 for dart in self.vertex_of})

    def faces(self, edges: frozenset[int] | None = None) -> list[tuple[int, ...]]:
        """Boundary components of the spanning ribbon subgraph on ``edges``
        (all edges by default); a vertex with no chosen edge is one face."""
        chosen = set(self.edges()) if edges is None else set(edges)
        faces: list[tuple[int, ...]] = []
        seen: set[int] = set()
        for rotation in self.rotations:
            kept = [dart for dart in rotation if dart // 2 in chosen]
            if not kept:
                faces.append(())
        restricted: dict[int, int] = {}
        for rotation in self.rotations:
            kept = [dart for dart in rotation if dart // 2 in chosen]
            for k, dart in enumerate(kept):
                restricted[dart] = kept[(k + 1) % len(kept)]
        for start in sorted(restricted):
            if start in seen:
                continue
            face = []
            dart = start
            while dart not in seen:
                seen.add(dart)
                face.append(dart)
                dart = restricted[self.opposite(dart)]
            faces.append(tuple(face))
        return faces

    def underlying_graph(self) -> nx.MultiGraph:
        g = nx.MultiGraph()
        g.add_nodes_from(range(self.vertex_count))
        for edge in self.edges():
            u, v = self.endpoints(edge)
            g.add_edge(u, v, key=edge)
        return g

    def is_connected(self) -> bool:
        return self.vertex_count > 0 and nx.is_connected(self.underlying_graph())

    def is_planar(self) -> bool:
        return ribbon_genus(self) == 0

    def to_json(self) -> dict[str, Any]:
        return {
            "vertices": self.vertex_count,
            "edges": self.edge_count,
            "rotations": [list(r) for r in self.rotations],
            "endpoints": {str(e): list(self.endpoints(e)) for e in self.edges()},
            "faces": len(self.faces()),
            "genus": ribbon_genus(self),
        }


def ribbon_from_all_A(d: LinkDiagram) -> RibbonGraph:
    """G_A: one vertex per all-A circle, darts in the order the white faces of
    the Turaev surface pass the crossing corners."""
    surface = turaev_surface_map(d)
    rotations: list[tuple[int, ...]] = []
    for face, color in zip(surface.faces, surface.colors):
        if color != "white":
            continue
        darts = []
        for h in face:
            i, j = d.partner(h)
            leave = (j + surface.vertex_signs[i]) % 4
            darts.append(2 * i if {j, leave} == {0, 3} else 2 * i + 1)
        rotations.append(tuple(darts))
    return RibbonGraph(tuple(rotations))


def ribbon_from_all_B(d: LinkDiagram) -> RibbonGraph:
    """G_B, read as G_A of the mirror diagram."""
    return ribbon_from_all_A(mirror(d))


def ribbon_genus(g: RibbonGraph) -> int:
    """(2 - V + E - F) / 2 for a connected ribbon graph."""
    if not g.is_connected():
        raise PreconditionError("ribbon genus needs a connected ribbon graph")
    twice = 2 - g.vertex_count + g.edge_count - len(g.faces())
    return twice // 2


# -- Thistlethwaite -----------------------------------------------------------------


@dataclass(frozen=True)
class ThistlethwaiteReport:
    """jones(d) == sign * q^shift * T_{G_A}(-q^-2, -q^2) when ``matches``."""

    matches: bool
    sign: int
    shift: int
    tutte: GraphPoly
    jones: LaurentPoly


def check_thistlethwaite(d: LinkDiagram) -> ThistlethwaiteReport:
    """Compare the Jones polynomial with the Tutte polynomial of G_A.

    Raises:
        PreconditionError: if d is not reduced alternating.
    """
    if not is_alternating(d):
        raise PreconditionError("Thistlethwaite's identity needs a reduced alternating diagram")
    poly = tutte(ribbon_from_all_A(d).underlying_graph())
    value = poly.substitute(
        {"x": LaurentPoly.monomial(-2, -1, "q"), "y": LaurentPoly.monomial(2, -1, "q")}, var="q"
    )
    v = jones(d)
    factor = v.unit_factor(value)
    if factor is None:
        return ThistlethwaiteReport(False, 0, 0, poly, v)
    return ThistlethwaiteReport(True, factor[0], factor[1], poly, v)


# -- Bollobas-Riordan ------------------------------------------------------------------


def bollobas_riordan(g: RibbonGraph, cap: int | None = None) -> GraphPoly:
    """R(X, Y, Z) = sum over spanning subgraphs H of
    (X - 1)^(k(H) - 1) Y^n(H) Z^(k(H) - f(H) + n(H)),
    with k components, n nullity and f boundary components.
    """
    cap = settings.state_cap if cap is None else cap
    edges = g.edges()
    if len(edges) > cap:
        raise CapExceededError(f"{len(edges)} edges exceed the subgraph-enumeration cap {cap}")
    if not g.is_connected():
        raise PreconditionError("Bollobas-Riordan polynomial needs a connected ribbon graph")
    x_minus_one = GraphPoly.var(BR_VARS, "X") + GraphPoly.one(BR_VARS) * -1
    x_powers = [GraphPoly.one(BR_VARS)]
    counts: dict[tuple[int, int, int], int] = {}
    for size in range(len(edges) + 1):
        for subset in combinations(edges, size):
            chosen = frozenset(subset)
            sub = nx.MultiGraph()
            sub.add_nodes_from(range(g.vertex_count))
            sub.add_edges_from(g.endpoints(e) for e in subset)
            k = nx.number_connected_components(sub)
            n = size - g.vertex_count + k
            f = len(g.faces(chosen))
            key = (k - 1, n, k - f + n)
            counts[key] = counts.get(key, 0) + 1
    total = GraphPoly(BR_VARS)
    for (rank_gap, nullity, z), count in counts.items():
        while len(x_powers) <= rank_gap:
            x_powers.append(x_powers[-1] * x_minus_one)
        monomial = GraphPoly(BR_VARS, {(0, nullity, z): count})
        total = total + x_powers[rank_gap] * monomial
    return total


def bracket_from_ribbon(g: RibbonGraph, br: GraphPoly | None = None) -> LaurentPoly:
    """Kauffman bracket of the diagram whose all-A ribbon graph is g.

    <D> = A^(c - 2V + 2) R(G_A) with X -> 1 + A^2 d and Y^b Z^z -> A^(-2b) d^(b - z).
    """
    br = bollobas_riordan(g) if br is None else br
    loop = loop_value()
    x_value = LaurentPoly.constant(1) + loop.shift(2)
    total = LaurentPoly.zero()
    for (i, b, z), coefficient in br.terms():
        if z > b:
            raise PreconditionError(f"term X^{i} Y^{b} Z^{z} has no bracket specialization")
        total = total + (x_value**i) * (loop ** (b - z)) * LaurentPoly.monomial(-2 * b, coefficient)
    return total.shift(g.edge_count - 2 * g.vertex_count + 2)


@dataclass(frozen=True)
class BRCheck:
    matches: bool
    from_ribbon: LaurentPoly
    bracket: LaurentPoly


def check_br_specialization(d: LinkDiagram, cap: int | None = None) -> BRCheck:
    """Bracket from the Bollobas-Riordan polynomial of G_A against the state sum."""
    g = ribbon_from_all_A(d)
    from_ribbon = bracket_from_ribbon(g, bollobas_riordan(g, cap))
    direct = bracket(d, cap)
    return BRCheck(from_ribbon == direct, from_ribbon, direct)
