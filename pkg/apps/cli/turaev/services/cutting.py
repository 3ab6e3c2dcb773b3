"""Non-alternating edges, cutting arcs, surgery and alternating tangle decompositions."""
from __future__ import annotations

import logging
from collections import defaultdict
from dataclasses import dataclass, field
from itertools import combinations
from typing import Any

import networkx as nx

from .diagram import (
    HalfEdge,
    LinkDiagram,
    edges_alternate,
    from_unoriented,
    is_reduced,
    planar_faces,
)
from .errors import DiagramStructureError, PreconditionError
from .states import A_PAIRS, B_PAIRS, all_A, all_B, resolve, turaev_genus_diagram

logger = logging.getLogger(__name__)


def non_alternating_edges(d: LinkDiagram) -> list[int]:
    """Edges joining two over-passes or two under-passes.

    The list is empty iff the diagram is alternating only for reduced
    diagrams: the kink ``X(1,2,2,1)`` has no such edge, yet
    :func:`diagram.is_alternating` rejects it for its nugatory crossing.
    """
    return [e for e in d.edges if not d.edge_alternates(e)]


def crossing_graph(d: LinkDiagram) -> nx.MultiGraph:
    """Crossings as nodes, one edge (keyed by its label) per diagram edge."""
    g = nx.MultiGraph()
    g.add_nodes_from(range(d.crossing_count))
    for e, (tail, head) in d.edge_pairing.items():
        g.add_edge(tail[0], head[0], key=e)
    return g


def is_prime(d: LinkDiagram) -> bool:
    """No two edges whose removal separates the crossings."""
    g = crossing_graph(d)
    edges = [(u, v, k) for u, v, k in g.edges(keys=True) if u != v]
    for first, second in combinations(edges, 2):
        h = g.copy()
        h.remove_edges_from([first, second])
        if not nx.is_connected(h):
            return False
    return True


def _require_prime(d: LinkDiagram) -> None:
    if not is_prime(d):
        raise PreconditionError("this operation needs a prime diagram (a 2-edge cut separates crossings)")


@dataclass(frozen=True)
class CuttingArc:
    """Two non-alternating edges on the same all-A circle and the same all-B circle.

    ``faces`` lists the faces in which both circles run from one edge to the
    other; surgery splices through them.
    """

    edges: tuple[int, int]
    a_circle: int
    b_circle: int
    faces: tuple[int, ...] = ()

    def to_json(self) -> dict[str, Any]:
        return {
            "edges": list(self.edges),
            "a_circle": self.a_circle,
            "b_circle": self.b_circle,
            "faces": list(self.faces),
        }


def _slot_maps(pairs: tuple[tuple[int, int], ...]) -> tuple[dict[int, int], dict[int, int]]:
    """Partner slot and corner dart for each slot; the face of dart (i, t + 1) fills corner (t, t + 1)."""
    partner: dict[int, int] = {}
    corner: dict[int, int] = {}
    for p, q in pairs:
        partner[p], partner[q] = q, p
        corner[p] = corner[q] = q if (p + 1) % 4 == q else p
    return partner, corner


def face_runs(d: LinkDiagram, pairs: tuple[tuple[int, int], ...]) -> dict[int, set[frozenset[int]]]:
    """Face -> pairs of non-alternating edges joined by a run of one state circle.

    A circle of the all-A (or all-B) state stays inside one face between two
    consecutive non-alternating edges it crosses; that stretch is a run.
    """
    partner, corner = _slot_maps(pairs)
    face_of = {h: k for k, face in enumerate(planar_faces(d)) for h in face}
    runs: dict[int, set[frozenset[int]]] = defaultdict(set)
    seen: set[HalfEdge] = set()
    for start in d.half_edges:
        if start in seen:
            continue
        crossed: list[tuple[int, int]] = []
        h = start
        while True:
            i, s = h
            out = (i, partner[s])
            seen.update((h, out))
            here = face_of[(i, corner[s])]
            h = d.partner(out)
            there = face_of[(h[0], corner[h[1]])]
            if here != there:
                crossed.append((d.label(out), there))
            if h == start:
                break
        for k, (edge, face) in enumerate(crossed):
            following = crossed[(k + 1) % len(crossed)][0]
            if following != edge:
                runs[face].add(frozenset((edge, following)))
    return runs


def cutting_arcs(d: LinkDiagram, require_prime: bool = True) -> list[CuttingArc]:
    """Pairs of non-alternating edges joined inside one face by both an s_A and an s_B circle.

    The arc between the two edge midpoints lies in that face, between the run
    of the s_A circle and the run of the s_B circle.
    """
    if not non_alternating_edges(d):
        return []
    if require_prime:
        _require_prime(d)
    res_a, res_b = resolve(d, all_A(d)), resolve(d, all_B(d))
    runs_a = face_runs(d, A_PAIRS)
    runs_b = face_runs(d, B_PAIRS)
    shared: dict[tuple[int, int], list[int]] = defaultdict(list)
    for face, pairs in runs_a.items():
        for pair in pairs & runs_b.get(face, set()):
            e, f = sorted(pair)
            shared[(e, f)].append(face)
    arcs = []
    for (e, f), faces in sorted(shared.items()):
        tail, _ = d.edge_pairing[e]
        arcs.append(CuttingArc((e, f), res_a.circle_of(tail), res_b.circle_of(tail), tuple(sorted(faces))))
    logger.debug("%d non-alternating edges, %d cutting arcs", len(non_alternating_edges(d)), len(arcs))
    return arcs


@dataclass(frozen=True)
class SurgeryResult:
    """Outcome of surgery along a cutting arc.

    ``degenerate`` is set when the splice disconnects the diagram; the pieces
    are returned instead of a single diagram.
    """

    diagram: LinkDiagram | None
    pieces: tuple[LinkDiagram, ...]
    degenerate: bool
    genus_before: int
    genus_after: int | None
    circles_before: tuple[int, int]
    circles_after: tuple[int, int] | None
    face: int

    def to_json(self) -> dict[str, Any]:
        return {
            "degenerate": self.degenerate,
            "genus_before": self.genus_before,
            "genus_after": self.genus_after,
            "circles_before": list(self.circles_before),
            "circles_after": list(self.circles_after) if self.circles_after else None,
            "face": self.face,
            "pd": self.diagram.pd_string() if self.diagram else None,
            "pieces": [p.pd_string() for p in self.pieces],
        }


def _circles(d: LinkDiagram) -> tuple[int, int]:
    return resolve(d, all_A(d)).circle_count, resolve(d, all_B(d)).circle_count


def _splice(d: LinkDiagram, joins: list[tuple[tuple[int, int], tuple[int, int]]]) -> list[list[int]]:
    """Relabel so each pair of half-edges in ``joins`` shares an edge."""
    quads = [list(c.slots) for c in d.crossings]
    for keep, move in joins:
        quads[move[0]][move[1]] = quads[keep[0]][keep[1]]
    return quads


def _pieces(quads: list[list[int]]) -> list[LinkDiagram]:
    g = nx.Graph()
    g.add_nodes_from(range(len(quads)))
    where: dict[int, list[int]] = defaultdict(list)
    for i, quad in enumerate(quads):
        for lab in quad:
            where[lab].append(i)
    for ends in where.values():
        g.add_edge(ends[0], ends[-1])
    pieces = []
    for part in sorted(nx.connected_components(g), key=min):
        sub = [quads[i] for i in sorted(part)]
        pieces.append(from_unoriented(sub, [True] * len(sub)))
    return pieces


def surgery(d: LinkDiagram, arc: CuttingArc) -> SurgeryResult:
    """Cut both edges of the arc and reconnect them across a shared face.

    The splice is accepted when |s_A| + |s_B| grows by exactly 2 at the same
    crossing count, i.e. the Turaev genus drops by one.

    Raises:
        PreconditionError: alternating diagram, genus 0, an arc that does not
            belong to d, or no splice with the required circle count.
    """
    if edges_alternate(d):
        raise PreconditionError("surgery needs a non-alternating diagram")
    genus = turaev_genus_diagram(d)
    if genus < 1:
        raise PreconditionError("surgery needs Turaev genus at least 1")
    e, f = arc.edges
    if e not in d.edge_pairing or f not in d.edge_pairing or d.edge_alternates(e) or d.edge_alternates(f):
        raise PreconditionError(f"edges {e}, {f} are not non-alternating edges of the diagram")
    before = _circles(d)
    degenerate: SurgeryResult | None = None
    faces = planar_faces(d)
    for index in arc.faces or range(len(faces)):
        face = faces[index]
        e_a = next((h for h in face if d.label(h) == e), None)
        f_a = next((h for h in face if d.label(h) == f), None)
        if e_a is None or f_a is None:
            continue
        e_b, f_b = d.partner(e_a), d.partner(f_a)
        for joins in ([(e_a, f_b), (f_a, e_b)], [(e_a, f_a), (f_b, e_b)]):
            quads = _splice(d, joins)
            try:
                result = from_unoriented(quads, [True] * len(quads))
            except DiagramStructureError as exc:
                if not any(dg.code == "split" for dg in exc.diagnostics):
                    continue
                try:
                    pieces = tuple(_pieces(quads))
                except DiagramStructureError:
                    continue
                degenerate = degenerate or SurgeryResult(
                    None, pieces, True, genus, None, before, None, index
                )
                continue
            after = _circles(result)
            if sum(after) == sum(before) + 2:
                logger.info("surgery on edges %d, %d through face %d", e, f, index)
                return SurgeryResult(
                    result, (result,), False, genus, turaev_genus_diagram(result), before, after, index
                )
    if degenerate is not None:
        logger.warning("surgery on edges %d, %d disconnects the diagram", e, f)
        return degenerate
    raise PreconditionError(f"no splice of edges {e}, {f} lowers the Turaev genus")


# -- tangle decomposition ------------------------------------------------------------


@dataclass
class TangleDecomposition:
    """Alternating tangles left after cutting every non-alternating edge."""

    tangles: list[tuple[int, ...]]
    connectors: list[tuple[int, int, int]]  # (edge, tangle, tangle)
    adjacency: nx.MultiGraph = field(repr=False)

    @property
    def is_cycle(self) -> bool:
        simple = nx.Graph(self.adjacency)
        simple.remove_edges_from(nx.selfloop_edges(simple))
        n = simple.number_of_nodes()
        if n < 2:
            return False
        if n == 2:
            return simple.number_of_edges() == 1
        return nx.is_connected(simple) and all(deg == 2 for _, deg in simple.degree())

    def fragment(self, d: LinkDiagram, tangle: int) -> str:
        return " ".join(str(d.crossings[i]) for i in self.tangles[tangle])

    def to_json(self, d: LinkDiagram) -> dict[str, Any]:
        return {
            "tangles": [list(t) for t in self.tangles],
            "fragments": [self.fragment(d, k) for k in range(len(self.tangles))],
            "connectors": [list(c) for c in self.connectors],
            "is_cycle": self.is_cycle,
        }


def alternating_tangle_decomposition(d: LinkDiagram, require_prime: bool = True) -> TangleDecomposition:
    if require_prime:
        _require_prime(d)
    cut = set(non_alternating_edges(d))
    g = nx.Graph()
    g.add_nodes_from(range(d.crossing_count))
    for e, (tail, head) in d.edge_pairing.items():
        if e not in cut:
            g.add_edge(tail[0], head[0])
    tangles = [tuple(sorted(part)) for part in sorted(nx.connected_components(g), key=min)]
    owner = {i: k for k, part in enumerate(tangles) for i in part}
    adjacency = nx.MultiGraph()
    adjacency.add_nodes_from(range(len(tangles)))
    connectors = []
    for e in sorted(cut):
        tail, head = d.edge_pairing[e]
        u, v = owner[tail[0]], owner[head[0]]
        connectors.append((e, u, v))
        adjacency.add_edge(u, v, key=e)
    return TangleDecomposition(tangles, connectors, adjacency)


@dataclass(frozen=True)
class CycleDescription:
    """Cyclic order of alternating 2-tangles in a genus-one diagram."""

    order: tuple[int, ...]
    ok: bool
    flagged: bool
    problems: tuple[str, ...] = ()

    def to_json(self) -> dict[str, Any]:
        return {
            "order": list(self.order),
            "length": len(self.order),
            "ok": self.ok,
            "flagged": self.flagged,
            "problems": list(self.problems),
        }


def genus_one_structure(d: LinkDiagram) -> CycleDescription:
    """Check that a genus-one diagram is a cycle of alternating 2-tangles.

    Raises:
        PreconditionError: if g_T(d) != 1 or d is not prime and reduced.
    """
    genus = turaev_genus_diagram(d)
    if genus != 1:
        raise PreconditionError(f"cycle structure applies to Turaev genus 1, got {genus}")
    if not is_reduced(d):
        raise PreconditionError("cycle structure needs a reduced diagram")
    decomposition = alternating_tangle_decomposition(d)
    adjacency = decomposition.adjacency
    problems: list[str] = []
    for k in adjacency.nodes:
        ends = sum(2 if u == v else 1 for u, v in adjacency.edges(k))
        if ends != 4:
            problems.append(f"tangle {k} has {ends} connector ends, expected 4")
    n = adjacency.number_of_nodes()
    if n == 1:
        return CycleDescription((0,), False, True, tuple(problems) or ("single tangle",))
    for u, v in {tuple(sorted(p)) for p in adjacency.edges()}:
        multiplicity = adjacency.number_of_edges(u, v)
        expected = 4 if n == 2 else 2
        if u != v and multiplicity != expected:
            problems.append(f"tangles {u} and {v} share {multiplicity} strands, expected {expected}")
    if not decomposition.is_cycle:
        problems.append("tangle adjacency is not a single cycle")
        return CycleDescription(tuple(range(n)), False, False, tuple(problems))
    order = [0]
    simple = nx.Graph(adjacency)
    while len(order) < n:
        step = next(v for v in sorted(simple.neighbors(order[-1])) if v not in order)
        order.append(step)
    return CycleDescription(tuple(order), not problems, False, tuple(problems))
