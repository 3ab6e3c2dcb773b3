"""Diagram builders: braid closures, Conway rational and Montesinos codes, torus links,
and medial diagrams of checkerboard graphs.

The grid builders lay crossings out on compass points and join ports
geometrically; the graph builder reads corners off a planar embedding. Both
hand rotational port lists to :func:`diagram.from_unoriented`, so the results
are planar by construction.
"""
from __future__ import annotations

import logging
import re
from dataclasses import dataclass, field

import networkx as nx

from .diagram import LinkDiagram, connected_sum, from_unoriented, parse_gauss, parse_pd
from .errors import PDSyntaxError

logger = logging.getLogger(__name__)

Port = tuple[int, str]

# rotational order of the compass ports, starting at the incoming under-strand
_SLASH = ("SE", "SW", "NW", "NE")  # over-strand runs SW-NE
_BACKSLASH = ("SW", "NW", "NE", "SE")  # over-strand runs NW-SE


@dataclass
class _Layout:
    """Crossings with compass ports and the arcs joining them."""

    kinds: list[tuple[str, ...]] = field(default_factory=list)
    joins: list[tuple[Port, Port]] = field(default_factory=list)

    def crossing(self, positive: bool) -> int:
        self.kinds.append(_SLASH if positive else _BACKSLASH)
        return len(self.kinds) - 1

    def join(self, a: Port, b: Port) -> None:
        self.joins.append((a, b))

    def diagram(self) -> LinkDiagram:
        labels: dict[Port, int] = {}
        for number, (a, b) in enumerate(self.joins, start=1):
            if a in labels or b in labels:
                raise PDSyntaxError(f"port joined twice while building: {a} / {b}")
            labels[a] = labels[b] = number
        ports = []
        for index, kind in enumerate(self.kinds):
            try:
                ports.append([labels[(index, compass)] for compass in kind])
            except KeyError as exc:
                raise PDSyntaxError(f"crossing {index} has an unjoined port {exc}") from exc
        return from_unoriented(ports, [True] * len(ports))


# -- braids ----------------------------------------------------------------------


def braid_closure(word: list[int], strands: int | None = None) -> LinkDiagram:
    """Closure of a braid word; generator ``k`` crosses strands k and k+1.

    Positive generators give positive crossings with all strands running
    upwards.
    """
    if not word or any(g == 0 for g in word):
        raise PDSyntaxError("braid word must be a non-empty list of nonzero generators")
    strands = strands or max(abs(g) for g in word) + 1
    if max(abs(g) for g in word) >= strands:
        raise PDSyntaxError(f"generator out of range for {strands} strands")
    layout = _Layout()
    bottom: list[Port | None] = [None] * strands
    top: list[Port | None] = [None] * strands
    for g in word:
        left = abs(g) - 1
        x = layout.crossing(positive=g > 0)
        for position, lower, upper in ((left, "SW", "NW"), (left + 1, "SE", "NE")):
            if top[position] is None:
                bottom[position] = (x, lower)
            else:
                layout.join(top[position], (x, lower))  # type: ignore[arg-type]
            top[position] = (x, upper)
    for position in range(strands):
        if top[position] is None:
            raise PDSyntaxError(f"strand {position + 1} takes part in no crossing (split closure)")
        layout.join(top[position], bottom[position])  # type: ignore[arg-type]
    return layout.diagram()


def torus_link(p: int, q: int) -> LinkDiagram:
    """T(p, q) as the closure of (s_1 ... s_{p-1})^q; negative q gives the mirror."""
    if p < 2 or q == 0:
        raise PDSyntaxError("torus link needs p >= 2 and q != 0")
    sign = 1 if q > 0 else -1
    return braid_closure([sign * k for k in range(1, p)] * abs(q), strands=p)


# -- Conway codes -----------------------------------------------------------------


class _Tangle:
    """A four-ended tangle grown by twisting; ends keep their compass names."""

    def __init__(self, layout: _Layout, positive: bool):
        self.layout = layout
        x = layout.crossing(positive)
        self.ends: dict[str, Port] = {c: (x, c) for c in ("NW", "NE", "SW", "SE")}

    def twist_horizontal(self, positive: bool) -> None:
        x = self.layout.crossing(positive)
        self.layout.join(self.ends["NE"], (x, "NW"))
        self.layout.join(self.ends["SE"], (x, "SW"))
        self.ends["NE"], self.ends["SE"] = (x, "NE"), (x, "SE")

    def twist_vertical(self, positive: bool) -> None:
        x = self.layout.crossing(positive)
        self.layout.join(self.ends["SW"], (x, "NW"))
        self.layout.join(self.ends["SE"], (x, "NE"))
        self.ends["SW"], self.ends["SE"] = (x, "SW"), (x, "SE")

    def add(self, other: _Tangle) -> None:
        """Tangle sum: place ``other`` to the right."""
        self.layout.join(self.ends["NE"], other.ends["NW"])
        self.layout.join(self.ends["SE"], other.ends["SW"])
        self.ends["NE"], self.ends["SE"] = other.ends["NE"], other.ends["SE"]

    def close_numerator(self) -> LinkDiagram:
        self.layout.join(self.ends["NW"], self.ends["NE"])
        self.layout.join(self.ends["SW"], self.ends["SE"])
        return self.layout.diagram()


def _twist_counts(token: str) -> tuple[list[int], bool]:
    token = token.strip()
    positive = not token.startswith("-")
    body = token.lstrip("+-").strip()
    if not body:
        raise PDSyntaxError(f"empty Conway tangle in {token!r}")
    parts = body.split() if " " in body else list(body)
    try:
        counts = [int(p) for p in parts]
    except ValueError as exc:
        raise PDSyntaxError(f"Conway tangle {token!r} must consist of digits") from exc
    if any(c <= 0 for c in counts):
        raise PDSyntaxError(f"Conway tangle entries must be positive in {token!r}")
    return counts, positive


def _rational(layout: _Layout, counts: list[int], positive: bool, last_vertical: bool) -> _Tangle:
    """Twist a1, a2, ... in alternating directions; the final run is horizontal
    unless ``last_vertical``."""
    n = len(counts)
    tangle: _Tangle | None = None
    for k, count in enumerate(counts):
        vertical = (n - 1 - k) % 2 == (0 if last_vertical else 1)
        for _ in range(count):
            if tangle is None:
                tangle = _Tangle(layout, positive)
            elif vertical:
                tangle.twist_vertical(positive)
            else:
                tangle.twist_horizontal(positive)
    assert tangle is not None
    return tangle


def conway_diagram(code: str) -> LinkDiagram:
    """Diagram for a rational code (``"2112"``) or a Montesinos sum (``"3,21,-2"``).

    Rational codes are closed by the numerator closure with their last twist
    run horizontal. In a comma-separated sum each rational tangle ends with a
    vertical run; a leading ``-`` mirrors that tangle's crossings.
    """
    code = code.strip()
    if not code:
        raise PDSyntaxError("empty Conway code")
    layout = _Layout()
    if "," not in code:
        counts, positive = _twist_counts(code)
        return _rational(layout, counts, positive, last_vertical=False).close_numerator()
    tangles = [_rational(layout, *_twist_counts(token), last_vertical=True) for token in code.split(",")]
    total = tangles[0]
    for other in tangles[1:]:
        total.add(other)
    return total.close_numerator()


# -- checkerboard graphs ------------------------------------------------------------

_TAIT_EDGE = re.compile(r"^([+-]?)(\d+)-(\d+)(?:\*(\d+))?$")


@dataclass(frozen=True)
class TaitEdge:
    """``copies`` parallel edges between u and v; sign -1 flips their crossings."""

    u: int
    v: int
    copies: int = 1
    sign: int = 1


def parse_tait_edges(text: str) -> list[TaitEdge]:
    """Parse ``"1-2 2-3*2 -3-1"``: ``*k`` asks for k parallel copies, a leading ``-`` for negative edges."""
    edges: list[TaitEdge] = []
    for token in text.replace(",", " ").split():
        match = _TAIT_EDGE.match(token)
        if match is None:
            raise PDSyntaxError(f"graph edge must look like 'u-v' or 'u-v*k': {token!r}")
        sign, u, v, copies = match.groups()
        edges.append(TaitEdge(int(u), int(v), int(copies or 1), -1 if sign == "-" else 1))
    return edges


def tait_diagram(edges: list[TaitEdge]) -> LinkDiagram:
    """Medial diagram of a plane graph: one crossing per edge.

    Strands run through the corners of the embedding. With every sign
    positive the diagram is alternating and ``edges`` is its checkerboard
    graph; a negative edge swaps over and under at its crossings. networkx
    finds the embedding, so subdivisions of 3-connected graphs give a diagram
    that is unique up to mirror image.

    Raises:
        PDSyntaxError: on loops, repeated edges, zero copies, or a graph that
            is disconnected or not planar.
    """
    if not edges:
        raise PDSyntaxError("checkerboard graph needs at least one edge")
    graph = nx.Graph()
    crossings: dict[tuple[int, int], list[int]] = {}
    ends: list[tuple[int, int]] = []
    signs: list[int] = []
    for edge in edges:
        if edge.u == edge.v:
            raise PDSyntaxError(f"loop at vertex {edge.u}; the diagram would not be reduced")
        if edge.copies < 1:
            raise PDSyntaxError(f"edge {edge.u}-{edge.v} needs at least one copy")
        if graph.has_edge(edge.u, edge.v):
            raise PDSyntaxError(f"edge {edge.u}-{edge.v} listed twice; use '*k' for parallel copies")
        graph.add_edge(edge.u, edge.v)
        numbers = list(range(len(ends), len(ends) + edge.copies))
        crossings[(edge.u, edge.v)] = numbers
        crossings[(edge.v, edge.u)] = numbers[::-1]
        ends.extend([(edge.u, edge.v)] * edge.copies)
        signs.extend([edge.sign] * edge.copies)
    if not nx.is_connected(graph):
        raise PDSyntaxError("checkerboard graph must be connected")
    planar, embedding = nx.check_planarity(graph)
    if not planar:
        raise PDSyntaxError("checkerboard graph is not planar")

    rotation = {w: [x for n in embedding.neighbors_cw_order(w) for x in crossings[(w, n)]] for w in graph}
    position = {(w, x): k for w, around in rotation.items() for k, x in enumerate(around)}
    corner_label: dict[tuple[int, int], int] = {}
    for w, around in rotation.items():
        for k in range(len(around)):
            corner_label[(w, k)] = len(corner_label) + 1

    def corner(w: int, k: int) -> int:
        return corner_label[(w, k % len(rotation[w]))]

    ports: list[list[int]] = []
    for x, (u, v) in enumerate(ends):
        pu, pv = position[(u, x)], position[(v, x)]
        ports.append([corner(v, pv - 1), corner(u, pu), corner(u, pu - 1), corner(v, pv)])
    logger.debug("checkerboard graph: %d vertices, %d crossings", graph.number_of_nodes(), len(ports))
    return from_unoriented(ports, [sign < 0 for sign in signs])


# -- dispatch ---------------------------------------------------------------------


def build_from_code(code: str) -> LinkDiagram:
    """Build a diagram from catalog notation.

    Accepted forms: plain PD text, ``conway:<code>``, ``braid:<g1,g2,...>``,
    ``torus:<p>,<q>``, ``gauss:<word> | <signs>``, ``tait:<u-v edges>``, and any
    of these joined by ``" # "`` for a connected sum.
    """
    pieces = [p.strip() for p in code.split(" # ")]
    if len(pieces) > 1:
        result = build_from_code(pieces[0])
        for piece in pieces[1:]:
            result = connected_sum(result, 1, build_from_code(piece), 1)
        return result
    prefix, _, rest = code.partition(":")
    prefix = prefix.strip().lower()
    if prefix == "conway":
        return conway_diagram(rest)
    if prefix == "braid":
        try:
            word = [int(tok) for tok in rest.replace(",", " ").split()]
        except ValueError as exc:
            raise PDSyntaxError(f"braid word must be integers: {rest!r}") from exc
        return braid_closure(word)
    if prefix == "torus":
        try:
            p, q = (int(tok) for tok in rest.split(","))
        except ValueError as exc:
            raise PDSyntaxError(f"torus code must be 'p,q': {rest!r}") from exc
        return torus_link(p, q)
    if prefix == "gauss":
        return parse_gauss(rest)
    if prefix == "tait":
        return tait_diagram(parse_tait_edges(rest))
    if prefix == "pd":
        return parse_pd(rest)
    return parse_pd(code)
