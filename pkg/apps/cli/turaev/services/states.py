"""Kauffman states, state circles, Turaev genus, adequacy and the Turaev surface map."""
from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass
from typing import Iterator, Literal

from ..config import settings
from .diagram import HalfEdge, LinkDiagram
from .errors import CapExceededError, InternalError, PreconditionError

logger = logging.getLogger(__name__)

Marker = Literal["A", "B"]

# slots joined by each smoothing
A_PAIRS = ((0, 3), (1, 2))
B_PAIRS = ((0, 1), (2, 3))


class UnionFind:
    """Disjoint sets over 0..n-1 with path compression and union by size."""

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.size = [1] * n
        self.count = n

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        self.count -= 1
        return True


@dataclass(frozen=True)
class State:
    """One smoothing marker per crossing."""

    markers: tuple[Marker, ...]

    @classmethod
    def from_bits(cls, bits: int, crossings: int) -> State:
        """Bit i set means a B-smoothing at crossing i."""
        return cls(tuple("B" if bits >> i & 1 else "A" for i in range(crossings)))

    @property
    def bits(self) -> int:
        return sum(1 << i for i, m in enumerate(self.markers) if m == "B")

    @property
    def a(self) -> int:
        return self.markers.count("A")

    @property
    def b(self) -> int:
        return self.markers.count("B")

    def flip(self, crossing: int) -> State:
        markers = list(self.markers)
        markers[crossing] = "B" if markers[crossing] == "A" else "A"
        return State(tuple(markers))

    def __str__(self) -> str:
        return "".join(self.markers)


@dataclass(frozen=True)
class StateResolution:
    """Traced state circles; ``membership[4*i + s]`` is the circle of half-edge (i, s).

    Circle ids are numbered in order of their smallest half-edge.
    """

    circle_count: int
    membership: tuple[int, ...]

    def circle_of(self, h: HalfEdge) -> int:
        return self.membership[4 * h[0] + h[1]]

    def circles(self) -> list[list[HalfEdge]]:
        grouped: list[list[HalfEdge]] = [[] for _ in range(self.circle_count)]
        for index, circle in enumerate(self.membership):
            grouped[circle].append((index // 4, index % 4))
        return grouped


def _edge_links(d: LinkDiagram) -> list[tuple[int, int]]:
    return [(4 * t[0] + t[1], 4 * h[0] + h[1]) for t, h in d.edge_pairing.values()]


def _trace(d: LinkDiagram, bits: int) -> UnionFind:
    uf = UnionFind(4 * d.crossing_count)
    for a, b in _edge_links(d):
        uf.union(a, b)
    for i in range(d.crossing_count):
        for p, q in B_PAIRS if bits >> i & 1 else A_PAIRS:
            uf.union(4 * i + p, 4 * i + q)
    return uf


def circle_count(d: LinkDiagram, bits: int) -> int:
    """|s| for the state whose B-crossings are the set bits."""
    return _trace(d, bits).count


def resolve(d: LinkDiagram, s: State) -> StateResolution:
    """Trace the circles of state s by union-find over half-edges."""
    if len(s.markers) != d.crossing_count:
        raise PreconditionError(
            f"state has {len(s.markers)} markers but the diagram has {d.crossing_count} crossings"
        )
    return _resolution(_trace(d, s.bits))


def _resolution(uf: UnionFind) -> StateResolution:
    ids: dict[int, int] = {}
    membership = [ids.setdefault(uf.find(index), len(ids)) for index in range(len(uf.parent))]
    return StateResolution(uf.count, tuple(membership))


def all_A(d: LinkDiagram) -> State:
    return State(("A",) * d.crossing_count)


def all_B(d: LinkDiagram) -> State:
    return State(("B",) * d.crossing_count)


def turaev_genus_diagram(d: LinkDiagram) -> int:
    """(c + 2 - |s_A| - |s_B|) / 2."""
    s_a = resolve(d, all_A(d)).circle_count
    s_b = resolve(d, all_B(d)).circle_count
    twice = d.crossing_count + 2 - s_a - s_b
    if twice < 0 or twice % 2:
        raise InternalError(f"genus numerator {twice} is not a non-negative even number")
    logger.debug("c=%d |s_A|=%d |s_B|=%d genus=%d", d.crossing_count, s_a, s_b, twice // 2)
    return twice // 2


@dataclass(frozen=True)
class Adequacy:
    a_adequate: bool
    b_adequate: bool

    @property
    def adequate(self) -> bool:
        return self.a_adequate and self.b_adequate

    @property
    def inadequate(self) -> bool:
        return not self.a_adequate and not self.b_adequate

    def as_dict(self) -> dict[str, bool]:
        return {
            "A_adequate": self.a_adequate,
            "B_adequate": self.b_adequate,
            "adequate": self.adequate,
            "inadequate": self.inadequate,
        }


def adequacy(d: LinkDiagram) -> Adequacy:
    """At every crossing, are the two arcs of the all-A (all-B) state on distinct circles?"""
    res_a = resolve(d, all_A(d))
    res_b = resolve(d, all_B(d))
    a_ok = all(res_a.circle_of((i, 0)) != res_a.circle_of((i, 1)) for i in range(d.crossing_count))
    b_ok = all(res_b.circle_of((i, 0)) != res_b.circle_of((i, 2)) for i in range(d.crossing_count))
    return Adequacy(a_ok, b_ok)


def adequacy_bruteforce(d: LinkDiagram) -> Adequacy:
    """Adequacy from single-marker changes: every change must lose a circle."""
    c = d.crossing_count
    full = (1 << c) - 1
    s_a = circle_count(d, 0)
    s_b = circle_count(d, full)
    a_ok = all(circle_count(d, 1 << i) < s_a for i in range(c))
    b_ok = all(circle_count(d, full ^ (1 << i)) < s_b for i in range(c))
    return Adequacy(a_ok, b_ok)


def enumerate_states(
    d: LinkDiagram,
    cap: int | None = None,
    start: int = 0,
    stop: int | None = None,
) -> Iterator[tuple[State, StateResolution]]:
    """Yield (state, resolution) for state indices in [start, stop).

    The index of a state has bit i set when crossing i is B-smoothed.

    Raises:
        CapExceededError: if c(D) exceeds the cap.
    """
    cap = settings.state_cap if cap is None else cap
    c = d.crossing_count
    if c > cap:
        raise CapExceededError(f"{c} crossings exceed the state-enumeration cap {cap}")
    total = 1 << c
    stop = total if stop is None else min(stop, total)
    for bits in range(start, stop):
        yield State.from_bits(bits, c), _resolution(_trace(d, bits))


def state_circle_counts(
    d: LinkDiagram, cap: int | None = None, start: int = 0, stop: int | None = None
) -> Iterator[tuple[int, int]]:
    """Yield (b(s), |s|) over a state-index range; the fast path of the state sum."""
    cap = settings.state_cap if cap is None else cap
    c = d.crossing_count
    if c > cap:
        raise CapExceededError(f"{c} crossings exceed the state-enumeration cap {cap}")
    stop = (1 << c) if stop is None else min(stop, 1 << c)
    links = _edge_links(d)
    for bits in range(start, stop):
        uf = UnionFind(4 * c)
        for a, b in links:
            uf.union(a, b)
        for i in range(c):
            for p, q in B_PAIRS if bits >> i & 1 else A_PAIRS:
                uf.union(4 * i + p, 4 * i + q)
        yield bin(bits).count("1"), uf.count


# -- the Turaev surface ----------------------------------------------------------


@dataclass(frozen=True)
class TuraevSurfaceMap:
    """Cellulation of the Turaev surface: vertices are crossings, edges are
    diagram edges, faces are state circles.

    ``vertex_signs[i]`` is +1 when the rotation at crossing i agrees with the
    projection plane and -1 when the surface reverses it; signs flip exactly
    across non-alternating edges.
    """

    crossing_count: int
    vertex_signs: tuple[int, ...]
    faces: tuple[tuple[HalfEdge, ...], ...]
    colors: tuple[Literal["white", "black"], ...]
    edge_ends: tuple[tuple[HalfEdge, HalfEdge], ...]

    @property
    def white_faces(self) -> int:
        return self.colors.count("white")

    @property
    def black_faces(self) -> int:
        return self.colors.count("black")

    @property
    def euler_characteristic(self) -> int:
        return self.crossing_count - 2 * self.crossing_count + len(self.faces)

    @property
    def genus(self) -> int:
        return (2 - self.euler_characteristic) // 2

    def is_checkerboard(self) -> bool:
        """Every edge separates a white face from a black face."""
        color_of: dict[HalfEdge, str] = {}
        for face, color in zip(self.faces, self.colors):
            for h in face:
                color_of[h] = color
        if len(color_of) != 4 * self.crossing_count:
            return False
        return all(color_of[tail] != color_of[head] for tail, head in self.edge_ends)


def vertex_signs(d: LinkDiagram) -> tuple[int, ...]:
    """Rotation signs: equal across alternating edges, opposite across the rest."""
    signs: list[int | None] = [None] * d.crossing_count
    signs[0] = 1
    queue = deque([0])
    neighbours: list[list[tuple[int, bool]]] = [[] for _ in range(d.crossing_count)]
    for e, (tail, head) in d.edge_pairing.items():
        flips = not d.edge_alternates(e)
        neighbours[tail[0]].append((head[0], flips))
        neighbours[head[0]].append((tail[0], flips))
    while queue:
        i = queue.popleft()
        for j, flips in neighbours[i]:
            wanted = -signs[i] if flips else signs[i]  # type: ignore[operator]
            if signs[j] is None:
                signs[j] = wanted
                queue.append(j)
            elif signs[j] != wanted:
                raise InternalError(f"inconsistent rotation signs at crossing {j}")
    return tuple(int(s) for s in signs)  # type: ignore[arg-type]


def turaev_surface_map(d: LinkDiagram) -> TuraevSurfaceMap:
    """Trace the faces of the Turaev surface from the signed rotation system.

    A face arriving at slot j of crossing i leaves through slot j + sign(i);
    the corner it uses is an A-corner ({0,3} or {1,2}) for white faces and a
    B-corner ({0,1} or {2,3}) for black ones.
    """
    signs = vertex_signs(d)
    seen: set[HalfEdge] = set()
    faces: list[tuple[HalfEdge, ...]] = []
    colors: list[Literal["white", "black"]] = []
    for start in d.half_edges:
        if start in seen:
            continue
        face: list[HalfEdge] = []
        corner_types: set[str] = set()
        h = start
        while h not in seen:
            seen.add(h)
            face.append(h)
            i, j = d.partner(h)
            nxt = (j + signs[i]) % 4
            corner = {j, nxt}
            corner_types.add("white" if corner in ({0, 3}, {1, 2}) else "black")
            h = (i, nxt)
        if len(corner_types) != 1:
            raise InternalError(f"face through {start} mixes A and B corners")
        faces.append(tuple(face))
        colors.append(corner_types.pop())  # type: ignore[arg-type]
    surface = TuraevSurfaceMap(
        d.crossing_count, signs, tuple(faces), tuple(colors), tuple(d.edge_pairing.values())
    )
    logger.debug(
        "surface: %d white, %d black faces, genus %d",
        surface.white_faces,
        surface.black_faces,
        surface.genus,
    )
    return surface
