"""PD-coded link diagrams: parsing, validation, orientation and constructions.

Slot convention: the four labels of a crossing are listed starting at the
incoming under-strand and going around the crossing in a fixed rotational
direction. The under-strand runs slot 0 -> slot 2; the over-strand joins slots
1 and 3. A crossing is positive iff its over-strand runs slot 1 -> slot 3.
"""
from __future__ import annotations

import logging
import re
from collections import defaultdict
from dataclasses import dataclass, field, replace
from functools import cached_property
from typing import Any, Iterable, Literal, Sequence

import networkx as nx

from ..config import settings
from .errors import DiagramStructureError, PDSyntaxError, PreconditionError

logger = logging.getLogger(__name__)

HalfEdge = tuple[int, int]
Severity = Literal["error", "warning"]
Move = Literal["R1+", "R1-", "R2", "R3"]


@dataclass(frozen=True)
class PDCrossing:
    """Four edge labels starting from the incoming under-strand."""

    slots: tuple[int, int, int, int]

    def __post_init__(self) -> None:
        if len(self.slots) != 4:
            raise PDSyntaxError(f"crossing must have 4 slots, got {len(self.slots)}")
        if any(label <= 0 for label in self.slots):
            raise PDSyntaxError(f"crossing labels must be positive: {self.slots}")

    def __getitem__(self, slot: int) -> int:
        return self.slots[slot % 4]

    def rotated(self, k: int) -> PDCrossing:
        """New crossing whose slot i holds this crossing's slot i + k."""
        return PDCrossing(tuple(self.slots[(i + k) % 4] for i in range(4)))  # type: ignore[arg-type]

    def __str__(self) -> str:
        return "X({})".format(",".join(str(s) for s in self.slots))


@dataclass(frozen=True)
class Diagnostic:
    code: str
    message: str
    location: str = ""
    severity: Severity = "error"


@dataclass
class ValidationReport:
    diagnostics: list[Diagnostic] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not any(d.severity == "error" for d in self.diagnostics)

    def error(self, code: str, message: str, location: str = "") -> None:
        self.diagnostics.append(Diagnostic(code, message, location, "error"))

    def warning(self, code: str, message: str, location: str = "") -> None:
        self.diagnostics.append(Diagnostic(code, message, location, "warning"))

    def raise_if_failed(self) -> None:
        if not self.ok:
            first = next(d for d in self.diagnostics if d.severity == "error")
            raise DiagramStructureError(first.message, diagnostics=self.diagnostics)


@dataclass(frozen=True)
class LinkDiagram:
    """A validated, oriented, connected link diagram with labels 1..2c.

    Build instances with :meth:`from_crossings` (or :func:`parse_pd`); the
    constructor itself performs no checks.
    """

    crossings: tuple[PDCrossing, ...]
    over_in: tuple[int, ...]
    components: tuple[tuple[int, ...], ...]
    original_labels: tuple[tuple[int, int], ...] = ()

    # -- construction ----------------------------------------------------

    @classmethod
    def from_crossings(
        cls,
        raw: Sequence[Sequence[int] | PDCrossing],
        *,
        over_hint: Sequence[int | None] | None = None,
        original: dict[int, int] | None = None,
    ) -> LinkDiagram:
        """Validate, orient and normalize raw crossings.

        Args:
            raw: crossing label quadruples in slot order.
            over_hint: per crossing, the incoming over slot (1 or 3) to use when
                a component only ever passes over and its direction is free.
            original: label map to compose with, so diagnostics keep the labels
                the user typed.

        Raises:
            DiagramStructureError: on any structural violation.
        """
        diagram, report = _build(raw, over_hint, original)
        report.raise_if_failed()
        assert diagram is not None
        return diagram

    # -- basic structure -----------------------------------------------------

    @property
    def crossing_count(self) -> int:
        return len(self.crossings)

    @property
    def edge_count(self) -> int:
        return 2 * len(self.crossings)

    @property
    def edges(self) -> range:
        return range(1, self.edge_count + 1)

    @property
    def half_edges(self) -> list[HalfEdge]:
        return [(i, s) for i in range(self.crossing_count) for s in range(4)]

    def label(self, h: HalfEdge) -> int:
        return self.crossings[h[0]][h[1]]

    @cached_property
    def edge_pairing(self) -> dict[int, tuple[HalfEdge, HalfEdge]]:
        """edge label -> (tail, head); the edge leaves its tail and enters its head."""
        tails: dict[int, HalfEdge] = {}
        heads: dict[int, HalfEdge] = {}
        for i, crossing in enumerate(self.crossings):
            for s in range(4):
                if self.is_incoming((i, s)):
                    heads[crossing[s]] = (i, s)
                else:
                    tails[crossing[s]] = (i, s)
        return {e: (tails[e], heads[e]) for e in sorted(heads)}

    def partner(self, h: HalfEdge) -> HalfEdge:
        """The other end of the edge at half-edge h."""
        tail, head = self.edge_pairing[self.label(h)]
        return head if h == tail else tail

    def is_incoming(self, h: HalfEdge) -> bool:
        i, s = h
        return s == 0 or s == self.over_in[i]

    @staticmethod
    def is_over(h: HalfEdge) -> bool:
        return h[1] % 2 == 1

    @cached_property
    def signs(self) -> tuple[int, ...]:
        return tuple(1 if o == 1 else -1 for o in self.over_in)

    @property
    def writhe(self) -> int:
        return sum(self.signs)

    @property
    def component_count(self) -> int:
        return len(self.components)

    @property
    def positive_count(self) -> int:
        return self.signs.count(1)

    @property
    def negative_count(self) -> int:
        return self.signs.count(-1)

    def component_of(self, edge: int) -> int:
        for index, component in enumerate(self.components):
            if edge in component:
                return index
        raise PreconditionError(f"edge {edge} is not in the diagram")

    def edge_alternates(self, edge: int) -> bool:
        """True iff the edge joins an overpass to an underpass."""
        tail, head = self.edge_pairing[edge]
        return self.is_over(tail) != self.is_over(head)

    def original_label(self, edge: int) -> int:
        return dict(self.original_labels).get(edge, edge)

    def pd_string(self) -> str:
        return " ".join(str(c) for c in self.crossings)

    def __str__(self) -> str:
        return self.pd_string()

    # -- serialization -----------------------------------------------------

    def to_json(self) -> dict[str, Any]:
        return {
            "schema_version": settings.schema_version,
            "crossings": [list(c.slots) for c in self.crossings],
            "over_in": list(self.over_in),
            "signs": list(self.signs),
            "components": [list(c) for c in self.components],
            "original_labels": {str(k): v for k, v in self.original_labels},
        }

    @classmethod
    def from_json(cls, data: dict[str, Any]) -> LinkDiagram:
        version = str(data.get("schema_version", ""))
        if version != settings.schema_version:
            raise DiagramStructureError(f"unsupported schema_version {version!r}")
        original = {int(k): int(v) for k, v in data.get("original_labels", {}).items()}
        return cls.from_crossings(
            data["crossings"], over_hint=data.get("over_in"), original=original or None
        )


# -- building and validation ---------------------------------------------------


def _build(
    raw: Sequence[Sequence[int] | PDCrossing],
    over_hint: Sequence[int | None] | None,
    original: dict[int, int] | None,
) -> tuple[LinkDiagram | None, ValidationReport]:
    report = ValidationReport()
    if not raw:
        report.error("empty", "empty diagram rejected: at least one crossing is required")
        return None, report
    try:
        quads = [c.slots if isinstance(c, PDCrossing) else PDCrossing(tuple(c)).slots for c in raw]
    except (PDSyntaxError, TypeError) as exc:
        report.error("syntax", str(exc))
        return None, report

    positions: dict[int, list[HalfEdge]] = defaultdict(list)
    for i, quad in enumerate(quads):
        for s, lab in enumerate(quad):
            positions[lab].append((i, s))
    for lab, where in sorted(positions.items()):
        if len(where) != 2:
            report.error(
                "label-count",
                f"edge label {_orig(lab, original)} occurs {len(where)} times, expected 2",
                location=f"label {_orig(lab, original)}",
            )
    if not report.ok:
        return None, report

    graph = nx.MultiGraph()
    graph.add_nodes_from(range(len(quads)))
    for (i, _), (j, _) in positions.values():
        graph.add_edge(i, j)
    if not nx.is_connected(graph):
        report.error(
            "split",
            f"split diagram with {nx.number_connected_components(graph)} pieces; connected diagrams only",
        )
        return None, report

    oriented = _orient(quads, positions, over_hint, report, original)
    if oriented is None:
        return None, report
    over_in, walks = oriented

    # relabel 1..2c along components ordered by their smallest label
    walks = [w[w.index(min(w)):] + w[: w.index(min(w))] for w in walks]
    walks.sort(key=min)
    relabel: dict[int, int] = {}
    for walk in walks:
        for lab in walk:
            relabel[lab] = len(relabel) + 1
    crossings = tuple(PDCrossing(tuple(relabel[lab] for lab in quad)) for quad in quads)  # type: ignore[arg-type]
    components = tuple(tuple(relabel[lab] for lab in walk) for walk in walks)
    origin = {new: _orig(old, original) for old, new in relabel.items()}
    diagram = LinkDiagram(crossings, tuple(over_in), components, tuple(sorted(origin.items())))

    faces = planar_faces(diagram)
    v, e, f = diagram.crossing_count, diagram.edge_count, len(faces)
    if v - e + f != 2:
        report.error(
            "sphericity",
            f"rotation system is not spherical: V - E + F = {v - e + f} (V={v}, E={e}, F={f})",
        )
        return None, report
    for crossing in nugatory_crossings(diagram):
        report.warning(
            "nugatory",
            f"crossing {crossing} is nugatory; the diagram is not reduced",
            location=f"crossing {crossing}",
        )
    return diagram, report


def _orig(label: int, original: dict[int, int] | None) -> int:
    return original.get(label, label) if original else label


def _orient(
    quads: list[tuple[int, int, int, int]],
    positions: dict[int, list[HalfEdge]],
    over_hint: Sequence[int | None] | None,
    report: ValidationReport,
    original: dict[int, int] | None,
) -> tuple[list[int], list[list[int]]] | None:
    """Walk every strand; returns per-crossing incoming over slot and label walks."""
    over_in: list[int | None] = [None] * len(quads)
    visited: set[HalfEdge] = set()
    walks: list[list[int]] = []

    def partner(h: HalfEdge) -> HalfEdge:
        a, b = positions[quads[h[0]][h[1]]]
        return b if a == h else a

    def walk(start: HalfEdge) -> list[int] | None:
        labels: list[int] = []
        h = start
        while h not in visited:
            visited.add(h)
            labels.append(quads[h[0]][h[1]])
            i, s = partner(h)
            where = f"crossing {i} slot {s}"
            if s == 2:
                report.error(
                    "orientation",
                    f"strand enters under-outgoing slot 2 via label {_orig(quads[i][s], original)}",
                    location=where,
                )
                return None
            if s in (1, 3):
                if over_in[i] is None:
                    over_in[i] = s
                elif over_in[i] != s:
                    report.error("orientation", "over-strand entered from both ends", location=where)
                    return None
            h = (i, (s + 2) % 4)
        if h != start:
            report.error("traversal", "strand traversal does not close", location=f"crossing {h[0]}")
            return None
        return labels

    starts = [(i, 2) for i in range(len(quads))]
    for i in range(len(quads)):
        hint = over_hint[i] if over_hint and i < len(over_hint) and over_hint[i] in (1, 3) else 1
        starts.append((i, (hint + 2) % 4))
    for i, s in starts:
        if (i, s) in visited:
            continue
        if s != 2 and (over_in[i] is not None or (i, (s + 2) % 4) in visited):
            continue
        labels = walk((i, s))
        if labels is None:
            return None
        walks.append(labels)
    if any(o is None for o in over_in):
        report.error("traversal", "some over-strands were never traversed")
        return None
    logger.debug("oriented %d crossings into %d components", len(quads), len(walks))
    return [int(o) for o in over_in], walks  # type: ignore[arg-type]


_TUPLE = re.compile(r"\s*(?:X\s*_?\s*)?[\(\[\{]([^()\[\]{}]*)[\)\]\}]\s*,?")
_WRAPPER = re.compile(r"^\s*PD\s*[\[\(](.*)[\]\)]\s*$", re.DOTALL)


def parse_pd_crossings(text: str) -> list[tuple[int, int, int, int]]:
    """Tokenize PD text into raw label quadruples (no structural checks)."""
    body = text.strip()
    wrapped = _WRAPPER.match(body)
    if wrapped:
        body = wrapped.group(1)
    quads: list[tuple[int, int, int, int]] = []
    pos = 0
    while pos < len(body):
        if body[pos:].strip() == "":
            break
        match = _TUPLE.match(body, pos)
        if not match:
            raise PDSyntaxError(f"malformed PD code near position {pos}: {body[pos:pos + 20]!r}")
        parts = [p.strip() for p in match.group(1).split(",")]
        if len(parts) != 4:
            raise PDSyntaxError(f"malformed tuple {match.group(0).strip()!r}: expected 4 labels")
        try:
            values = tuple(int(p) for p in parts)
        except ValueError as exc:
            raise PDSyntaxError(f"non-integer label in {match.group(0).strip()!r}") from exc
        if any(v <= 0 for v in values):
            raise PDSyntaxError(f"labels must be positive in {match.group(0).strip()!r}")
        quads.append(values)  # type: ignore[arg-type]
        pos = match.end()
    return quads


def parse_pd(text: str) -> LinkDiagram:
    """Parse PD text such as ``X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)``.

    Raises:
        PDSyntaxError: malformed tuple.
        DiagramStructureError: empty, mis-paired, non-closing, split or
            non-spherical diagram.
    """
    return LinkDiagram.from_crossings(parse_pd_crossings(text))


def parse_gauss(text: str) -> LinkDiagram:
    """Build a knot diagram from a signed Gauss code.

    Format: ``"1 -2 3 -1 2 -3 | + + +"``. Positive entries are over-passes,
    negative entries under-passes; after the bar come the crossing signs for
    crossings 1..c in order.
    """
    if "|" not in text:
        raise PDSyntaxError("Gauss code needs a '|' followed by crossing signs")
    word_text, sign_text = text.split("|", 1)
    try:
        word = [int(tok) for tok in word_text.replace(",", " ").split()]
    except ValueError as exc:
        raise PDSyntaxError(f"non-integer entry in Gauss word {word_text.strip()!r}") from exc
    sign_tokens = sign_text.replace(",", " ").split()
    if any(tok not in ("+", "-", "+1", "-1", "1") for tok in sign_tokens):
        raise PDSyntaxError(f"crossing signs must be + or -: {sign_text.strip()!r}")
    signs = [-1 if tok.startswith("-") else 1 for tok in sign_tokens]
    n = len(signs)
    if not word or any(w == 0 or abs(w) > n for w in word):
        raise PDSyntaxError("Gauss word entries must be nonzero crossing numbers within the sign list")
    for k in range(1, n + 1):
        if word.count(k) != 1 or word.count(-k) != 1:
            raise DiagramStructureError(f"crossing {k} must appear once over and once under")

    total = len(word)
    slots: list[list[int]] = [[0, 0, 0, 0] for _ in range(n)]
    for k, entry in enumerate(word):
        incoming = k if k > 0 else total
        outgoing = k + 1
        crossing = abs(entry) - 1
        if entry < 0:
            slots[crossing][0], slots[crossing][2] = incoming, outgoing
        elif signs[crossing] > 0:
            slots[crossing][1], slots[crossing][3] = incoming, outgoing
        else:
            slots[crossing][3], slots[crossing][1] = incoming, outgoing
    return LinkDiagram.from_crossings(slots)


def from_unoriented(ports: Sequence[Sequence[int]], under_first: Sequence[bool]) -> LinkDiagram:
    """Build a diagram from rotational port lists that carry no orientation.

    Each entry lists four labels in rotational order; ``under_first[i]`` says
    whether positions 0 and 2 hold the under-strand. A component is oriented so
    that it enters its earliest under-pass at position 0 (components that only
    pass over enter their earliest crossing at position 1); every crossing is
    then rotated so its incoming under-strand sits in slot 0.
    """
    quads = [list(p) if under else list(p[1:]) + [p[0]] for p, under in zip(ports, under_first)]
    positions: dict[int, list[HalfEdge]] = defaultdict(list)
    for i, quad in enumerate(quads):
        for s, lab in enumerate(quad):
            positions[lab].append((i, s))
    for lab, where in sorted(positions.items()):
        if len(where) != 2:
            raise DiagramStructureError(f"edge label {lab} occurs {len(where)} times, expected 2")

    def partner(h: HalfEdge) -> HalfEdge:
        a, b = positions[quads[h[0]][h[1]]]
        return b if a == h else a

    incoming: set[HalfEdge] = set()
    seen: set[HalfEdge] = set()
    starts = [(i, 0) for i in range(len(quads))] + [(i, 1) for i in range(len(quads))]
    for start in starts:
        h = start
        while h not in seen:
            out = (h[0], (h[1] + 2) % 4)
            seen.update((h, out))
            incoming.add(h)
            h = partner(out)

    raw: list[list[int]] = []
    hints: list[int] = []
    for i, quad in enumerate(quads):
        turn = 0 if (i, 0) in incoming else 2
        raw.append(quad[turn:] + quad[:turn])
        over_at = 1 if (i, 1) in incoming else 3
        hints.append((over_at - turn) % 4)
    return LinkDiagram.from_crossings(raw, over_hint=hints)


def validate_and_orient(
    d: LinkDiagram | Sequence[Sequence[int]] | str,
) -> tuple[ValidationReport, int, int]:
    """Check all diagram invariants without raising.

    Returns:
        (report, component count, writhe); the counts are 0 when the report
        carries errors.
    """
    if isinstance(d, str):
        try:
            raw: Sequence[Sequence[int]] = parse_pd_crossings(d)
        except PDSyntaxError as exc:
            report = ValidationReport()
            report.error("syntax", str(exc))
            return report, 0, 0
    elif isinstance(d, LinkDiagram):
        raw = [c.slots for c in d.crossings]
    else:
        raw = d
    hint = list(d.over_in) if isinstance(d, LinkDiagram) else None
    diagram, report = _build(raw, hint, None)
    if diagram is None or not report.ok:
        return report, 0, 0
    return report, diagram.component_count, diagram.writhe


# -- faces ---------------------------------------------------------------------


def face_successor(d: LinkDiagram, h: HalfEdge) -> HalfEdge:
    """Follow the edge at h, then turn to the next slot at the far crossing."""
    i, s = d.partner(h)
    return i, (s + 1) % 4


def planar_faces(d: LinkDiagram) -> list[tuple[HalfEdge, ...]]:
    """Faces of the projection, each a cycle of half-edges.

    A face is listed as the half-edges through which its boundary leaves each
    crossing; every half-edge appears in exactly one face.
    """
    seen: set[HalfEdge] = set()
    faces: list[tuple[HalfEdge, ...]] = []
    for start in d.half_edges:
        if start in seen:
            continue
        face: list[HalfEdge] = []
        h = start
        while h not in seen:
            seen.add(h)
            face.append(h)
            h = face_successor(d, h)
        faces.append(tuple(face))
    return faces


def nugatory_crossings(d: LinkDiagram) -> list[int]:
    """Crossings met twice by a single face."""
    flagged: set[int] = set()
    for face in planar_faces(d):
        crossings = [i for i, _ in face]
        flagged.update(i for i in crossings if crossings.count(i) > 1)
    return sorted(flagged)


def is_reduced(d: LinkDiagram) -> bool:
    return not nugatory_crossings(d)


def edges_alternate(d: LinkDiagram) -> bool:
    """True iff every edge joins an over-pass to an under-pass."""
    return all(d.edge_alternates(e) for e in d.edges)


def is_alternating(d: LinkDiagram) -> bool:
    """Reduced-alternating test.

    Every edge must join an over-pass to an under-pass and the diagram must be
    reduced; a kinked diagram such as ``X(1,2,2,1)`` is therefore reported as
    non-alternating.
    """
    return edges_alternate(d) and is_reduced(d)


# -- constructions ---------------------------------------------------------------


def mirror(d: LinkDiagram) -> LinkDiagram:
    """Swap over and under at every crossing, keeping labels and orientation."""
    crossings: list[PDCrossing] = []
    hints: list[int] = []
    for crossing, over in zip(d.crossings, d.over_in):
        # the old incoming over-slot becomes slot 0
        crossings.append(crossing.rotated(over))
        hints.append(4 - over)
    return replace(
        LinkDiagram.from_crossings(crossings, over_hint=hints),
        original_labels=d.original_labels,
    )


def connected_sum(d1: LinkDiagram, e1: int, d2: LinkDiagram, e2: int) -> LinkDiagram:
    """Cut e1 and e2 and splice the four ends, respecting orientation."""
    if e1 not in d1.edge_pairing:
        raise PreconditionError(f"edge {e1} does not exist in the first diagram")
    if e2 not in d2.edge_pairing:
        raise PreconditionError(f"edge {e2} does not exist in the second diagram")
    shift = d1.edge_count
    quads = [list(c.slots) for c in d1.crossings]
    quads += [[lab + shift for lab in c.slots] for c in d2.crossings]
    _, head1 = d1.edge_pairing[e1]
    _, head2 = d2.edge_pairing[e2]
    offset = d1.crossing_count
    quads[head1[0]][head1[1]] = e2 + shift
    quads[head2[0] + offset][head2[1]] = e1
    hints = list(d1.over_in) + list(d2.over_in)
    return LinkDiagram.from_crossings(quads, over_hint=hints)


def _fresh(quads: Iterable[Sequence[int]]) -> int:
    return max(lab for quad in quads for lab in quad) + 1


def reidemeister_variant(
    d: LinkDiagram,
    move: Move,
    site: int | tuple[int, int],
    *,
    over: bool = True,
) -> LinkDiagram:
    """Apply one Reidemeister move.

    Args:
        d: the diagram.
        move: ``"R1+"``/``"R1-"`` add a positive/negative kink on edge ``site``;
            ``"R2"`` pushes edge ``site[0]`` across edge ``site[1]`` through a
            common face (over it when ``over`` is true, under it otherwise);
            ``"R3"`` slides a strand across the triangular face with index
            ``site`` in :func:`planar_faces`.

    Raises:
        PreconditionError: if the site does not admit the move.
    """
    if move in ("R1+", "R1-"):
        return _kink(d, int(site), positive=move == "R1+")  # type: ignore[arg-type]
    if move == "R2":
        if not isinstance(site, tuple) or len(site) != 2:
            raise PreconditionError("R2 needs a pair of edges")
        return _poke(d, site[0], site[1], over)
    if move == "R3":
        return _slide(d, int(site))  # type: ignore[arg-type]
    raise PreconditionError(f"unknown move {move!r}")


def _kink(d: LinkDiagram, edge: int, positive: bool) -> LinkDiagram:
    if edge not in d.edge_pairing:
        raise PreconditionError(f"edge {edge} does not exist")
    quads = [list(c.slots) for c in d.crossings]
    loop, out = _fresh(quads), _fresh(quads) + 1
    _, head = d.edge_pairing[edge]
    quads[head[0]][head[1]] = out
    if positive:
        quads.append([edge, loop, loop, out])
        hint = 1
    else:
        quads.append([loop, loop, out, edge])
        hint = 3
    result = LinkDiagram.from_crossings(quads, over_hint=list(d.over_in) + [hint])
    logger.debug("kink on edge %d: writhe %d -> %d", edge, d.writhe, result.writhe)
    return result


def _face_dart(d: LinkDiagram, face: tuple[HalfEdge, ...], edge: int) -> HalfEdge | None:
    for h in face:
        if d.label(h) == edge:
            return h
    return None


def _poke(d: LinkDiagram, e: int, f: int, e_over: bool) -> LinkDiagram:
    if e == f or e not in d.edge_pairing or f not in d.edge_pairing:
        raise PreconditionError(f"R2 needs two distinct existing edges, got {e} and {f}")
    for face in planar_faces(d):
        e_a, f_a = _face_dart(d, face, e), _face_dart(d, face, f)
        if e_a is not None and f_a is not None:
            break
    else:
        raise PreconditionError(f"edges {e} and {f} share no face")
    e_b, f_b = d.partner(e_a), d.partner(f_a)
    quads = [list(c.slots) for c in d.crossings]
    base = _fresh(quads)
    e1, e2, e3 = e, base, base + 1
    f1, f2, f3 = f, base + 2, base + 3
    quads[e_b[0]][e_b[1]] = e3
    quads[f_b[0]][f_b[1]] = f3

    e_forward = not d.is_incoming(e_a)
    f_forward = not d.is_incoming(f_a)
    # rotational port lists of the two new crossings, e-strand at even positions,
    # with the incoming e and f labels at each
    new_crossings = (
        ([e3, f2, e2, f1], e2 if e_forward else e3, f1 if f_forward else f2),
        ([e1, f3, e2, f2], e1 if e_forward else e2, f2 if f_forward else f3),
    )
    hints = list(d.over_in)
    for ports, e_in, f_in in new_crossings:
        under_in, over_label = (f_in, e_in) if e_over else (e_in, f_in)
        k = ports.index(under_in)
        rotated = ports[k:] + ports[:k]
        quads.append(rotated)
        hints.append(rotated.index(over_label))
    try:
        return LinkDiagram.from_crossings(quads, over_hint=hints)
    except DiagramStructureError as exc:
        raise PreconditionError(f"R2 is not applicable to edges {e} and {f}: {exc}") from exc


def _slide(d: LinkDiagram, face_index: int) -> LinkDiagram:
    faces = planar_faces(d)
    if not 0 <= face_index < len(faces):
        raise PreconditionError(f"face {face_index} does not exist")
    face = faces[face_index]
    if len(face) != 3 or len({i for i, _ in face}) != 3:
        raise PreconditionError(f"face {face_index} is not a triangle with three distinct crossings")

    # strand k runs along triangle edge k from crossing face[k] to crossing face[k+1]
    triangle_ports: list[tuple[HalfEdge, HalfEdge]] = []
    for k, leave in enumerate(face):
        arrive = d.partner(leave)
        triangle_ports.append((leave, arrive))
    admissible = any(d.is_over(leave) == d.is_over(arrive) for leave, arrive in triangle_ports)
    if not admissible:
        raise PreconditionError(f"face {face_index} is an alternating triangle; R3 does not apply")

    def outer(h: HalfEdge) -> HalfEdge:
        return h[0], (h[1] + 2) % 4

    quads = [list(c.slots) for c in d.crossings]
    updates: dict[HalfEdge, int] = {}
    for leave, arrive in triangle_ports:
        edge = d.label(leave)
        updates[leave] = d.label(outer(arrive))
        updates[arrive] = d.label(outer(leave))
        updates[outer(leave)] = edge
        updates[outer(arrive)] = edge
    for (i, s), lab in updates.items():
        quads[i][s] = lab
    try:
        return LinkDiagram.from_crossings(quads, over_hint=list(d.over_in))
    except DiagramStructureError as exc:
        raise PreconditionError(f"R3 is not applicable on face {face_index}: {exc}") from exc
