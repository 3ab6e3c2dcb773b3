"""Unreduced Khovanov homology from the cube of resolutions.

Grading conventions:
    * state bit k set means the 1-smoothing (B) at crossing k
    * a generator labels every circle of a state with 1 (degree +1) or x (degree -1)
    * i = r - n_-  and  j = (#1 - #x) + r + n_+ - 2 n_-,  r the number of 1-smoothings
    * the edge changing crossing k carries the sign (-1)^(number of 1-smoothings before k)

With these the unknot sits at (0, +1) and (0, -1), and the graded Euler
characteristic is (q + q^-1) times the Jones polynomial with q -> -q.
"""
from __future__ import annotations

import logging
from collections import defaultdict
from dataclasses import dataclass
from dataclasses import field as dataclass_field
from typing import Any

from ..config import settings
from .diagram import HalfEdge, LinkDiagram
from .errors import CapExceededError, IdentityCheckError, PreconditionError
from .laurent import LaurentPoly
from .linalg import Field, rank
from .polynomials import jones
from .states import State, StateResolution, adequacy, resolve, turaev_genus_diagram

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Generator:
    state: int
    labels: int  # bit t set: circle t carries x
    j: int


@dataclass
class CubeComplex:
    """Khovanov chain complex with generators grouped by homological degree.

    ``differentials[i][n]`` is the image of generator ``generators[i][n]`` as a
    sparse row indexed into ``generators[i + 1]``.
    """

    crossing_count: int
    n_plus: int
    n_minus: int
    field: Field
    generators: dict[int, list[Generator]] = dataclass_field(default_factory=dict)
    differentials: dict[int, list[dict[int, int]]] = dataclass_field(default_factory=dict)

    def degrees(self) -> list[int]:
        return sorted(self.generators)

    def dimension(self, i: int, j: int | None = None) -> int:
        gens = self.generators.get(i, [])
        return len(gens) if j is None else sum(1 for g in gens if g.j == j)

    @property
    def total_dimension(self) -> int:
        return sum(len(g) for g in self.generators.values())


def _signs(bits: int, k: int) -> int:
    return -1 if bin(bits & ((1 << k) - 1)).count("1") % 2 else 1


def _labels_to_circles(labels: int, count: int) -> list[int]:
    return [labels >> t & 1 for t in range(count)]


def _pack(values: dict[int, int]) -> int:
    return sum(1 << t for t, v in values.items() if v)


def _representatives(res: StateResolution) -> dict[int, HalfEdge]:
    """Smallest half-edge of every circle."""
    first: dict[int, HalfEdge] = {}
    for index, circle in enumerate(res.membership):
        first.setdefault(circle, (index // 4, index % 4))
    return first


def _edge_map(
    k: int,
    source: StateResolution,
    representatives: dict[int, HalfEdge],
    target: StateResolution,
    labels: int,
) -> list[tuple[int, int]]:
    """Image of one labelling under the merge or split at crossing k as (labels, coefficient)."""
    base: dict[int, int] = {}
    a, b = source.circle_of((k, 0)), source.circle_of((k, 1))
    values = _labels_to_circles(labels, source.circle_count)
    for circle, h in representatives.items():
        if circle not in (a, b):
            base[target.circle_of(h)] = values[circle]
    if a != b:
        merged = target.circle_of((k, 0))
        x_count = values[a] + values[b]
        if x_count == 2:
            return []
        return [(_pack({**base, merged: x_count}), 1)]
    p, q = target.circle_of((k, 0)), target.circle_of((k, 2))
    if values[a]:
        return [(_pack({**base, p: 1, q: 1}), 1)]
    return [(_pack({**base, p: 0, q: 1}), 1), (_pack({**base, p: 1, q: 0}), 1)]


def cube_complex(d: LinkDiagram, field: Field | None = None, verify: bool = True) -> CubeComplex:
    """Build the Khovanov complex of d.

    Args:
        d: the diagram.
        field: "q" for the rationals or "f2"; defaults to the configured field.
        verify: check d o d = 0 before returning.

    Raises:
        CapExceededError: if c(D) exceeds the homology cap.
        IdentityCheckError: if verification finds d o d != 0.
    """
    field = field or settings.khovanov_field
    c = d.crossing_count
    if c > settings.khovanov_cap:
        raise CapExceededError(f"{c} crossings exceed the Khovanov cap {settings.khovanov_cap}")
    n_plus, n_minus = d.positive_count, d.negative_count
    resolutions = [resolve(d, State.from_bits(bits, c)) for bits in range(1 << c)]
    representatives = [_representatives(res) for res in resolutions]

    cx = CubeComplex(c, n_plus, n_minus, field)
    index: dict[tuple[int, int], int] = {}
    for bits, res in enumerate(resolutions):
        r = bin(bits).count("1")
        i = r - n_minus
        gens = cx.generators.setdefault(i, [])
        m = res.circle_count
        for labels in range(1 << m):
            x_count = bin(labels).count("1")
            j = (m - 2 * x_count) + r + n_plus - 2 * n_minus
            index[(bits, labels)] = len(gens)
            gens.append(Generator(bits, labels, j))

    for i, gens in cx.generators.items():
        rows: list[dict[int, int]] = []
        for g in gens:
            row: dict[int, int] = defaultdict(int)
            for k in range(c):
                if g.state >> k & 1:
                    continue
                target_bits = g.state | (1 << k)
                sign = _signs(g.state, k)
                images = _edge_map(
                    k, resolutions[g.state], representatives[g.state], resolutions[target_bits], g.labels
                )
                for labels, coefficient in images:
                    row[index[(target_bits, labels)]] += sign * coefficient
            rows.append({t: v for t, v in row.items() if v})
        cx.differentials[i] = rows
    logger.debug("cube complex: %d crossings, %d generators", c, cx.total_dimension)
    if verify and not verify_d_squared(cx):
        raise IdentityCheckError("Khovanov differential does not square to zero")
    return cx


def verify_d_squared(cx: CubeComplex) -> bool:
    """True when d_(i+1) o d_i vanishes for every degree i."""
    modulus = 2 if cx.field == "f2" else 0
    for i, rows in cx.differentials.items():
        following = cx.differentials.get(i + 1)
        if following is None:
            continue
        for row in rows:
            composed: dict[int, int] = defaultdict(int)
            for middle, coefficient in row.items():
                for target, value in following[middle].items():
                    composed[target] += coefficient * value
            for value in composed.values():
                if (value % modulus) if modulus else value:
                    return False
    return True


@dataclass
class BettiTable:
    """Dimensions of Khovanov homology per bigrading (i, j) over one field."""

    field: Field
    entries: dict[tuple[int, int], int] = dataclass_field(default_factory=dict)

    def diagonals(self) -> list[int]:
        return sorted({j - 2 * i for (i, j), dim in self.entries.items() if dim})

    @property
    def total_dimension(self) -> int:
        return sum(self.entries.values())

    def to_json(self) -> dict[str, Any]:
        diagonals = self.diagonals()
        return {
            "field": self.field,
            "entries": [[i, j, dim] for (i, j), dim in sorted(self.entries.items())],
            "width": len(diagonals),
            "diagonals": diagonals,
        }


def homology(cx: CubeComplex) -> BettiTable:
    """dim H^(i,j) = dim C^(i,j) - rank d^(i,j) - rank d^(i-1,j)."""
    ranks: dict[tuple[int, int], int] = {}
    for i, rows in cx.differentials.items():
        strips: dict[int, list[dict[int, int]]] = defaultdict(list)
        for g, row in zip(cx.generators[i], rows):
            strips[g.j].append(row)
        for j, strip in strips.items():
            ranks[(i, j)] = rank(strip, cx.field)
    table = BettiTable(cx.field)
    for i, gens in cx.generators.items():
        sizes: dict[int, int] = defaultdict(int)
        for g in gens:
            sizes[g.j] += 1
        for j, size in sizes.items():
            dim = size - ranks.get((i, j), 0) - ranks.get((i - 1, j), 0)
            if dim:
                table.entries[(i, j)] = dim
    logger.debug("homology over %s: %d nonzero groups", cx.field, len(table.entries))
    return table


def delta_width(table: BettiTable) -> int:
    """Number of diagonals j - 2i carrying nonzero homology."""
    if not table.entries:
        raise PreconditionError("delta-width of a zero homology table is undefined")
    return len(table.diagonals())


def euler_characteristic(table: BettiTable) -> LaurentPoly:
    """Sum of (-1)^i dim H^(i,j) q^j."""
    return LaurentPoly(((j, (-1) ** (i % 2) * dim) for (i, j), dim in table.entries.items()), var="q")


def expected_euler(v: LaurentPoly) -> LaurentPoly:
    """(q + q^-1) V(-q): the Euler characteristic predicted by the Jones polynomial."""
    signed = LaurentPoly({e: c * (-1) ** (e % 2) for e, c in v.terms()}, var="q")
    return signed * LaurentPoly({1: 1, -1: 1}, var="q")


def check_euler(d: LinkDiagram, table: BettiTable) -> bool:
    return euler_characteristic(table) == expected_euler(jones(d))


@dataclass(frozen=True)
class WidthReport:
    """w_KH - 2 <= g_T(D), with equality required for adequate diagrams."""

    width: int
    genus: int
    adequate: bool
    field: Field

    @property
    def bound_holds(self) -> bool:
        return self.width - 2 <= self.genus

    @property
    def equality(self) -> bool:
        return self.width - 2 == self.genus

    @property
    def holds(self) -> bool:
        return self.bound_holds and (self.equality or not self.adequate)

    def raise_if_failed(self) -> None:
        if not self.holds:
            raise IdentityCheckError(
                f"width bound failed: w={self.width}, g_T={self.genus}, adequate={self.adequate}"
            )

    def to_json(self) -> dict[str, Any]:
        return {
            "width": self.width,
            "genus": self.genus,
            "adequate": self.adequate,
            "field": self.field,
            "bound_holds": self.bound_holds,
            "equality": self.equality,
            "holds": self.holds,
        }


def check_width_bound(
    d: LinkDiagram, table: BettiTable | None = None, field: Field | None = None
) -> WidthReport:
    table = homology(cube_complex(d, field)) if table is None else table
    return WidthReport(delta_width(table), turaev_genus_diagram(d), adequacy(d).adequate, table.field)
