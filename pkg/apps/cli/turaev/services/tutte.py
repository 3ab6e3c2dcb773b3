"""Integer multivariate polynomials (sympy) and the Tutte polynomial of a multigraph."""
from __future__ import annotations

import logging
from typing import Any, Mapping

import networkx as nx
import sympy as sp
from sympy import ZZ, Poly

from .laurent import LaurentPoly

logger = logging.getLogger(__name__)

Exponents = tuple[int, ...]


class GraphPoly:
    """Integer polynomial in named variables, e.g. T(x, y) or R(X, Y, Z), as a sympy ``Poly``."""

    __slots__ = ("variables", "_poly")

    def __init__(self, variables: tuple[str, ...], terms: Mapping[Exponents, int] | Poly | None = None):
        self.variables = variables
        gens = sp.symbols(variables)
        if isinstance(terms, Poly):
            self._poly = terms
        else:
            clean = {tuple(k): v for k, v in (terms or {}).items() if v}
            self._poly = Poly.from_dict(clean, *gens, domain=ZZ) if clean else Poly(0, *gens, domain=ZZ)

    @classmethod
    def one(cls, variables: tuple[str, ...]) -> GraphPoly:
        return cls(variables, {(0,) * len(variables): 1})

    @classmethod
    def var(cls, variables: tuple[str, ...], name: str, power: int = 1) -> GraphPoly:
        exps = [0] * len(variables)
        exps[variables.index(name)] = power
        return cls(variables, {tuple(exps): 1})

    def as_expr(self) -> sp.Expr:
        return self._poly.as_expr()

    def terms(self) -> list[tuple[Exponents, int]]:
        return sorted((tuple(m), int(c)) for m, c in self._poly.terms() if c)

    def coefficient(self, *exponents: int) -> int:
        return int(self._poly.as_dict().get(tuple(exponents), 0))

    def __add__(self, other: GraphPoly) -> GraphPoly:
        return GraphPoly(self.variables, self._poly + other._poly)

    def __mul__(self, other: GraphPoly | int) -> GraphPoly:
        if isinstance(other, int):
            return GraphPoly(self.variables, self._poly.mul_ground(other))
        return GraphPoly(self.variables, self._poly * other._poly)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GraphPoly):
            return NotImplemented
        return self.variables == other.variables and self.terms() == other.terms()

    def __hash__(self) -> int:
        return hash((self.variables, tuple(self.terms())))

    def substitute(self, values: Mapping[str, LaurentPoly], var: str = "A") -> LaurentPoly:
        """Evaluate with each variable replaced by a Laurent polynomial."""
        powers: dict[tuple[str, int], LaurentPoly] = {}
        total = LaurentPoly.zero(var)
        for exps, coefficient in self.terms():
            term = LaurentPoly.constant(coefficient, var)
            for name, e in zip(self.variables, exps):
                if e:
                    if (name, e) not in powers:
                        powers[(name, e)] = values[name] ** e
                    term = term * powers[(name, e)]
            total = total + term
        return total

    def evaluate(self, **values: int) -> int:
        return int(self.as_expr().subs({sp.Symbol(name): values[name] for name in self.variables}))

    def to_json(self) -> dict[str, Any]:
        return {
            "variables": list(self.variables),
            "terms": [[*exps, coefficient] for exps, coefficient in self.terms()],
        }

    def __str__(self) -> str:
        terms = self.terms()
        if not terms:
            return "0"
        parts = []
        for exps, coefficient in reversed(terms):
            factors = [n if e == 1 else f"{n}^{e}" for n, e in zip(self.variables, exps) if e]
            body = "*".join(factors)
            if not body:
                parts.append(str(coefficient))
            elif coefficient == 1:
                parts.append(body)
            elif coefficient == -1:
                parts.append(f"-{body}")
            else:
                parts.append(f"{coefficient}*{body}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"GraphPoly({self.variables!r}, {dict(self.terms())!r})"


TUTTE_VARS = ("x", "y")


class _TutteMemo:
    """Memo keyed by cheap invariants; candidates are confirmed by isomorphism."""

    def __init__(self) -> None:
        self.buckets: dict[tuple, list[tuple[nx.MultiGraph, GraphPoly]]] = {}
        self.hits = 0

    @staticmethod
    def key(g: nx.MultiGraph) -> tuple:
        degrees = dict(g.degree())
        pairs = sorted(tuple(sorted((degrees[u], degrees[v]))) for u, v in g.edges())
        return g.number_of_nodes(), tuple(pairs), nx.number_of_selfloops(g)

    def get(self, g: nx.MultiGraph) -> GraphPoly | None:
        for candidate, value in self.buckets.get(self.key(g), []):
            if nx.is_isomorphic(candidate, g):
                self.hits += 1
                return value
        return None

    def put(self, g: nx.MultiGraph, value: GraphPoly) -> None:
        self.buckets.setdefault(self.key(g), []).append((g.copy(), value))


def tutte(g: nx.MultiGraph) -> GraphPoly:
    """Tutte polynomial by deletion-contraction.

    Loops contribute a factor y, bridges a factor x, and every other edge
    splits into T(G - e) + T(G / e).
    """
    memo = _TutteMemo()
    result = _tutte(nx.MultiGraph(g), memo)
    logger.debug("tutte: %d edges, %d memo hits", g.number_of_edges(), memo.hits)
    return result


def _tutte(g: nx.MultiGraph, memo: _TutteMemo) -> GraphPoly:
    if g.number_of_edges() == 0:
        return GraphPoly.one(TUTTE_VARS)
    cached = memo.get(g)
    if cached is not None:
        return cached

    loops = list(nx.selfloop_edges(g, keys=True))
    if loops:
        rest = g.copy()
        rest.remove_edges_from(loops)
        value = GraphPoly.var(TUTTE_VARS, "y", len(loops)) * _tutte(rest, memo)
    elif not nx.is_connected(g):
        value = GraphPoly.one(TUTTE_VARS)
        for part in nx.connected_components(g):
            value = value * _tutte(g.subgraph(part).copy(), memo)
    else:
        u, v, key = next(iter(g.edges(keys=True)))
        deleted = g.copy()
        deleted.remove_edge(u, v, key)
        contracted = nx.contracted_nodes(deleted, u, v, self_loops=True, copy=True)
        if nx.is_connected(deleted):
            value = _tutte(deleted, memo) + _tutte(contracted, memo)
        else:
            value = GraphPoly.var(TUTTE_VARS, "x") * _tutte(contracted, memo)
    memo.put(g, value)
    return value
