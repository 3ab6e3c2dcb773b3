"""Exact rank of sparse integer matrices over the rationals and over F2.

A matrix is a list of rows, each row a ``{column: value}`` mapping; ranks are
computed by sympy's ``DomainMatrix`` in sparse format.
"""
from __future__ import annotations

from typing import Iterable, Literal, Mapping

from sympy import GF, QQ
from sympy.polys.matrices import DomainMatrix

Field = Literal["q", "f2"]
SparseRow = Mapping[int, int]

DOMAINS = {"q": QQ, "f2": GF(2)}


def domain_matrix(rows: Iterable[SparseRow], field: Field = "q") -> DomainMatrix:
    """Sparse ``DomainMatrix`` over the field; zero entries (mod 2 for F2) are dropped."""
    try:
        domain = DOMAINS[field]
    except KeyError:
        raise ValueError(f"unknown field {field!r}; expected 'q' or 'f2'") from None
    rows = list(rows)
    ncols = max((k for row in rows for k in row), default=-1) + 1
    entries: dict[int, dict] = {}
    for i, row in enumerate(rows):
        converted = {k: domain(v) for k, v in row.items()}
        converted = {k: v for k, v in converted.items() if v}
        if converted:
            entries[i] = converted
    return DomainMatrix(entries, (len(rows), ncols), domain)


def rank(rows: Iterable[SparseRow], field: Field = "q") -> int:
    m = domain_matrix(rows, field)
    rows_count, cols_count = m.shape
    if not rows_count or not cols_count:
        return 0
    return m.rank()


def rank_rational(rows: Iterable[SparseRow]) -> int:
    return rank(rows, "q")


def rank_f2(rows: Iterable[SparseRow]) -> int:
    return rank(rows, "f2")
