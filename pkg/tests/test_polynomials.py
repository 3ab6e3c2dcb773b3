"""Tests for the Kauffman bracket, Jones polynomial and span bound."""
import random
import time

import pytest
from hypothesis import HealthCheck, assume, given, settings as hypothesis_settings
from hypothesis import strategies as st

from turaev.config import settings
from turaev.services.builders import build_from_code
from turaev.services.diagram import connected_sum, mirror, reidemeister_variant
from turaev.services.errors import CapExceededError, IdentityCheckError, PreconditionError
from turaev.services.laurent import LaurentPoly
from turaev.services.polynomials import (
    bracket,
    bracket_bruteforce,
    jones,
    jones_t,
    span_report,
    turaev_genus_certificate,
)
from turaev.services.states import turaev_genus_diagram
from turaev.services.sweep import bracket_sweep, sweep_order

TREFOIL_BRACKET = LaurentPoly({-7: 1, -3: -1, 5: -1})
TREFOIL_JONES = LaurentPoly({2: 1, 6: 1, 8: -1}, var="q")


def test_trefoil_bracket(trefoil):
    """Test the calibration value of the bracket."""
    assert bracket_bruteforce(trefoil) == TREFOIL_BRACKET
    assert bracket_sweep(trefoil) == TREFOIL_BRACKET
    assert TREFOIL_BRACKET.span() == 12


def test_trefoil_jones(trefoil):
    """Test the Jones polynomial of the trefoil in q and in t."""
    assert jones(trefoil) == TREFOIL_JONES
    assert jones_t(trefoil) == LaurentPoly({1: 1, 3: 1, 4: -1}, var="t")


def test_kink_is_unknot(kink):
    """Test that a kink only contributes a unit to the bracket."""
    assert bracket(kink) == LaurentPoly.monomial(3, -1)
    assert jones(kink) == 1


def test_figure_eight_jones(figure_eight):
    """Test the amphichiral Jones polynomial of the figure-eight."""
    assert jones(figure_eight) == LaurentPoly({-4: 1, -2: -1, 0: 1, 2: -1, 4: 1}, var="q")


def test_mirror_reflects_jones(trefoil, figure_eight):
    """Test that mirroring reflects Jones and that mirroring twice gives the diagram back."""
    for d in (trefoil, figure_eight):
        assert jones(mirror(d)) == jones(d).reflect()
        twice = mirror(mirror(d))
        assert twice.crossings == d.crossings
        assert twice.over_in == d.over_in


def test_partial_state_ranges_add_up(trefoil):
    """Test that split state ranges sum to the whole bracket."""
    parts = bracket_bruteforce(trefoil, stop=5) + bracket_bruteforce(trefoil, start=5)
    assert parts == TREFOIL_BRACKET


def test_jones_t_needs_integer_powers():
    """Test that a two-component link has no Jones polynomial in integer powers of t."""
    with pytest.raises(PreconditionError):
        jones_t(build_from_code("conway:2"))


def test_sweep_order_is_a_permutation(pretzel_8_19):
    """Test that the sweep visits every crossing once."""
    assert sorted(sweep_order(pretzel_8_19)) == list(range(8))


def test_sweep_width_cap(pretzel_8_19):
    """Test that the sweep refuses frontiers wider than its cap."""
    with pytest.raises(CapExceededError):
        bracket_sweep(pretzel_8_19, width_cap=2)


def test_span_report_trefoil(trefoil):
    """Test the span bound with equality on an adequate diagram."""
    report = span_report(trefoil)
    assert (report.span, report.bound, report.slack) == (3, 3, 0)
    assert report.adequate
    assert report.holds


def test_span_report_8_19(pretzel_8_19):
    """Test that 8_19 has span 5 against the bound 8 - 1."""
    v = jones(pretzel_8_19)
    torus = LaurentPoly({6: 1, 10: 1, 16: -1}, var="q")
    assert v in (torus, torus.reflect())
    report = span_report(pretzel_8_19, v)
    assert report.genus == 1
    assert report.span == 5
    assert report.bound == 7
    assert report.slack == 2
    assert not report.adequate
    assert report.holds


def test_alternating_baseline(catalog):
    """Test g_T = 0 and span V = c on every reduced alternating catalog diagram."""
    for entry in catalog:
        if not entry.alternating:
            continue
        report = span_report(entry.diagram)
        assert report.genus == 0, entry.name
        assert report.span == entry.diagram.crossing_count, entry.name


def test_span_bound_on_catalog(catalog):
    """Test span V <= c - g_T on the catalog, with equality when adequate."""
    for entry in catalog:
        report = span_report(entry.diagram)
        assert report.slack >= 0, entry.name
        if report.adequate:
            assert report.slack == 0, entry.name


def test_sweep_matches_bruteforce_on_catalog(catalog):
    """Test the sweep against the state sum on catalog diagrams."""
    for entry in catalog:
        if entry.diagram.crossing_count > settings.bruteforce_crossings + 2:
            continue
        assert bracket_sweep(entry.diagram) == bracket_bruteforce(entry.diagram), entry.name


def test_connected_sum_additivity(catalog):
    """Test genus additivity and multiplicativity of Jones over seeded random pairs."""
    rng = random.Random(settings.random_seed)
    knots = [e for e in catalog if e.diagram.component_count == 1 and e.diagram.crossing_count <= 7]
    for _ in range(50):
        first, second = rng.choice(knots), rng.choice(knots)
        total = connected_sum(first.diagram, 1, second.diagram, 1)
        assert turaev_genus_diagram(total) == turaev_genus_diagram(first.diagram) + turaev_genus_diagram(
            second.diagram
        )
        assert jones(total) == jones(first.diagram) * jones(second.diagram), (first.name, second.name)


def test_certificate_adequate(trefoil):
    """Test that adequate diagrams certify their genus exactly."""
    certificate = turaev_genus_certificate(trefoil)
    assert certificate.certified
    assert certificate.exact == 0


def test_certificate_from_width(pretzel_8_19):
    """Test that the Khovanov width pins the genus of 8_19 to one."""
    certificate = turaev_genus_certificate(pretzel_8_19)
    assert not certificate.certified
    assert (certificate.lower, certificate.upper) == (1, 1)
    assert certificate.exact == 1


def test_certificate_reports_raw_width_bound(pretzel_8_19):
    """Test that a supplied width gives the unclamped lower bound and an impossible one is an error."""
    certificate = turaev_genus_certificate(pretzel_8_19, width=2)
    assert (certificate.lower, certificate.upper) == (0, 1)
    assert certificate.exact is None
    with pytest.raises(IdentityCheckError):
        turaev_genus_certificate(pretzel_8_19, width=6)


@pytest.mark.parametrize("code", ["torus:2,21", "torus:4,7"])
def test_sweep_speed_on_torus_diagrams(code):
    """Test that the sweep handles 20+ crossing torus diagrams in under a second."""
    d = build_from_code(code)
    assert d.crossing_count >= 20
    started = time.perf_counter()
    value = bracket_sweep(d)
    assert time.perf_counter() - started < 1.0
    assert value
    if code == "torus:2,21":
        assert value.span() == 4 * d.crossing_count


@pytest.mark.slow
def test_sweep_matches_bruteforce_on_random_mutations(catalog):
    """Test the sweep against the state sum on 500 seeded Reidemeister mutations of at most 14 crossings."""
    rng = random.Random(settings.random_seed)
    bases = [e.diagram for e in catalog if e.diagram.crossing_count <= 10]
    checked = 0
    while checked < 500:
        d = rng.choice(bases)
        for _ in range(rng.randint(1, 3)):
            move = (rng.choice(["R1+", "R1-", "R2", "R3"]), rng.randint(1, 40), rng.randint(1, 40), rng.random() < 0.5)
            try:
                d = _apply(d, move)
            except PreconditionError:
                continue
        if d.crossing_count > 14:
            continue
        assert bracket_sweep(d) == bracket_bruteforce(d), d.pd_string()
        checked += 1


BASES = [
    "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)",
    "conway:22",
    "conway:32",
    "conway:3,1,-1",
    "conway:2",
    "conway:5",
    "conway:42",
    "conway:2112",
    "braid:1,2,1",
    "torus:2,4",
]
MOVES = st.tuples(st.sampled_from(["R1+", "R1-", "R2", "R3"]), st.integers(1, 40), st.integers(1, 40), st.booleans())


def _apply(d, move):
    name, a, b, over = move
    if name in ("R1+", "R1-"):
        return reidemeister_variant(d, name, (a - 1) % d.edge_count + 1)
    if name == "R2":
        return reidemeister_variant(d, "R2", ((a - 1) % d.edge_count + 1, (b - 1) % d.edge_count + 1), over=over)
    return reidemeister_variant(d, "R3", a % (d.crossing_count + 2))


@hypothesis_settings(max_examples=100, deadline=None, suppress_health_check=[HealthCheck.filter_too_much])
@given(st.sampled_from(BASES), st.lists(MOVES, min_size=1, max_size=3))
def test_reidemeister_invariance(code, moves):
    """Test that Jones survives random Reidemeister moves and the sweep agrees with the state sum."""
    base = build_from_code(code)
    d = base
    applied = 0
    for move in moves:
        try:
            d = _apply(d, move)
            applied += 1
        except PreconditionError:
            continue
    assume(applied)
    assert jones(d) == jones(base)
    if d.crossing_count <= 12:
        assert bracket_sweep(d) == bracket_bruteforce(d)
