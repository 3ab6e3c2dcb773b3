"""Tests for ribbon graphs, the Tutte polynomial and the Bollobas-Riordan polynomial."""
import networkx as nx
import pytest
import sympy

from turaev.services.diagram import is_alternating
from turaev.services.errors import CapExceededError, PreconditionError
from turaev.services.ribbon import (
    BR_VARS,
    RibbonGraph,
    bollobas_riordan,
    bracket_from_ribbon,
    check_br_specialization,
    check_thistlethwaite,
    ribbon_from_all_A,
    ribbon_from_all_B,
    ribbon_genus,
)
from turaev.services.polynomials import bracket
from turaev.services.states import turaev_genus_diagram
from turaev.services.tutte import TUTTE_VARS, GraphPoly, tutte

THETA_TUTTE = GraphPoly(TUTTE_VARS, {(1, 0): 1, (0, 1): 1, (0, 2): 1})


def test_trefoil_ribbon_graph(trefoil):
    """Test that G_A of the trefoil is the planar theta graph."""
    g = ribbon_from_all_A(trefoil)
    assert g.vertex_count == 2
    assert g.edge_count == 3
    assert ribbon_genus(g) == 0
    assert g.is_planar()
    assert len(g.faces()) == 3
    assert ribbon_from_all_B(trefoil).vertex_count == 3


def test_ribbon_genus_matches_turaev_genus(catalog):
    """Test that the all-A ribbon graph has the diagram's Turaev genus on every catalog entry."""
    for entry in catalog:
        g = ribbon_from_all_A(entry.diagram)
        assert ribbon_genus(g) == turaev_genus_diagram(entry.diagram), entry.name


def test_ribbon_genus_needs_connected_graph():
    """Test that genus is refused on a disconnected ribbon graph."""
    with pytest.raises(PreconditionError):
        ribbon_genus(RibbonGraph(((0, 1), ())))


def test_tutte_small_graphs():
    """Test the loop, bridge and small multigraph base cases."""
    loop = nx.MultiGraph()
    loop.add_edge(0, 0)
    assert tutte(loop) == GraphPoly.var(TUTTE_VARS, "y")
    bridge = nx.MultiGraph([(0, 1)])
    assert tutte(bridge) == GraphPoly.var(TUTTE_VARS, "x")
    theta = nx.MultiGraph([(0, 1), (0, 1), (0, 1)])
    assert tutte(theta) == THETA_TUTTE


def test_tutte_k4_against_networkx():
    """Test deletion-contraction against the networkx implementation."""
    k4 = nx.complete_graph(4)
    poly = tutte(nx.MultiGraph(k4))
    expected = {(3, 0): 1, (2, 0): 3, (1, 0): 2, (1, 1): 4, (0, 1): 2, (0, 2): 3, (0, 3): 1}
    assert dict(poly.terms()) == expected
    reference = nx.tutte_polynomial(k4)
    x, y = sympy.symbols("x y")
    for a, b in [(1, 1), (2, 1), (2, 3), (-1, 2)]:
        assert poly.evaluate(x=a, y=b) == int(reference.subs({x: a, y: b}))


@pytest.mark.parametrize(
    "edges",
    [
        [(0, 1), (0, 1), (0, 1)],
        [(0, 1), (1, 2), (2, 3), (3, 0)],
        [(0, 1), (1, 2), (2, 0), (0, 3), (3, 1), (1, 2)],
    ],
)
def test_tutte_matches_networkx_expression(edges):
    """Test that the full Tutte polynomial equals the networkx one as a sympy expression."""
    g = nx.MultiGraph(edges)
    assert sympy.expand(tutte(g).as_expr() - nx.tutte_polynomial(g)) == 0


def test_thistlethwaite_trefoil(trefoil):
    """Test the bracket of the trefoil from the Tutte polynomial of its theta graph."""
    report = check_thistlethwaite(trefoil)
    assert report.tutte == THETA_TUTTE
    assert report.matches
    assert (report.sign, report.shift) == (-1, 4)


def test_thistlethwaite_on_alternating_catalog(catalog):
    """Test the Tutte specialization on every alternating catalog diagram."""
    for entry in catalog:
        if is_alternating(entry.diagram):
            assert check_thistlethwaite(entry.diagram).matches, entry.name


def test_thistlethwaite_rejects_nonalternating(pretzel_8_19):
    """Test that the Tutte specialization needs an alternating diagram."""
    with pytest.raises(PreconditionError):
        check_thistlethwaite(pretzel_8_19)


def test_bollobas_riordan_theta(trefoil):
    """Test R for the planar theta graph and its reduction to the Tutte polynomial."""
    g = ribbon_from_all_A(trefoil)
    br = bollobas_riordan(g)
    assert br == GraphPoly(BR_VARS, {(1, 0, 0): 1, (0, 0, 0): 2, (0, 1, 0): 3, (0, 2, 0): 1})
    for a, b in [(2, 3), (-1, 1), (5, 0)]:
        assert br.evaluate(X=a, Y=b, Z=1) == THETA_TUTTE.evaluate(x=a, y=b + 1)


def test_bollobas_riordan_sees_the_torus():
    """Test that two interlaced loops at one vertex give a Z^2 term."""
    bouquet = RibbonGraph(((0, 2, 1, 3),))
    assert ribbon_genus(bouquet) == 1
    br = bollobas_riordan(bouquet)
    assert br == GraphPoly(BR_VARS, {(0, 0, 0): 1, (0, 1, 0): 2, (0, 2, 2): 1})


def test_bollobas_riordan_cap(pretzel_8_19):
    """Test that the ribbon polynomial refuses graphs above the cap."""
    with pytest.raises(CapExceededError):
        bollobas_riordan(ribbon_from_all_A(pretzel_8_19), cap=4)


def test_br_specialization(trefoil, pretzel_8_19):
    """Test the bracket recovered from the ribbon polynomial."""
    assert bracket_from_ribbon(ribbon_from_all_A(trefoil)) == bracket(trefoil)
    check = check_br_specialization(pretzel_8_19)
    assert check.matches
    assert check.from_ribbon == check.bracket


def test_br_specialization_on_catalog(catalog):
    """Test the ribbon-polynomial bracket on every catalog diagram up to nine crossings."""
    for entry in catalog:
        if entry.diagram.crossing_count <= 9:
            assert check_br_specialization(entry.diagram).matches, entry.name
