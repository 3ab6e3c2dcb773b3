"""Tests for non-alternating edges, cutting arcs, surgery and tangle decompositions."""
import pytest

from turaev.services.builders import build_from_code
from turaev.services.cutting import (
    CuttingArc,
    alternating_tangle_decomposition,
    cutting_arcs,
    genus_one_structure,
    is_prime,
    non_alternating_edges,
    surgery,
)
from turaev.services.diagram import is_alternating, planar_faces
from turaev.services.errors import PreconditionError
from turaev.services.states import turaev_genus_diagram


def test_alternating_diagram_has_nothing_to_cut(trefoil):
    """Test that an alternating diagram has no non-alternating edges, arcs or connectors."""
    assert non_alternating_edges(trefoil) == []
    assert cutting_arcs(trefoil) == []
    decomposition = alternating_tangle_decomposition(trefoil)
    assert decomposition.tangles == [(0, 1, 2)]
    assert decomposition.connectors == []


def test_primality(trefoil, pretzel_8_19):
    """Test primality on prime diagrams and on a connected sum."""
    assert is_prime(trefoil)
    assert is_prime(pretzel_8_19)
    assert not is_prime(build_from_code("conway:3 # conway:22"))


def test_non_alternating_edges_8_19(pretzel_8_19):
    """Test that the negative twist region meets the rest in four non-alternating edges."""
    edges = non_alternating_edges(pretzel_8_19)
    assert len(edges) == 4
    assert all(not pretzel_8_19.edge_alternates(e) for e in edges)


def test_cutting_arcs_8_19(pretzel_8_19):
    """Test that cutting arcs pair non-alternating edges through a face both edges border."""
    arcs = cutting_arcs(pretzel_8_19)
    assert arcs
    faces = planar_faces(pretzel_8_19)
    edges = set(non_alternating_edges(pretzel_8_19))
    for arc in arcs:
        assert set(arc.edges) <= edges
        assert arc.edges[0] < arc.edges[1]
        assert arc.faces
        for index in arc.faces:
            labels = {pretzel_8_19.label(h) for h in faces[index]}
            assert set(arc.edges) <= labels


def test_tangle_decomposition_8_19(pretzel_8_19):
    """Test the two alternating tangles of 8_19 and their four connectors."""
    decomposition = alternating_tangle_decomposition(pretzel_8_19)
    assert len(decomposition.tangles) == 2
    assert sorted(len(t) for t in decomposition.tangles) == [2, 6]
    assert len(decomposition.connectors) == 4
    assert decomposition.is_cycle
    payload = decomposition.to_json(pretzel_8_19)
    assert len(payload["fragments"]) == 2


def test_genus_one_structure_8_19(pretzel_8_19):
    """Test the cycle of alternating 2-tangles in a genus-one diagram."""
    structure = genus_one_structure(pretzel_8_19)
    assert structure.ok
    assert not structure.flagged
    assert len(structure.order) == 2


def test_genus_one_structure_preconditions(trefoil):
    """Test that the genus-one structure refuses a genus-zero diagram."""
    with pytest.raises(PreconditionError):
        genus_one_structure(trefoil)


def test_surgery_drops_genus(pretzel_8_19):
    """Test that surgery along each arc of 8_19 lowers the diagram genus to zero."""
    for arc in cutting_arcs(pretzel_8_19):
        result = surgery(pretzel_8_19, arc)
        assert not result.degenerate
        assert result.genus_before == 1
        assert result.genus_after == 0
        assert result.diagram.crossing_count == 8
        assert sum(result.circles_after) == sum(result.circles_before) + 2


def test_surgery_preconditions(trefoil, pretzel_8_19):
    """Test that surgery needs a pair of non-alternating edges."""
    with pytest.raises(PreconditionError):
        surgery(trefoil, CuttingArc((1, 2), 0, 0))
    alternating = [e for e in pretzel_8_19.edges if pretzel_8_19.edge_alternates(e)]
    with pytest.raises(PreconditionError):
        surgery(pretzel_8_19, CuttingArc((alternating[0], alternating[1]), 0, 0))


def test_non_prime_rejected(catalog_by_name):
    """Test that cutting arcs are refused on a connected sum."""
    d = catalog_by_name["P(3,1,-1)#P(3,1,-1)"].diagram
    with pytest.raises(PreconditionError):
        cutting_arcs(d)


@pytest.mark.slow
def test_surgery_on_every_genus_one_catalog_diagram(catalog):
    """Test every cutting arc of every prime genus-one catalog diagram."""
    seen = 0
    for entry in catalog:
        d = entry.diagram
        if turaev_genus_diagram(d) != 1 or not is_prime(d):
            continue
        seen += 1
        assert genus_one_structure(d).ok, entry.name
        for arc in cutting_arcs(d):
            result = surgery(d, arc)
            assert not result.degenerate, (entry.name, arc.edges)
            assert result.genus_after == 0, (entry.name, arc.edges)
    assert seen >= 3


def test_edges_without_a_shared_face_are_not_arcs(pretzel_8_19):
    """Test that non-alternating edges on common state circles but no common face give no arc."""
    pairs = {arc.edges for arc in cutting_arcs(pretzel_8_19)}
    assert (5, 13) not in pairs
    assert (7, 15) not in pairs


@pytest.mark.parametrize("name", ["8_19", "8_20", "8_21"])
def test_surgery_on_every_arc_of_genus_one_knots(catalog_by_name, name):
    """Test that every cutting arc of the genus-one pretzel diagrams lowers the genus to zero."""
    d = catalog_by_name[name].diagram
    assert turaev_genus_diagram(d) == 1
    arcs = cutting_arcs(d)
    assert arcs
    for arc in arcs:
        assert arc.faces, arc.edges
        result = surgery(d, arc)
        assert not result.degenerate, arc.edges
        assert result.genus_after == 0, arc.edges


def test_kink_has_no_non_alternating_edges(kink):
    """Test that an unreduced diagram can have every edge alternate without being alternating."""
    assert non_alternating_edges(kink) == []
    assert not is_alternating(kink)
    assert cutting_arcs(kink) == []
