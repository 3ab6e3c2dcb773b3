"""Tests for Kauffman states, Turaev genus, adequacy and the Turaev surface map."""
import pytest

from turaev.services.errors import CapExceededError, PreconditionError
from turaev.services.states import (
    State,
    adequacy,
    adequacy_bruteforce,
    all_A,
    all_B,
    enumerate_states,
    resolve,
    state_circle_counts,
    turaev_genus_diagram,
    turaev_surface_map,
)


def test_trefoil_state_circles(trefoil):
    """Test the genus formula on the calibration trefoil."""
    assert resolve(trefoil, all_A(trefoil)).circle_count == 2
    assert resolve(trefoil, all_B(trefoil)).circle_count == 3
    assert turaev_genus_diagram(trefoil) == 0


def test_kink_state_circles(kink):
    """Test the circle counts of the one-crossing kink."""
    assert resolve(kink, all_A(kink)).circle_count == 2
    assert resolve(kink, all_B(kink)).circle_count == 1
    assert turaev_genus_diagram(kink) == 0


def test_genus_of_nonalternating_diagrams(pretzel_8_19, catalog_by_name):
    """Test the genus of 8_19 and of a sum of two genus-one diagrams."""
    assert turaev_genus_diagram(pretzel_8_19) == 1
    assert turaev_genus_diagram(catalog_by_name["P(3,1,-1)#P(3,1,-1)"].diagram) == 2


def test_state_bits():
    """Test the bit encoding of states, set bits meaning B."""
    s = State.from_bits(0b101, 4)
    assert str(s) == "BABA"
    assert s.bits == 0b101
    assert (s.a, s.b) == (2, 2)
    assert s.flip(1).bits == 0b111


def test_resolve_rejects_wrong_length(trefoil):
    """Test that a state must mark every crossing."""
    with pytest.raises(PreconditionError):
        resolve(trefoil, State(("A", "B")))


def test_resolution_membership(trefoil):
    """Test that every half-edge lands on exactly one circle."""
    res = resolve(trefoil, all_A(trefoil))
    circles = res.circles()
    assert sum(len(c) for c in circles) == 12
    assert all(res.circle_of(h) == k for k, circle in enumerate(circles) for h in circle)


def test_enumerate_states(trefoil):
    """Test that enumeration visits all states starting from all-A."""
    states = list(enumerate_states(trefoil))
    assert len(states) == 8
    assert states[0][0] == all_A(trefoil)
    assert states[-1][0] == all_B(trefoil)
    head = list(enumerate_states(trefoil, start=0, stop=3))
    tail = list(enumerate_states(trefoil, start=3))
    assert head + tail == states
    counts = list(state_circle_counts(trefoil))
    assert counts == [(s.b, res.circle_count) for s, res in states]


def test_enumerate_states_cap(pretzel_8_19):
    """Test that enumeration refuses diagrams above the cap."""
    with pytest.raises(CapExceededError):
        next(enumerate_states(pretzel_8_19, cap=4))


def test_adequacy(trefoil, kink, catalog_by_name):
    """Test adequacy on an adequate, a one-sided and a non-adequate diagram."""
    assert adequacy(trefoil).adequate
    one_sided = adequacy(kink)
    assert one_sided.a_adequate != one_sided.b_adequate
    kinked = adequacy(catalog_by_name["3_1_kinked"].diagram)
    assert kinked.inadequate
    assert not adequacy(catalog_by_name["8_19"].diagram).adequate


def test_adequacy_matches_bruteforce(catalog):
    """Test the arc criterion against single-marker changes on every catalog entry."""
    for entry in catalog:
        assert adequacy(entry.diagram) == adequacy_bruteforce(entry.diagram), entry.name


def test_surface_map(trefoil, pretzel_8_19):
    """Test the cell counts of the Turaev surface."""
    surface = turaev_surface_map(trefoil)
    assert surface.white_faces == 2
    assert surface.black_faces == 3
    assert surface.genus == 0
    assert surface.is_checkerboard()
    assert set(surface.vertex_signs) == {1}
    twisted = turaev_surface_map(pretzel_8_19)
    assert twisted.genus == 1
    assert set(twisted.vertex_signs) == {-1, 1}


def test_surface_genus_matches_formula(catalog):
    """Test that the surface Euler characteristic gives the genus formula on every catalog entry."""
    for entry in catalog:
        surface = turaev_surface_map(entry.diagram)
        assert surface.genus == turaev_genus_diagram(entry.diagram), entry.name
        assert surface.white_faces == resolve(entry.diagram, all_A(entry.diagram)).circle_count
        assert surface.is_checkerboard(), entry.name
