"""Tests for the Khovanov complex, homology and the width bound."""
import random

import pytest
import sympy as sp

from turaev.config import settings
from turaev.services.builders import build_from_code
from turaev.services.diagram import is_alternating, mirror, planar_faces, reidemeister_variant
from turaev.services.errors import CapExceededError, PreconditionError
from turaev.services.khovanov import (
    BettiTable,
    check_euler,
    check_width_bound,
    cube_complex,
    delta_width,
    euler_characteristic,
    homology,
    verify_d_squared,
)
from turaev.services.laurent import LaurentPoly
from turaev.services.linalg import domain_matrix, rank, rank_f2, rank_rational

TREFOIL_KH = {(0, 1): 1, (0, 3): 1, (2, 5): 1, (3, 9): 1}


def _betti(d):
    return homology(cube_complex(d, "q")).entries


def test_rank():
    """Test exact rank over the rationals and over F2."""
    rows = [{0: 1, 1: 1}, {1: 1, 2: 1}, {0: 1, 2: -1}]
    assert rank_rational(rows) == 2
    assert rank_f2(rows) == 2
    assert rank([{0: 2}], "q") == 1
    assert rank([{0: 2}], "f2") == 0
    assert rank_f2([{0: 1, 1: 1}, {0: 1, 1: 1}]) == 1
    assert rank_rational([]) == 0
    with pytest.raises(ValueError):
        rank(rows, "z")


def test_domain_matrix_drops_zero_entries():
    """Test that entries vanishing in the field are not stored."""
    m = domain_matrix([{0: 2, 2: 1}, {}], "f2")
    assert m.shape == (2, 3)
    assert m.rank() == 1
    assert domain_matrix([{0: 2}], "f2").rank() == 0
    assert domain_matrix([{0: 2}], "q").rank() == 1


def test_rank_matches_dense_rank():
    """Test sparse rank against sympy's dense rank on seeded random matrices."""
    rng = random.Random(settings.random_seed)
    for _ in range(25):
        rows = [{k: rng.randint(-2, 2) for k in range(6) if rng.random() < 0.5} for _ in range(5)]
        dense = sp.Matrix([[row.get(k, 0) for k in range(6)] for row in rows])
        assert rank_rational(rows) == dense.rank()
        assert rank_f2(rows) <= rank_rational(rows)


def test_unknot_homology(kink):
    """Test that the one-crossing unknot has homology at (0, 1) and (0, -1)."""
    table = homology(cube_complex(kink, "q"))
    assert table.entries == {(0, 1): 1, (0, -1): 1}
    assert delta_width(table) == 2


def test_trefoil_complex(trefoil):
    """Test the size of the trefoil cube and that its differential squares to zero."""
    cx = cube_complex(trefoil, "q")
    assert cx.degrees() == [0, 1, 2, 3]
    assert cx.total_dimension == sum(2**k for k in (2, 1, 1, 2, 1, 2, 2, 3))
    assert verify_d_squared(cx)


def test_trefoil_homology_rational(trefoil):
    """Test the rational Khovanov homology of the trefoil."""
    table = homology(cube_complex(trefoil, "q"))
    assert table.entries == TREFOIL_KH
    assert table.diagonals() == [1, 3]
    assert delta_width(table) == 2


def test_trefoil_homology_f2(trefoil):
    """Test that the 2-torsion of the trefoil shows up over F2."""
    table = homology(cube_complex(trefoil, "f2"))
    assert table.entries == {**TREFOIL_KH, (2, 7): 1, (3, 7): 1}
    assert delta_width(table) == 2


def test_euler_characteristic(trefoil):
    """Test that the graded Euler characteristic recovers the Jones polynomial."""
    table = homology(cube_complex(trefoil, "q"))
    assert euler_characteristic(table) == LaurentPoly({1: 1, 3: 1, 5: 1, 9: -1}, var="q")
    assert check_euler(trefoil, table)


def test_mirror_homology(trefoil):
    """Test that mirroring negates both gradings."""
    table = homology(cube_complex(mirror(trefoil), "q"))
    assert table.entries == {(-i, -j): dim for (i, j), dim in TREFOIL_KH.items()}


def test_kink_invariance(trefoil):
    """Test Betti invariance under positive and negative kinks."""
    base = _betti(trefoil)
    for move in ("R1+", "R1-"):
        for edge in (1, 4):
            assert _betti(reidemeister_variant(trefoil, move, edge)) == base


def test_second_move_invariance(trefoil, figure_eight):
    """Test Betti invariance under R2 pokes, over and under, at every admissible edge pair."""
    for d in (trefoil, figure_eight):
        base = _betti(d)
        applied = 0
        for e in d.edges:
            for f in d.edges:
                if e >= f or applied >= 6:
                    continue
                for over in (True, False):
                    try:
                        variant = reidemeister_variant(d, "R2", (e, f), over=over)
                    except PreconditionError:
                        continue
                    assert variant.crossing_count == d.crossing_count + 2
                    assert _betti(variant) == base, (e, f, over)
                    applied += 1
        assert applied


def test_third_move_invariance():
    """Test Betti invariance under R3 slides across every admissible triangle."""
    applied = 0
    for code in ("braid:1,2,1", "braid:1,2,1,2", "braid:1,-2,1,1"):
        d = build_from_code(code)
        base = _betti(d)
        for index in range(len(planar_faces(d))):
            try:
                variant = reidemeister_variant(d, "R3", index)
            except PreconditionError:
                continue
            assert variant.crossing_count == d.crossing_count
            assert _betti(variant) == base, (code, index)
            applied += 1
    assert applied


def test_width_of_8_19(pretzel_8_19):
    """Test that 8_19 is thick: three diagonals, and w - 2 = g_T = 1."""
    table = homology(cube_complex(pretzel_8_19, "q"))
    assert delta_width(table) == 3
    assert check_euler(pretzel_8_19, table)
    report = check_width_bound(pretzel_8_19, table)
    assert report.genus == 1
    assert report.bound_holds
    assert report.equality
    assert report.holds


def test_width_bound_on_small_alternating(catalog):
    """Test that small alternating catalog diagrams are thin with equality in the bound."""
    for entry in catalog:
        d = entry.diagram
        if d.crossing_count > 7 or not is_alternating(d):
            continue
        report = check_width_bound(d, field="q")
        assert report.width == 2, entry.name
        assert report.equality, entry.name


def test_cap(trefoil, monkeypatch):
    """Test that the homology cap refuses large diagrams."""
    monkeypatch.setattr(settings, "khovanov_cap", 2)
    with pytest.raises(CapExceededError):
        cube_complex(trefoil)


def test_zero_table_has_no_width():
    """Test that an empty Betti table has no delta-width."""
    with pytest.raises(PreconditionError):
        delta_width(BettiTable("q"))


@pytest.mark.slow
def test_width_bound_on_catalog(catalog):
    """Test w - 2 <= g_T on every catalog diagram up to nine crossings."""
    for entry in catalog:
        if entry.diagram.crossing_count > 9:
            continue
        report = check_width_bound(entry.diagram, field="q")
        assert report.holds, entry.name
