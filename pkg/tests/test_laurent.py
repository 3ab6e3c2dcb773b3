"""Tests for Laurent polynomial arithmetic."""
import pytest
import sympy as sp

from turaev.services.errors import InternalError
from turaev.services.laurent import LaurentPoly, loop_value


def test_loop_value():
    """Test the bracket loop value -A^2 - A^-2."""
    d = loop_value()
    assert d.terms() == [(-2, -1), (2, -1)]
    assert d.span() == 4


def test_arithmetic():
    """Test sums, products and cancellation."""
    a = LaurentPoly({1: 1, -1: 1})
    b = LaurentPoly({1: 1, -1: -1})
    assert (a * b).terms() == [(-2, -1), (2, 1)]
    assert a - a == 0
    assert (a + 1).coefficient(0) == 1
    assert 2 * a == a + a


def test_negative_power_of_monomial():
    """Test that only unit monomials invert."""
    m = LaurentPoly.monomial(3, -1)
    assert m**-2 == LaurentPoly.monomial(-6, 1)
    with pytest.raises(ValueError):
        LaurentPoly({1: 1, 0: 1}) ** -1


def test_divexact():
    """Test exact division by the loop value."""
    d = loop_value()
    p = LaurentPoly({5: 3, -7: 1, 0: -2})
    assert (p * d).divexact(d) == p
    with pytest.raises(InternalError):
        LaurentPoly({0: 1}).divexact(d)


def test_compress_and_substitute():
    """Test the A -> q change of variables used by the Jones normalization."""
    p = LaurentPoly({-16: -1, -12: 1, -4: 1})
    q = p.compress(-2, var="q")
    assert q.var == "q"
    assert q.terms() == [(2, 1), (6, 1), (8, -1)]
    assert q.substitute_power(-2, var="A") == p
    with pytest.raises(InternalError):
        LaurentPoly({1: 1}).compress(2)


def test_unit_factor():
    """Test recognition of sign and monomial shifts."""
    p = LaurentPoly({0: 1, 2: -1, 3: 4}, var="q")
    assert p.shift(5).unit_factor(p) == (1, 5)
    assert (p * -1).shift(-2).unit_factor(p) == (-1, -2)
    assert p.unit_factor(p + 1) is None


def test_evaluate_and_str():
    """Test integer evaluation and the printed form."""
    p = LaurentPoly({-1: 2, 2: -1}, var="t")
    assert p.evaluate(1) == 1
    assert str(p) == "-t^2 + 2*t^-1"
    assert str(LaurentPoly.zero()) == "0"


def test_sympy_round_trip():
    """Test conversion to and from sympy expressions."""
    A = sp.Symbol("A")
    p = LaurentPoly({-7: 1, -3: -1, 5: -1})
    assert sp.expand(p.as_expr() - (A**-7 - A**-3 - A**5)) == 0
    assert LaurentPoly.from_expr(p.as_expr()) == p
    assert LaurentPoly.from_expr((A**2 - A**-2) ** 2) == LaurentPoly({4: 1, 0: -2, -4: 1})
    with pytest.raises(ValueError):
        LaurentPoly.from_expr(1 / (A + 1))
    with pytest.raises(ValueError):
        LaurentPoly.from_expr(A / 2)


def test_normal_form_is_canonical():
    """Test that equal values compare and hash equal however they were built."""
    p = LaurentPoly({3: 1, 5: -2})
    q = LaurentPoly.monomial(3) * LaurentPoly({0: 1, 2: -2})
    assert p == q
    assert hash(p) == hash(q)
    assert (p.min_degree(), p.max_degree()) == (3, 5)
    assert len(p) == 2
    assert p.coefficient(4) == 0
    assert p.coefficient(5) == -2
    assert not LaurentPoly([(2, 1), (2, -1)])
