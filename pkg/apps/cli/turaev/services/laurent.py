"""Integer Laurent polynomials in one formal variable, backed by sympy."""
from __future__ import annotations

from collections import Counter
from typing import Iterable, Iterator

import sympy as sp
from sympy import ZZ, Poly

from .errors import InternalError


def _symbol(var: str) -> sp.Symbol:
    return sp.Symbol(var)


class LaurentPoly:
    """Exact integer Laurent polynomial in a single tagged variable.

    The value is ``var**low * poly`` where ``poly`` is a sympy ``Poly`` over
    ZZ with a nonzero constant term (or the zero polynomial, with low = 0).
    Instances are treated as immutable values.
    """

    __slots__ = ("var", "_poly", "_low")

    def __init__(self, terms: dict[int, int] | Iterable[tuple[int, int]] | None = None, var: str = "A"):
        tally: Counter[int] = Counter()
        for exponent, coefficient in terms.items() if isinstance(terms, dict) else (terms or ()):
            tally[exponent] += coefficient
        clean = {e: c for e, c in tally.items() if c}
        self.var = var
        if not clean:
            self._poly, self._low = Poly(0, _symbol(var), domain=ZZ), 0
            return
        low = min(clean)
        self._poly = Poly.from_dict({(e - low,): c for e, c in clean.items()}, _symbol(var), domain=ZZ)
        self._low = low

    @classmethod
    def _wrap(cls, poly: Poly, low: int, var: str) -> LaurentPoly:
        """Normalize ``var**low * poly`` by pulling the monomial content out of poly."""
        result = cls.__new__(cls)
        result.var = var
        if poly.is_zero:
            result._poly, result._low = Poly(0, _symbol(var), domain=ZZ), 0
            return result
        (gap,), rest = poly.terms_gcd()
        result._poly, result._low = rest, low + gap
        return result

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1, var: str = "A") -> LaurentPoly:
        return cls({exponent: coefficient}, var)

    @classmethod
    def constant(cls, value: int, var: str = "A") -> LaurentPoly:
        return cls({0: value}, var)

    @classmethod
    def zero(cls, var: str = "A") -> LaurentPoly:
        return cls({}, var)

    @classmethod
    def from_expr(cls, expr: sp.Expr, var: str = "A") -> LaurentPoly:
        """Read a sympy expression that is a Laurent polynomial in ``var``.

        Raises:
            ValueError: if the expression has a non-monomial denominator or
                non-integer coefficients.
        """
        x = _symbol(var)
        numerator, denominator = sp.fraction(sp.cancel(sp.expand(expr)))
        den = Poly(denominator, x)
        if len(den.terms()) != 1 or den.LC() not in (1, -1):
            raise ValueError(f"{expr} is not a Laurent polynomial in {var}")
        num = Poly(numerator, x) * int(den.LC())
        if num.get_domain() != ZZ:
            raise ValueError(f"{expr} has non-integer coefficients")
        return cls._wrap(num, -den.degree(), var)

    def as_expr(self) -> sp.Expr:
        return self._poly.as_expr() * _symbol(self.var) ** self._low

    # -- inspection ------------------------------------------------------

    def terms(self) -> list[tuple[int, int]]:
        """(exponent, coefficient) pairs sorted by exponent."""
        return sorted((self._low + k, int(c)) for (k,), c in self._poly.terms() if c)

    def coefficient(self, exponent: int) -> int:
        k = exponent - self._low
        return int(self._poly.nth(k)) if 0 <= k <= max(self._poly.degree(), 0) else 0

    def is_zero(self) -> bool:
        return self._poly.is_zero

    def min_degree(self) -> int:
        if self._poly.is_zero:
            raise ValueError("zero polynomial has no degree")
        return self._low

    def max_degree(self) -> int:
        if self._poly.is_zero:
            raise ValueError("zero polynomial has no degree")
        return self._low + self._poly.degree()

    def span(self) -> int:
        return self.max_degree() - self.min_degree()

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.terms())

    def __len__(self) -> int:
        return 0 if self._poly.is_zero else len(self._poly.terms())

    def __bool__(self) -> bool:
        return not self._poly.is_zero

    # -- arithmetic ------------------------------------------------------

    def _coerce(self, other: LaurentPoly | int) -> LaurentPoly:
        if isinstance(other, LaurentPoly):
            if other.var != self.var and other and self:
                raise ValueError(f"cannot combine polynomials in {self.var} and {other.var}")
            return other if other.var == self.var else other.retag(self.var)
        if isinstance(other, int):
            return LaurentPoly.constant(other, self.var)
        return NotImplemented

    def _lifted(self, low: int) -> Poly:
        """This polynomial times var**(-low), for low <= self._low."""
        gap = self._low - low
        return self._poly if gap == 0 else self._poly * Poly.from_dict({(gap,): 1}, _symbol(self.var), domain=ZZ)

    def __add__(self, other: LaurentPoly | int) -> LaurentPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not other:
            return self
        if not self:
            return other
        low = min(self._low, other._low)
        return LaurentPoly._wrap(self._lifted(low) + other._lifted(low), low, self.var)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly._wrap(-self._poly, self._low, self.var)

    def __sub__(self, other: LaurentPoly | int) -> LaurentPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: int) -> LaurentPoly:
        return (-self) + other

    def __mul__(self, other: LaurentPoly | int) -> LaurentPoly:
        if isinstance(other, int):
            return LaurentPoly._wrap(self._poly.mul_ground(other), self._low, self.var)
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return LaurentPoly._wrap(self._poly * other._poly, self._low + other._low, self.var)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> LaurentPoly:
        if n < 0:
            if len(self) != 1:
                raise ValueError("only monomials can be raised to negative powers")
            coefficient = self.coefficient(self._low)
            if coefficient not in (1, -1):
                raise ValueError("monomial must have a unit coefficient")
            return LaurentPoly.monomial(self._low * n, coefficient ** (-n), self.var)
        return LaurentPoly._wrap(self._poly**n, self._low * n, self.var)

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by var**k."""
        return LaurentPoly._wrap(self._poly, self._low + k, self.var)

    def divexact(self, divisor: LaurentPoly) -> LaurentPoly:
        """Exact division; raises InternalError when a remainder is left."""
        if not divisor:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self:
            return LaurentPoly.zero(self.var)
        divisor = self._coerce(divisor)
        quotient, remainder = self._poly.div(divisor._poly, auto=False)
        if not remainder.is_zero:
            raise InternalError(f"{self} is not divisible by {divisor}")
        return LaurentPoly._wrap(quotient, self._low - divisor._low, self.var)

    # -- substitutions ---------------------------------------------------

    def substitute_power(self, k: int, var: str | None = None) -> LaurentPoly:
        """Replace the variable x by x**k (optionally renaming it)."""
        return LaurentPoly({e * k: c for e, c in self.terms()}, var or self.var)

    def compress(self, k: int, var: str | None = None) -> LaurentPoly:
        """Inverse of ``substitute_power``: requires every exponent to be divisible by k."""
        if any(e % k for e, _ in self.terms()):
            raise InternalError(f"exponents of {self} are not all divisible by {k}")
        return LaurentPoly({e // k: c for e, c in self.terms()}, var or self.var)

    def reflect(self) -> LaurentPoly:
        """x -> 1/x."""
        return self.substitute_power(-1)

    def retag(self, var: str) -> LaurentPoly:
        return LaurentPoly(self.terms(), var)

    def evaluate(self, value: int) -> int:
        """Evaluate at a nonzero integer (result must be integral)."""
        total = self.as_expr().subs(_symbol(self.var), value)
        if not total.is_integer:
            raise ValueError("evaluation is not integral")
        return int(total)

    def unit_factor(self, other: LaurentPoly) -> tuple[int, int] | None:
        """Return (sign, k) with self == sign * x**k * other, or None."""
        if not self or not other:
            return (1, 0) if not self and not other else None
        if self._poly == other._poly:
            return 1, self._low - other._low
        if self._poly == -other._poly:
            return -1, self._low - other._low
        return None

    # -- comparison / display -----------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self.terms() == ([(0, other)] if other else [])
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if not self and not other:
            return True
        return self.var == other.var and self._low == other._low and self._poly == other._poly

    def __hash__(self) -> int:
        return hash((self.var, tuple(self.terms())))

    def __str__(self) -> str:
        if not self:
            return "0"
        parts: list[str] = []
        for exponent, coefficient in reversed(self.terms()):
            sign = "-" if coefficient < 0 else "+"
            magnitude = abs(coefficient)
            if exponent == 0:
                body = str(magnitude)
            else:
                power = self.var if exponent == 1 else f"{self.var}^{exponent}"
                body = power if magnitude == 1 else f"{magnitude}*{power}"
            parts.append(f"{sign} {body}")
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    def __repr__(self) -> str:
        return f"LaurentPoly({self.terms()!r}, var={self.var!r})"


def loop_value(var: str = "A") -> LaurentPoly:
    """The bracket loop value d = -A^2 - A^-2."""
    return LaurentPoly({2: -1, -2: -1}, var)
