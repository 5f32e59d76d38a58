"""Comparison modes for 2-weight arithmetic.

Every equality / strictness decision in the library goes through a
:class:`Cmp` instance.  Exact mode compares numbers (ints / Fractions)
directly; tolerance mode compares floats with a relative tolerance.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

Number = Union[int, Fraction, float]

DEFAULT_TOL = 1e-9


class Cmp:
    """Equality and order predicates under a comparison mode.

    ``tol is None`` selects exact comparison (reference semantics, used by
    all acceptance tests).  Otherwise values are compared with relative
    tolerance ``tol``; the scale is ``max(1, |a|, |b|)`` so that small
    values are not compared against a vanishing threshold.
    """

    __slots__ = ("tol",)

    def __init__(self, tol: "float | None" = None):
        if tol is not None and tol <= 0:
            raise ValueError("tolerance must be positive")
        self.tol = tol

    @property
    def exact(self) -> bool:
        return self.tol is None

    @staticmethod
    def _scale(a: Number, b: Number) -> float:
        return max(1.0, abs(a), abs(b))

    def eq(self, a: Number, b: Number) -> bool:
        if self.tol is None:
            return a == b
        return abs(a - b) <= self.tol * self._scale(a, b)

    def lt(self, a: Number, b: Number) -> bool:
        """Strictly less; in tolerance mode the gap must exceed tol*scale."""
        if self.tol is None:
            return a < b
        return b - a > self.tol * self._scale(a, b)

    def le(self, a: Number, b: Number) -> bool:
        return not self.lt(b, a)

    def __repr__(self) -> str:
        return "Cmp(exact)" if self.tol is None else f"Cmp(tol={self.tol!r})"

    def __eq__(self, other) -> bool:
        return isinstance(other, Cmp) and self.tol == other.tol

    def __hash__(self) -> int:
        return hash(("Cmp", self.tol))


EXACT = Cmp()


def as_exact_number(value) -> Number:
    """Normalize a value for exact mode: integral values become ints.

    Plain ints are much faster than Fractions in the shortest-path and
    enumeration loops, and generated instances are mostly integral.
    """
    if isinstance(value, int):
        return value
    frac = Fraction(value)
    if frac.denominator == 1:
        return frac.numerator
    return frac
