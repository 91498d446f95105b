"""Truncated power series in one parameter with tracked absolute precision.

A series is known modulo ``s**prec``: coefficients at indices ``>= prec`` are
unknown, not zero. Every operation returns the precision it can actually
guarantee, so dividing by ``2*s + O(s**5)`` costs one order.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable

from .kernel import Polynomial, Scalar

__all__ = [
    "TruncatedSeries",
    "SeriesError",
    "ZeroDivisor",
    "DivisionOrderLoss",
    "NegativeValuation",
]


class SeriesError(ArithmeticError):
    pass


class ZeroDivisor(SeriesError):
    """The divisor vanishes to its known order."""


class DivisionOrderLoss(SeriesError):
    """The quotient has no guaranteed coefficients left."""


class NegativeValuation(SeriesError):
    """The quotient would need negative powers of the parameter."""


class TruncatedSeries:
    __slots__ = ("coeffs", "prec", "variable")

    def __init__(self, coeffs: Iterable[Scalar], prec: int | None = None, variable: str = "s"):
        coeffs = [Fraction(c) for c in coeffs]
        if prec is None:
            prec = len(coeffs)
        if prec < 0:
            raise ValueError("precision must be nonnegative")
        coeffs = coeffs[:prec] + [Fraction(0)] * (prec - len(coeffs))
        self.coeffs: tuple[Fraction, ...] = tuple(coeffs)
        self.prec = prec
        self.variable = variable

    @classmethod
    def from_polynomial(cls, p: Polynomial, prec: int, variable: str = "s") -> "TruncatedSeries":
        extra = p.variables - {variable}
        if extra:
            raise ValueError(f"series in {variable} cannot contain {sorted(extra)}")
        coeffs = [Fraction(0)] * prec
        for mono, c in p.items():
            e = dict(mono).get(variable, 0)
            if e < prec:
                coeffs[e] += c
        return cls(coeffs, prec, variable)

    @classmethod
    def constant(cls, c: Scalar, prec: int, variable: str = "s") -> "TruncatedSeries":
        return cls([c], prec, variable)

    # -- inspection -------------------------------------------------------------

    @property
    def valuation(self) -> float:
        """Index of the first known nonzero coefficient; ``math.inf`` if every
        known coefficient vanishes."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return math.inf

    def is_zero(self) -> bool:
        return self.valuation == math.inf

    def __getitem__(self, i: int) -> Fraction:
        if not 0 <= i < self.prec:
            raise IndexError(f"coefficient {i} is not known (precision {self.prec})")
        return self.coeffs[i]

    def truncate(self, prec: int) -> "TruncatedSeries":
        return TruncatedSeries(self.coeffs, min(prec, self.prec), self.variable)

    def to_polynomial(self) -> Polynomial:
        """The known part as a polynomial in the series variable."""
        return Polynomial({((self.variable, i),) if i else (): c for i, c in enumerate(self.coeffs)})

    def agrees_with(self, other: "TruncatedSeries") -> bool:
        n = min(self.prec, other.prec)
        return self.coeffs[:n] == other.coeffs[:n]

    # -- arithmetic -------------------------------------------------------------

    def _coerce(self, other) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            if other.variable != self.variable:
                raise ValueError("series in different variables")
            return other
        if isinstance(other, (int, Fraction)):
            # constants are exact: give them unbounded precision relative to self
            return TruncatedSeries([other], self.prec, self.variable)
        return NotImplemented

    def __add__(self, other) -> "TruncatedSeries":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = min(self.prec, other.prec)
        return TruncatedSeries([a + b for a, b in zip(self.coeffs[:n], other.coeffs[:n])], n, self.variable)

    __radd__ = __add__

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries([-c for c in self.coeffs], self.prec, self.variable)

    def __sub__(self, other) -> "TruncatedSeries":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "TruncatedSeries":
        return (-self) + other

    def __mul__(self, other) -> "TruncatedSeries":
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries([c * other for c in self.coeffs], self.prec, self.variable)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        va = min(self.valuation, self.prec)
        vb = min(other.valuation, other.prec)
        n = int(min(self.prec + vb, other.prec + va))
        out = [Fraction(0)] * n
        for i, a in enumerate(self.coeffs):
            if not a or i >= n:
                continue
            for j, b in enumerate(other.coeffs):
                if i + j >= n:
                    break
                if b:
                    out[i + j] += a * b
        return TruncatedSeries(out, n, self.variable)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "TruncatedSeries":
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = TruncatedSeries([1], self.prec, self.variable)
        for _ in range(k):
            result = result * self
        return result

    def __truediv__(self, other) -> "TruncatedSeries":
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ZeroDivisor("division by zero")
            return self * (1 / Fraction(other))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        v = other.valuation
        if v == math.inf:
            raise ZeroDivisor("divisor vanishes to its known order")
        va = self.valuation
        if va < v:
            raise NegativeValuation(f"numerator valuation {va} is below divisor valuation {v}")
        n = min(self.prec, other.prec) - v
        if n <= 0:
            raise DivisionOrderLoss("no coefficients of the quotient are guaranteed")
        num = self.coeffs[v:v + n]
        den = other.coeffs[v:v + n]
        lead = den[0]
        out = []
        for i in range(n):
            acc = num[i] - sum((den[j] * out[i - j] for j in range(1, i + 1)), Fraction(0))
            out.append(acc / lead)
        return TruncatedSeries(out, n, self.variable)

    def derivative(self) -> "TruncatedSeries":
        n = max(self.prec - 1, 0)
        return TruncatedSeries([i * c for i, c in enumerate(self.coeffs)][1:n + 1], n, self.variable)

    def compose(self, inner: "TruncatedSeries") -> "TruncatedSeries":
        """``self(inner(s))`` for ``inner`` with zero constant term."""
        if inner.prec and inner.coeffs[0]:
            raise ValueError("inner series must have zero constant term")
        result = TruncatedSeries([], inner.prec, self.variable)
        power = TruncatedSeries([1], inner.prec, self.variable)
        vi = min(inner.valuation, inner.prec)
        for i, c in enumerate(self.coeffs):
            if c:
                result = result + power * c
            power = power * inner
        # unknown coefficients of self start contributing at order prec * valuation(inner)
        limit = self.prec * vi if vi != math.inf else result.prec
        return result.truncate(int(min(limit, result.prec)))

    # -- comparison / rendering -------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (self.prec, self.coeffs, self.variable) == (other.prec, other.coeffs, other.variable)

    def __hash__(self) -> int:
        return hash((self.prec, self.coeffs, self.variable))

    def __str__(self) -> str:
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            mag = abs(c)
            coef = str(mag.numerator) if mag.denominator == 1 else f"({mag.numerator}/{mag.denominator})"
            power = "" if i == 0 else self.variable if i == 1 else f"{self.variable}^{i}"
            if not power:
                body = coef
            elif mag == 1:
                body = power
            else:
                body = f"{coef}*{power}"
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append((" - " if c < 0 else " + ") + body)
        tail = f"O({self.variable}^{self.prec})" if self.prec else "O(1)"
        return "".join(parts) + " + " + tail if parts else tail

    def __repr__(self) -> str:
        return f"TruncatedSeries({str(self)!r})"

