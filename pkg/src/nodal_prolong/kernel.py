"""Sparse multivariate polynomials over the rationals.

Variables are plain strings. Tower coordinates (``x1``, ``x2``, ``x1(2)``,
``x2(21)``, ...) and the parameters ``t`` and ``s`` get a fixed position in the
variable order; any other name (jet variables ``y'``, scratch symbols ``D``,
``N``, ``R``) sorts after them by name.

All coefficients are :class:`fractions.Fraction`; nothing here ever touches a
float.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Iterable, Mapping, Union

__all__ = [
    "Rational",
    "Polynomial",
    "NotLinear",
    "NonConstantCoefficient",
    "var_key",
    "var",
    "const",
    "derivative",
    "substitute",
    "solve_linear_and_eliminate",
    "primitive_part",
    "total_derivative",
]

Rational = Fraction
Scalar = Union[int, Fraction]
Monomial = tuple  # tuple[tuple[str, int], ...], sorted by var_key, exponents > 0

_COORD = re.compile(r"^x([12])(?:\(([12]*)\))?$")


def var_key(name: str) -> tuple:
    """Sort key: t < s < x1 < x2 < x1(1) < x2(1) < x1(2) < ... < other names."""
    if name == "t":
        return (0, 0, 0, "")
    if name == "s":
        return (1, 0, 0, "")
    m = _COORD.match(name)
    if m:
        suffix = m.group(2) or ""
        return (2, len(suffix), int(m.group(1)), suffix)
    return (3, 0, 0, name)


def _mono_key(mono: Monomial) -> tuple:
    return tuple((var_key(v), e) for v, e in mono)


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    exps = dict(a)
    for v, e in b:
        exps[v] = exps.get(v, 0) + e
    return tuple(sorted(exps.items(), key=lambda item: var_key(item[0])))


class NotLinear(ValueError):
    """The relation is not of degree exactly one in the target variable."""


class NonConstantCoefficient(ValueError):
    """The coefficient of the target variable involves other variables."""


class Polynomial:
    """Immutable polynomial; the zero coefficient is never stored.

    >>> x1, x2 = var("x1"), var("x2")
    >>> (x1 + x2) * (x1 - x2)
    Polynomial('x1^2 - x2^2')
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, Scalar] | None = None):
        clean = {}
        for mono, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                clean[tuple(sorted(mono, key=lambda item: var_key(item[0])))] = c
        self._terms = clean
        self._hash = None

    # -- construction helpers -------------------------------------------------

    @classmethod
    def _raw(cls, terms: dict) -> "Polynomial":
        p = object.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @staticmethod
    def coerce(other) -> "Polynomial":
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return const(other)
        if isinstance(other, str):
            return var(other)
        raise TypeError(f"cannot coerce {type(other).__name__} to Polynomial")

    # -- inspection -------------------------------------------------------------

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self) -> list[tuple[Monomial, Fraction]]:
        """Terms in canonical order (ascending monomial key)."""
        return sorted(self._terms.items(), key=lambda kv: (_mono_degree(kv[0]), _mono_key(kv[0])))

    @property
    def variables(self) -> frozenset:
        return frozenset(v for mono in self._terms for v, _ in mono)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(not mono for mono in self._terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self._terms.get((), Fraction(0))

    def degree(self) -> int:
        return max((_mono_degree(m) for m in self._terms), default=-1)

    def degree_in(self, v: str) -> int:
        return max((dict(m).get(v, 0) for m in self._terms), default=-1)

    def coefficient(self, mono: Iterable[tuple[str, int]]) -> Fraction:
        key = tuple(sorted(mono, key=lambda item: var_key(item[0])))
        return self._terms.get(key, Fraction(0))

    def split(self, v: str) -> dict[int, "Polynomial"]:
        """Coefficients as a polynomial in ``v``: {power: coefficient free of v}."""
        out: dict[int, dict] = {}
        for mono, c in self._terms.items():
            e = 0
            rest = []
            for name, k in mono:
                if name == v:
                    e = k
                else:
                    rest.append((name, k))
            out.setdefault(e, {})[tuple(rest)] = c
        return {e: Polynomial._raw(t) for e, t in out.items()}

    # -- arithmetic -------------------------------------------------------------

    def __add__(self, other) -> "Polynomial":
        try:
            other = Polynomial.coerce(other)
        except TypeError:
            return NotImplemented
        terms = dict(self._terms)
        for mono, c in other._terms.items():
            s = terms.get(mono, 0) + c
            if s:
                terms[mono] = s
            else:
                terms.pop(mono, None)
        return Polynomial._raw(terms)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other) -> "Polynomial":
        try:
            other = Polynomial.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Polynomial":
        return Polynomial.coerce(other) - self

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            if not other:
                return Polynomial._raw({})
            return Polynomial._raw({m: c * other for m, c in self._terms.items()})
        try:
            other = Polynomial.coerce(other)
        except TypeError:
            return NotImplemented
        terms: dict = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = _mono_mul(m1, m2)
                s = terms.get(m, 0) + c1 * c2
                if s:
                    terms[m] = s
                else:
                    terms.pop(m, None)
        return Polynomial._raw(terms)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "Polynomial":
        """Division by a nonzero rational (or a nonzero constant polynomial)."""
        if isinstance(other, Polynomial):
            other = other.constant_value()
        other = Fraction(other)
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        return self * (1 / other)

    def __pow__(self, n: int) -> "Polynomial":
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # -- comparison -------------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = const(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- evaluation -------------------------------------------------------------

    def evaluate(self, values: Mapping[str, object], one=Fraction(1)):
        """Evaluate in any commutative ring supporting ``+``, ``*``, ``**`` and
        multiplication by a Fraction. Variables missing from ``values`` raise
        KeyError."""
        total = None
        for mono, c in self.items():
            term = one * c
            for v, e in mono:
                term = term * (values[v] ** e)
            total = term if total is None else total + term
        return one * 0 if total is None else total

    # -- rendering --------------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        ordered = sorted(self._terms.items(), key=lambda kv: (-_mono_degree(kv[0]), _mono_key(kv[0])))
        out = []
        for i, (mono, c) in enumerate(ordered):
            sign = "-" if c < 0 else "+"
            a = abs(c)
            factors = [v if e == 1 else f"{v}^{e}" for v, e in mono]
            if not factors:
                body = _fmt_scalar(a)
            elif a == 1:
                body = "*".join(factors)
            else:
                body = "*".join([_fmt_scalar(a)] + factors)
            if i == 0:
                out.append(body if sign == "+" else "-" + body)
            else:
                out.append(f" {sign} {body}")
        return "".join(out)

    def __repr__(self) -> str:
        return f"Polynomial({str(self)!r})"


def _mono_degree(mono: Monomial) -> int:
    return sum(e for _, e in mono)


def _fmt_scalar(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return f"({c.numerator}/{c.denominator})"


def var(name: str) -> Polynomial:
    return Polynomial._raw({((name, 1),): Fraction(1)})


def const(c: Scalar) -> Polynomial:
    c = Fraction(c)
    return Polynomial._raw({(): c} if c else {})


def derivative(p: Polynomial, v: str) -> Polynomial:
    """Formal partial derivative of ``p`` with respect to ``v``."""
    terms: dict = {}
    for mono, c in p._terms.items():
        exps = dict(mono)
        e = exps.get(v, 0)
        if not e:
            continue
        if e == 1:
            del exps[v]
        else:
            exps[v] = e - 1
        m = tuple(sorted(exps.items(), key=lambda item: var_key(item[0])))
        terms[m] = terms.get(m, 0) + c * e
    return Polynomial(terms)


def substitute(p: Polynomial, v: str, q: Polynomial | Scalar) -> Polynomial:
    """Replace every occurrence of ``v`` in ``p`` by ``q`` and expand."""
    q = Polynomial.coerce(q)
    parts = p.split(v)
    result = const(0)
    powers = {0: const(1)}
    for e in sorted(parts):
        if e not in powers:
            powers[e] = q ** e
        result = result + parts[e] * powers[e]
    return result


def solve_linear_and_eliminate(relation: Polynomial, target: str, p: Polynomial) -> Polynomial:
    """Solve ``relation = 0`` for ``target`` and substitute the solution into ``p``.

    The relation must be ``a*target + b`` with ``a`` a nonzero rational and
    ``b`` free of ``target``; any other shape is refused.
    """
    deg = relation.degree_in(target)
    if deg != 1:
        raise NotLinear(f"relation {relation} has degree {deg} in {target}")
    parts = relation.split(target)
    lead = parts[1]
    if not lead.is_constant():
        raise NonConstantCoefficient(f"coefficient {lead} of {target} is not a rational constant")
    rest = parts.get(0, const(0))
    solution = -rest / lead.constant_value()
    return substitute(p, target, solution)


def primitive_part(p: Polynomial) -> Polynomial:
    """Divide by the positive rational content, so integer polynomials become
    primitive while keeping the sign of every coefficient."""
    if p.is_zero():
        return p
    coeffs = list(p._terms.values())
    num = reduce(gcd, (abs(c.numerator) for c in coeffs))
    den = reduce(lambda a, b: a * b // gcd(a, b), (c.denominator for c in coeffs))
    return p * Fraction(den, num)


def total_derivative(p: Polynomial, rates: Mapping[str, Polynomial], constants: Iterable[str] = ("t",)) -> Polynomial:
    """Chain rule: the sum over variables v of dp/dv * rates[v].

    Names in ``constants`` differentiate to zero; any other variable without a
    rate raises KeyError rather than being silently dropped.
    """
    constants = frozenset(constants)
    result = const(0)
    for v in sorted(p.variables, key=var_key):
        if v in rates:
            result = result + derivative(p, v) * rates[v]
        elif v not in constants:
            raise KeyError(f"no rate of change given for {v}")
    return result
