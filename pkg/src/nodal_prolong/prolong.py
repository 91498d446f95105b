"""Lifting parametrized curves through the tower, and implicit differentiation.

A :class:`ParametricCurve` stores one truncated series per coordinate of its
chart. :func:`lift_once` compares the valuations of dn/ds and dr/ds to pick the
regular or critical step and divides the two derivative series to get the new
coordinate.

:func:`implicit_system` is the jet-space side: repeated total derivatives of
``f(x, y)`` with jet variables ``y'``, ``y''``, .... In the all-1 chart the jet
``y^(j)`` is the coordinate ``x2(1...1)`` (j ones) when x = x1 and y = x2;
:func:`regular_chart_renaming` returns that dictionary.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass, field
from typing import Mapping

from .kernel import Polynomial, const, substitute, total_derivative, var
from .series import DivisionOrderLoss, SeriesError, TruncatedSeries
from .tower import StepKind, chart_coordinates, chart_frame, check_chart, coord, opposite

__all__ = [
    "ParametricCurve",
    "ImplicitSystem",
    "ProlongError",
    "OrderExhausted",
    "BothDerivativesZero",
    "TruncationTooShort",
    "ORDER_ENV",
    "default_order",
    "curve",
    "lift_once",
    "prolong",
    "check_identification",
    "implicit_system",
    "jet_name",
    "regular_chart_renaming",
    "rename",
]

ORDER_ENV = "NODAL_PROLONG_ORDER"


def default_order(levels: int) -> int:
    """Truncation order for a computation reaching ``levels``: 2*levels + 4,
    unless overridden by the environment."""
    override = os.environ.get(ORDER_ENV)
    if override:
        return int(override)
    return 2 * levels + 4


class ProlongError(ArithmeticError):
    pass


class OrderExhausted(ProlongError):
    pass


class BothDerivativesZero(ProlongError):
    pass


class TruncationTooShort(ProlongError):
    pass


@dataclass(frozen=True)
class ParametricCurve:
    chart: str
    coords: tuple[TruncatedSeries, ...]
    steps: tuple[StepKind, ...] = field(default=())

    def __post_init__(self):
        check_chart(self.chart)
        if len(self.coords) != len(self.chart) + 2:
            raise ValueError(f"chart {self.chart!r} needs {len(self.chart) + 2} coordinate series")

    @property
    def names(self) -> tuple[str, ...]:
        return chart_coordinates(self.chart)

    def __getitem__(self, name: str) -> TruncatedSeries:
        return self.coords[self.names.index(name)]

    def as_dict(self) -> dict[str, TruncatedSeries]:
        return dict(zip(self.names, self.coords))

    def project(self, levels: int = 1) -> "ParametricCurve":
        k = len(self.chart) - levels
        if k < 0:
            raise ValueError("cannot project below the base")
        return ParametricCurve(self.chart[:k], self.coords[: k + 2], self.steps[: max(len(self.steps) - levels, 0)])


def curve(x1, x2, order: int | None = None, chart: str = "", extra=()) -> ParametricCurve:
    """Build a curve from polynomials in s, expression strings like ``"3/2*s^2"``
    or scalars."""
    from .parsing import parse_polynomial

    order = default_order(1) if order is None else order
    polys = [parse_polynomial(p) if isinstance(p, str) else Polynomial.coerce(p) for p in (x1, x2, *extra)]
    return ParametricCurve(chart, tuple(TruncatedSeries.from_polynomial(p, order) for p in polys))


def lift_once(c: ParametricCurve) -> tuple[ParametricCurve, StepKind]:
    """One prolongation step. Ties between the valuations go to the regular step;
    in the base chart the coordinate of smaller derivative valuation is retained
    (x1 on ties)."""
    values = c.as_dict()
    if c.chart:
        f = chart_frame(c.chart)
        n, r = f.new, f.retained
    else:
        n, r = "x2", "x1"
    dn, dr = values[n].derivative(), values[r].derivative()
    if dn.prec == 0 or dr.prec == 0:
        raise OrderExhausted("series too short to differentiate")
    vn, vr = dn.valuation, dr.valuation
    if vn == math.inf and vr == math.inf:
        raise BothDerivativesZero(f"both active coordinates of chart {c.chart!r} are constant to known order")
    if not c.chart:
        retained = "1" if vr <= vn else "2"
        kind = StepKind.REGULAR
        num, den = (dn, dr) if retained == "1" else (dr, dn)
        q = retained
    elif vr <= vn:
        kind = StepKind.REGULAR
        num, den = dn, dr
        q = c.chart[-1]
    else:
        kind = StepKind.CRITICAL
        num, den = dr, dn
        q = opposite(c.chart[-1])
    try:
        new = num / den
    except DivisionOrderLoss as exc:
        raise OrderExhausted(str(exc)) from exc
    except SeriesError as exc:
        raise OrderExhausted(f"cannot divide derivative series: {exc}") from exc
    child = c.chart + q
    return ParametricCurve(child, c.coords + (new,), c.steps + (kind,)), kind


def prolong(c: ParametricCurve, levels: int) -> ParametricCurve:
    for _ in range(levels):
        c, _kind = lift_once(c)
    return c


def check_identification(
    a: ParametricCurve,
    b: ParametricCurve,
    dictionary: Mapping[str, Polynomial],
    reparametrization: TruncatedSeries | None = None,
) -> bool:
    """Whether ``a`` equals ``b`` after rewriting a's coordinates through the
    dictionary (each of a's coordinates as a polynomial in b's coordinates).

    ``reparametrization``, if given, is substituted for s in b's series.
    Comparison is up to the precision both sides guarantee.
    """
    bvals = b.as_dict()
    if reparametrization is not None:
        bvals = {k: v.compose(reparametrization) for k, v in bvals.items()}
    missing = set(a.names) - set(dictionary)
    if missing:
        raise KeyError(f"dictionary does not cover {sorted(missing)}")
    some = next(iter(bvals.values()))
    one = TruncatedSeries([1], some.prec, some.variable)
    for name in a.names:
        image = Polynomial.coerce(dictionary[name]).evaluate(bvals, one)
        lhs = a[name]
        if min(lhs.prec, image.prec) < 1:
            raise TruncationTooShort(f"no coefficients of {name} left to compare")
        if not lhs.agrees_with(image):
            return False
    return True


# -- implicit differentiation ----------------------------------------------------


def jet_name(j: int, y: str = "y") -> str:
    return y if j == 0 else y + "'" * j


@dataclass(frozen=True)
class ImplicitSystem:
    x: str
    y: str
    equations: tuple[Polynomial, ...]

    def jets(self) -> tuple[str, ...]:
        return tuple(jet_name(j) for j in range(1, len(self.equations)))


def implicit_system(f: Polynomial, k: int, x: str = "x", y: str = "y", constants=("t",)) -> ImplicitSystem:
    """``[f, Df, D^2 f, ..., D^k f]`` with D = d/dx + y' d/dy + y'' d/dy' + ...

    ``x`` and ``y`` name the independent and dependent variables of ``f``; the
    jet variables are always ``y'``, ``y''``, ... whatever ``y`` is called.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    eqs = [f]
    for i in range(1, k + 1):
        rates = {x: const(1), y: var(jet_name(1))}
        for j in range(1, i):
            rates[jet_name(j)] = var(jet_name(j + 1))
        eqs.append(total_derivative(eqs[-1], rates, constants))
    return ImplicitSystem(x, y, tuple(eqs))


def regular_chart_renaming(k: int) -> dict[str, str]:
    """y^(j) -> x2(1^j): jets of x2 as a function of x1 in chart 1...1."""
    return {jet_name(j): coord(2, "1" * j) for j in range(1, k + 1)}


def rename(p: Polynomial, mapping: Mapping[str, str]) -> Polynomial:
    for old, new in mapping.items():
        p = substitute(p, old, var(new))
    return p
