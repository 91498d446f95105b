"""Chart combinatorics of the monster tower over a surface.

A chart at level k is named by a string over ``{"1", "2"}``; the empty string
is the base neighbourhood. Appending ``q`` to a chart makes
``x_{q̄}(...q)`` the new coordinate (a quotient of differentials) and keeps
``x_q`` as the retained coordinate. Coordinate names are always returned in
their canonical, non-redundant form: ``x1(211)`` is the same function as
``x1(2)`` and is spelled that way.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterator

__all__ = [
    "StepKind",
    "ChartFrame",
    "TowerPoint",
    "LastCoordinateZero",
    "MalformedChart",
    "check_chart",
    "opposite",
    "coord",
    "chart_coordinates",
    "chart_frame",
    "child_chart",
    "step_kind",
    "project",
    "transition_last",
    "charts_containing_point",
    "charts_containing_node",
    "charts",
    "node_label",
    "step_roles",
]


class StepKind(enum.Enum):
    REGULAR = "regular"
    CRITICAL = "critical"


class MalformedChart(ValueError):
    pass


class LastCoordinateZero(ValueError):
    """The point has last coordinate 0, so it is not in the sibling chart."""


def check_chart(chart: str) -> str:
    if not isinstance(chart, str) or any(c not in "12" for c in chart):
        raise MalformedChart(f"chart labels are strings over {{1, 2}}, got {chart!r}")
    return chart


def opposite(symbol: str) -> str:
    return "2" if symbol == "1" else "1"


def coord(index: int | str, suffix: str = "") -> str:
    """Canonical name of x_index(suffix); trailing copies of ``index`` are redundant."""
    index = str(index)
    if index not in ("1", "2"):
        raise ValueError(f"coordinate index must be 1 or 2, got {index}")
    suffix = check_chart(suffix).rstrip(index)
    return f"x{index}({suffix})" if suffix else f"x{index}"


def chart_coordinates(chart: str) -> tuple[str, ...]:
    """The k+2 coordinates of a chart: x1, x2, then the new coordinate of each level."""
    check_chart(chart)
    names = ["x1", "x2"]
    for j in range(1, len(chart) + 1):
        names.append(coord(opposite(chart[j - 1]), chart[:j]))
    return tuple(names)


def node_label(chart: str) -> str:
    return f"N({chart})"


@dataclass(frozen=True)
class ChartFrame:
    chart: str
    new: str
    retained: str
    deactivated: str | None
    inactive: tuple[str, ...]
    step: StepKind | None

    @property
    def active(self) -> tuple[str, str]:
        return (self.new, self.retained)


def step_kind(chart: str) -> StepKind | None:
    """Kind of the step that created ``chart``; None for the base chart."""
    check_chart(chart)
    if not chart:
        return None
    if len(chart) == 1 or chart[-1] == chart[-2]:
        return StepKind.REGULAR
    return StepKind.CRITICAL


def chart_frame(chart: str) -> ChartFrame:
    """Active, deactivated and inactive coordinates of a chart.

    The base chart has no preferred retained coordinate; we report
    ``new = x2, retained = x1``, the designation that leads to chart ``1``.
    """
    check_chart(chart)
    if not chart:
        return ChartFrame("", "x2", "x1", None, (), None)
    parent, q = chart[:-1], chart[-1]
    new = coord(opposite(q), chart)
    retained = coord(q, parent)
    deactivated = coord(opposite(q), parent)
    inactive = tuple(c for c in chart_coordinates(chart) if c not in (new, retained))
    return ChartFrame(chart, new, retained, deactivated, inactive, step_kind(chart))


def child_chart(chart: str, q: str) -> tuple[str, StepKind]:
    check_chart(chart + q)
    if len(q) != 1:
        raise MalformedChart(f"append a single symbol, got {q!r}")
    child = chart + q
    return child, step_kind(child)


def charts(level: int) -> Iterator[str]:
    """All chart labels of the given length, in lexicographic order."""
    for symbols in product("12", repeat=level):
        yield "".join(symbols)


@dataclass(frozen=True)
class TowerPoint:
    chart: str
    coords: tuple[Fraction, ...]

    def __post_init__(self):
        check_chart(self.chart)
        coords = tuple(Fraction(c) for c in self.coords)
        if len(coords) != len(self.chart) + 2:
            raise ValueError(f"chart {self.chart!r} has {len(self.chart) + 2} coordinates, got {len(coords)}")
        object.__setattr__(self, "coords", coords)

    @classmethod
    def node(cls, chart: str) -> "TowerPoint":
        return cls(chart, (Fraction(0),) * (len(chart) + 2))

    @property
    def level(self) -> int:
        return len(self.chart)

    def as_dict(self) -> dict[str, Fraction]:
        return dict(zip(chart_coordinates(self.chart), self.coords))


def project(obj: str | TowerPoint, levels: int = 1) -> str | TowerPoint:
    """Apply the tower projection ``levels`` times to a chart/node label or a point."""
    n = obj.level if isinstance(obj, TowerPoint) else len(check_chart(obj))
    if not 0 <= levels <= n:
        raise ValueError(f"cannot project {levels} levels from level {n}")
    if isinstance(obj, TowerPoint):
        return TowerPoint(obj.chart[: n - levels], obj.coords[: len(obj.coords) - levels])
    return obj[: n - levels]


def transition_last(point: TowerPoint) -> TowerPoint:
    """The same point seen in the sibling chart: only the last coordinate changes,
    to its reciprocal."""
    if not point.chart:
        raise ValueError("the base chart has no sibling")
    last = point.coords[-1]
    if not last:
        raise LastCoordinateZero(f"point of chart {point.chart!r} has last coordinate 0")
    sibling = point.chart[:-1] + opposite(point.chart[-1])
    return TowerPoint(sibling, point.coords[:-1] + (1 / last,))


def charts_containing_point(point: TowerPoint) -> frozenset[str]:
    """Charts of the point's level containing it, found by search.

    Works upward from the base: at each level the candidate charts are the
    children of the charts found one level down, and sibling transitions are
    the only moves. If some lower level turns up more than one chart the
    sibling moves no longer cover every candidate, and we refuse rather than
    under-report.
    """
    found: frozenset[str] = frozenset({""})
    for j in range(1, point.level + 1):
        if len(found) > 1:
            raise NotImplementedError(
                f"projection to level {j - 1} lies in charts {sorted(found)}; "
                "counting charts above it needs non-sibling transitions"
            )
        reps = {point.chart[:j]: project(point, point.level - j)}
        frontier = list(reps.values())
        while frontier:
            p = frontier.pop()
            try:
                q = transition_last(p)
            except LastCoordinateZero:
                continue
            if q.chart not in reps:
                reps[q.chart] = q
                frontier.append(q)
        found = frozenset(reps)
    return found


def charts_containing_node(chart: str) -> frozenset[str]:
    return charts_containing_point(TowerPoint.node(chart))


def step_roles(chart: str) -> tuple[str, str, str | None, StepKind]:
    """For the last step into ``chart``: the parent's (n, r, d) as used by that
    step, and the step kind. At level 1 the parent roles depend on which base
    coordinate is retained, so they are read off the child."""
    check_chart(chart)
    if not chart:
        raise ValueError("the base chart has no step")
    parent = chart[:-1]
    kind = step_kind(chart)
    if not parent:
        q = chart
        return coord(opposite(q)), coord(q), None, kind
    pf = chart_frame(parent)
    return pf.new, pf.retained, pf.deactivated, kind

