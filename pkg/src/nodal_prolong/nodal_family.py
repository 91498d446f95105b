"""Prolongation of the family x1*x2 = t: node binomials and the twig chain.

Two independent routes are provided wherever the theory offers them:

* node binomials by the (alpha, beta) recursion and by implicit
  differentiation of the previous binomial;
* twig multiplicities from the binomial at each node and from mediant
  insertion on the sequence 1, 1.

:func:`verify_flat_limit` eliminates the deactivated coordinates one level at
a time and checks that what survives is ``c * n**a * r**b - t``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple, Union

from .kernel import (
    Polynomial,
    const,
    primitive_part,
    solve_linear_and_eliminate,
    total_derivative,
    var,
)
from .tower import (
    StepKind,
    chart_frame,
    charts,
    check_chart,
    step_kind,
    step_roles,
)

__all__ = [
    "End",
    "TwigLabel",
    "NodeBinomial",
    "IdealPresentation",
    "TwigComponent",
    "TwigChain",
    "FlatLimit",
    "MismatchWithRecursion",
    "InconsistentChain",
    "EliminationFailed",
    "binomial_pair",
    "node_binomial",
    "ideal_generators",
    "binomials_by_differentiation",
    "central_fiber_components",
    "retained_twig",
    "emergent_twig",
    "build_chain",
    "multiplicities",
    "multiplicity_sequence",
    "verify_flat_limit",
    "twig_text",
    "swap_symbols",
]


class End(str, enum.Enum):
    """The two end twigs: prolongations of x2 = 0 (left) and x1 = 0 (right)."""

    LEFT = "left-end"
    RIGHT = "right-end"

    def __str__(self) -> str:
        return self.value


TwigLabel = Union[str, End]


class MismatchWithRecursion(AssertionError):
    pass


class InconsistentChain(AssertionError):
    pass


class EliminationFailed(AssertionError):
    pass


def twig_text(label: TwigLabel) -> str:
    return str(label) if isinstance(label, End) else f"T({label})"


def swap_symbols(label: TwigLabel) -> TwigLabel:
    """The 1 <-> 2 symmetry, which also exchanges the two ends."""
    if isinstance(label, End):
        return End.RIGHT if label is End.LEFT else End.LEFT
    return label.translate(str.maketrans("12", "21"))


# -- node binomials --------------------------------------------------------------


@lru_cache(maxsize=None)
def binomial_pair(chart: str) -> tuple[int, int]:
    """(alpha, beta) of B(chart), by the recursion from (1, 0)."""
    check_chart(chart)
    if not chart:
        return (1, 0)
    a, b = binomial_pair(chart[:-1])
    if step_kind(chart) is StepKind.REGULAR:
        return (a, a + b)
    return (a + b, a)


@dataclass(frozen=True)
class NodeBinomial:
    chart: str
    alpha: int
    beta: int

    @property
    def polynomial(self) -> Polynomial:
        f = chart_frame(self.chart)
        p = self.alpha * var(f.new) * var(f.retained)
        if self.beta:
            p = p + self.beta * var(f.deactivated)
        return p

    def render(self) -> str:
        """Compact form: ``3x1(212)x2(21)+2x1(2)``, the x1 factor first."""
        f = chart_frame(self.chart)
        pair = "".join(sorted((f.new, f.retained), key=lambda name: name[1]))
        text = ("" if self.alpha == 1 else str(self.alpha)) + pair
        if self.beta:
            text += "+" + ("" if self.beta == 1 else str(self.beta)) + f.deactivated
        return text

    def __str__(self) -> str:
        return self.render()


def node_binomial(chart: str) -> NodeBinomial:
    a, b = binomial_pair(chart)
    return NodeBinomial(chart, a, b)


@dataclass(frozen=True)
class IdealPresentation:
    chart: str
    generators: tuple[Polynomial, ...]


def ideal_generators(chart: str) -> IdealPresentation:
    """B(∅) - t, B(p1), B(p1p2), ..., B(chart)."""
    check_chart(chart)
    gens = [node_binomial("").polynomial - var("t")]
    gens += [node_binomial(chart[:i]).polynomial for i in range(1, len(chart) + 1)]
    return IdealPresentation(chart, tuple(gens))


def _prolong_generator(p: Polynomial, chart: str) -> Polynomial:
    """Implicitly differentiate ``p = 0`` across the step into ``chart``.

    Regular steps differentiate with respect to the retained coordinate r
    (dn/dr = N, dd/dr = n); critical steps with respect to n (dr/dn = N,
    dd/dn = n*N). The new coordinate N is the child's new coordinate, and the
    child's R and D keep their canonical names, so no renaming is needed.
    """
    n, r, d, kind = step_roles(chart)
    big_n = var(chart_frame(chart).new)
    if kind is StepKind.REGULAR:
        rates = {r: const(1), n: big_n}
        if d is not None:
            rates[d] = var(n)
    else:
        rates = {n: const(1), r: big_n}
        if d is not None:
            rates[d] = var(n) * big_n
    return total_derivative(p, rates)


def binomials_by_differentiation(chart: str) -> list[Polynomial]:
    """Generators of the ideal re-derived by repeated implicit differentiation,
    starting from x1*x2 - t and never consulting the (alpha, beta) recursion.

    Each derived generator is compared with :func:`node_binomial` up to a
    positive rational content; disagreement raises MismatchWithRecursion.
    """
    check_chart(chart)
    current = var("x1") * var("x2") - var("t")
    out = [current]
    for i in range(1, len(chart) + 1):
        prefix = chart[:i]
        current = _prolong_generator(current, prefix)
        expected = node_binomial(prefix).polynomial
        if primitive_part(current) != primitive_part(expected):
            raise MismatchWithRecursion(f"B({prefix}): differentiation gives {current}, recursion gives {expected}")
        out.append(current)
    return out


# -- central fiber -----------------------------------------------------------------


def emergent_twig(chart: str) -> str:
    """The twig collapsed to N(parent) by the projection: T(parent)."""
    if not check_chart(chart):
        raise ValueError("the base chart has no emergent twig")
    return chart[:-1]


def retained_twig(chart: str) -> TwigLabel:
    """The twig at N(chart) that maps isomorphically one level down.

    If the label ends in a block of k-j repeated symbols preceded by p_j, the
    retained coordinate was created at level j and the twig is T(p_1...p_{j-1});
    a single block means the retained twig is an end.
    """
    if not check_chart(chart):
        raise ValueError("the base chart has no retained twig")
    last = chart[-1]
    j = len(chart.rstrip(last))
    if j == 0:
        return End.LEFT if last == "1" else End.RIGHT
    return chart[: j - 1]


@dataclass(frozen=True)
class TwigComponent:
    kind: str  # "retained" or "emergent"
    twig: TwigLabel
    affine: str
    vanishing: tuple[str, ...]


def central_fiber_components(chart: str) -> tuple[TwigComponent, TwigComponent]:
    """The two coordinate axes making up the central fiber in a chart:
    retained (n = 0, inactive = 0, coordinate r) and emergent
    (r = 0, inactive = 0, coordinate n)."""
    if not check_chart(chart):
        raise ValueError("chart must have length at least 1")
    f = chart_frame(chart)
    retained = TwigComponent("retained", retained_twig(chart), f.retained, (f.new,) + f.inactive)
    emergent = TwigComponent("emergent", emergent_twig(chart), f.new, (f.retained,) + f.inactive)
    return retained, emergent


# -- the chain -------------------------------------------------------------------


def _common_prefix(a: str, b: str) -> str:
    i = 0
    while i < min(len(a), len(b)) and a[i] == b[i]:
        i += 1
    return a[:i]


@dataclass(frozen=True)
class TwigChain:
    level: int
    nodes: tuple[str, ...]
    twigs: tuple[TwigLabel, ...]
    multiplicities: tuple[int, ...] | None = None

    def emergent_level(self, twig: TwigLabel) -> int | None:
        return None if isinstance(twig, End) else len(twig) + 1

    def twigs_at(self, i: int) -> tuple[TwigLabel, TwigLabel]:
        """(left, right) twigs at the i-th node."""
        return self.twigs[i], self.twigs[i + 1]


def build_chain(k: int, with_multiplicities: bool = True) -> TwigChain:
    """Nodes in lexicographic order; each interior twig is labelled by the longest
    common prefix of its two nodes."""
    if k < 0:
        raise ValueError("level must be nonnegative")
    nodes = tuple(charts(k))
    twigs = (End.LEFT,) + tuple(_common_prefix(a, b) for a, b in zip(nodes, nodes[1:])) + (End.RIGHT,)
    chain = TwigChain(k, nodes, twigs)
    if with_multiplicities:
        chain = TwigChain(k, nodes, twigs, multiplicities(chain))
    return chain


def multiplicities(chain: TwigChain) -> tuple[int, ...]:
    """Per-twig multiplicities read off the node binomials: alpha on the retained
    twig and alpha + beta on the emergent twig at every node. Every interior
    twig is seen from both of its nodes and the two readings must agree."""
    seen: dict[TwigLabel, int] = {}

    def assign(twig: TwigLabel, m: int, node: str) -> None:
        if seen.setdefault(twig, m) != m:
            raise InconsistentChain(f"{twig_text(twig)} gets {seen[twig]} and {m} (at N({node}))")

    if chain.level == 0:
        assign(End.LEFT, 1, "")
        assign(End.RIGHT, 1, "")
    for i, node in enumerate(chain.nodes):
        if not node:
            continue
        a, b = binomial_pair(node)
        ret, emg = retained_twig(node), emergent_twig(node)
        if {ret, emg} != set(chain.twigs_at(i)):
            raise InconsistentChain(f"N({node}) meets {chain.twigs_at(i)} in the chain, binomial says {ret!r}, {emg!r}")
        assign(ret, a, node)
        assign(emg, a + b, node)
    return tuple(seen[t] for t in chain.twigs)


def multiplicity_sequence(k: int) -> tuple[int, ...]:
    """m_k: start from (1, 1) and k times insert the sum between neighbours."""
    if k < 0:
        raise ValueError("level must be nonnegative")
    seq = [1, 1]
    for _ in range(k):
        nxt = [seq[0]]
        for a, b in zip(seq, seq[1:]):
            nxt += [a + b, b]
        seq = nxt
    return tuple(seq)


# -- flat limit ------------------------------------------------------------------


class FlatLimit(NamedTuple):
    unit: Fraction
    exp_n: int
    exp_r: int


def verify_flat_limit(chart: str) -> FlatLimit:
    """Reduce the generator stack of a chart to a single relation ``c*n^a*r^b - t``.

    Starting from B(∅) - t, the generator B(p_1...p_i) is used to eliminate
    the coordinate deactivated at level i, for i = 1, 2, ... in turn. The
    literal unit c is reported; it depends on this elimination order.
    """
    check_chart(chart)
    gens = ideal_generators(chart).generators
    relation = gens[0]
    for i in range(1, len(chart) + 1):
        relation = solve_linear_and_eliminate(gens[i], chart_frame(chart[:i]).deactivated, relation)
    f = chart_frame(chart)
    return _monomial_minus_t(relation, f.new, f.retained, chart)


def _monomial_minus_t(relation: Polynomial, n: str, r: str, chart: str) -> FlatLimit:
    t_part = relation.coefficient((("t", 1),))
    rest = relation + var("t")
    items = rest.items()
    if t_part != -1 or len(items) != 1:
        raise EliminationFailed(f"chart {chart!r}: residual {relation} is not monomial - t")
    mono, c = items[0]
    exps = dict(mono)
    if set(exps) - {n, r}:
        raise EliminationFailed(f"chart {chart!r}: residual {relation} involves {sorted(set(exps) - {n, r})}")
    return FlatLimit(c, exps.get(n, 0), exps.get(r, 0))

