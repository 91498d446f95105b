from math import gcd

import pytest
import sympy

from nodal_prolong.kernel import primitive_part
from nodal_prolong.nodal_family import (
    End,
    InconsistentChain,
    TwigChain,
    binomial_pair,
    binomials_by_differentiation,
    build_chain,
    central_fiber_components,
    ideal_generators,
    multiplicities,
    multiplicity_sequence,
    node_binomial,
    swap_symbols,
    verify_flat_limit,
)
from nodal_prolong.parsing import parse_polynomial as P
from nodal_prolong.tower import chart_frame, charts

from oracles import starred, stern, to_sympy

# Reference renderings of every binomial up to length 3. The 211 entry ends
# in x2(21): the coordinate deactivated at level 3 of that chart.
BINOMIALS_TO_LENGTH_3 = {
    "": "x1x2",
    "1": "x1x2(1)+x2",
    "11": "x1x2(11)+2x2(1)",
    "111": "x1x2(111)+3x2(11)",
    "112": "3x1(112)x2(11)+x1",
    "12": "2x1(12)x2(1)+x1",
    "121": "3x1(12)x2(121)+2x2(1)",
    "122": "2x1(122)x2(1)+3x1(12)",
    "2": "x1(2)x2+x1",
    "21": "2x1(2)x2(21)+x2",
    "211": "2x1(2)x2(211)+3x2(21)",
    "212": "3x1(212)x2(21)+2x1(2)",
    "22": "x1(22)x2+2x1(2)",
    "221": "3x1(22)x2(221)+x2",
    "222": "x1(222)x2+3x1(22)",
}


@pytest.mark.parametrize("chart", sorted(BINOMIALS_TO_LENGTH_3))
def test_binomial_rendering(chart):
    assert node_binomial(chart).render() == BINOMIALS_TO_LENGTH_3[chart]


def test_reference_text_parses_back_to_the_binomial():
    for chart, text in BINOMIALS_TO_LENGTH_3.items():
        assert node_binomial(chart).polynomial == P(starred(text))


def test_base_pair():
    assert binomial_pair("") == (1, 0)
    assert node_binomial("").polynomial == P("x1*x2")


def test_ideal_generators():
    assert ideal_generators("212").generators == tuple(
        P(s) for s in ["x1*x2 - t", "x1(2)*x2 + x1", "2*x1(2)*x2(21) + x2", "3*x1(212)*x2(21) + 2*x1(2)"]
    )
    assert ideal_generators("").generators == (P("x1*x2 - t"),)
    assert ideal_generators("11").generators == tuple(
        P(s) for s in ["x1*x2 - t", "x1*x2(1) + x2", "x1*x2(11) + 2*x2(1)"]
    )


def test_binomials_by_differentiation_examples():
    assert primitive_part(binomials_by_differentiation("21")[-1]) == P("2*x1(2)*x2(21) + x2")
    assert primitive_part(binomials_by_differentiation("1")[-1]) == P("x1*x2(1) + x2")


@pytest.mark.parametrize("k", range(5))
def test_differentiation_agrees_with_recursion(k):
    for chart in charts(k):
        derived = binomials_by_differentiation(chart)
        assert [primitive_part(p) for p in derived[1:]] == [
            primitive_part(node_binomial(chart[:i]).polynomial) for i in range(1, k + 1)
        ]


def test_central_fiber_running_example():
    ret, emg = central_fiber_components("212")
    assert (ret.twig, ret.affine, set(ret.vanishing)) == ("2", "x2(21)", {"x1(212)", "x1", "x2", "x1(2)"})
    assert (emg.twig, emg.affine, set(emg.vanishing)) == ("21", "x1(212)", {"x2(21)", "x1", "x2", "x1(2)"})


def test_central_fiber_level_one():
    ret, emg = central_fiber_components("1")
    # retained: the x2(1)-axis over x1 = x2 = 0 ... lies in the lift of x2 = 0
    assert ret.twig is End.LEFT and ret.affine == "x1"
    assert emg.twig == "" and emg.affine == "x2(1)"
    assert central_fiber_components("222")[0].twig is End.RIGHT


def test_chain_layouts():
    c3 = build_chain(3)
    assert c3.nodes == tuple(charts(3))
    assert c3.twigs == (End.LEFT, "11", "1", "12", "", "21", "2", "22", End.RIGHT)
    c0 = build_chain(0)
    assert (c0.nodes, c0.twigs) == (("",), (End.LEFT, End.RIGHT))
    c1 = build_chain(1)
    assert (c1.nodes, c1.twigs) == (("1", "2"), (End.LEFT, "", End.RIGHT))


def test_running_example_multiplicities():
    chain = build_chain(3)
    m = dict(zip(chain.twigs, chain.multiplicities))
    assert (m["2"], m["21"]) == (3, 5)
    assert multiplicities(build_chain(2, with_multiplicities=False)) == (1, 3, 2, 3, 1)
    for k in range(6):
        ms = build_chain(k).multiplicities
        assert ms[0] == ms[-1] == 1


def test_inconsistent_chain_is_detected():
    good = build_chain(2, with_multiplicities=False)
    bad = TwigChain(2, good.nodes, (End.LEFT, "1", "2", "", End.RIGHT))
    with pytest.raises(InconsistentChain):
        multiplicities(bad)


@pytest.mark.parametrize(
    "k, expected",
    [(0, (1, 1)), (1, (1, 2, 1)), (2, (1, 3, 2, 3, 1)), (3, (1, 4, 3, 5, 2, 5, 3, 4, 1))],
)
def test_multiplicity_tables(k, expected):
    assert multiplicity_sequence(k) == expected


def test_multiplicity_sequence_is_stern_row():
    for k in range(11):
        assert multiplicity_sequence(k) == tuple(stern(n) for n in range(2**k, 2 ** (k + 1) + 1))
    m5 = multiplicity_sequence(5)
    assert len(m5) == 33 and m5 == m5[::-1] and m5[16] == 2


@pytest.mark.parametrize("k", range(8))
def test_per_node_multiplicities_agree_with_sequence(k):
    assert build_chain(k).multiplicities == multiplicity_sequence(k)


def test_flat_limit_examples():
    assert verify_flat_limit("212")[1:] == (3, 5)
    assert verify_flat_limit("212").unit != 0
    assert verify_flat_limit("1")[1:] == (1, 2)
    assert verify_flat_limit("") == (1, 1, 1)


def _sympy_flat_limit(chart: str):
    gens = [to_sympy(g) for g in ideal_generators(chart).generators]
    relation = gens[0]
    for i in range(1, len(chart) + 1):
        d = sympy.Symbol(chart_frame(chart[:i]).deactivated)
        (sol,) = sympy.solve(gens[i], d)
        relation = sympy.expand(relation.subs(d, sol))
    f = chart_frame(chart)
    n, r, t = sympy.symbols([f.new, f.retained, "t"])
    poly = sympy.Poly(relation + t, n, r)
    assert len(poly.terms()) == 1
    (exps, c), = poly.terms()
    return c, exps


@pytest.mark.parametrize("chart", [c for k in range(1, 5) for c in charts(k)])
def test_flat_limit_against_sympy(chart):
    flat = verify_flat_limit(chart)
    c, exps = _sympy_flat_limit(chart)
    assert (flat.exp_n, flat.exp_r) == exps
    assert flat.unit == sympy.Rational(c)
    a, b = binomial_pair(chart)
    assert exps == (a, a + b)


def test_pairs_are_coprime_to_length_12():
    for k in range(13):
        for chart in charts(k):
            a, b = binomial_pair(chart)
            assert gcd(a, a + b) == 1


def test_chain_symmetry():
    for k in range(7):
        chain = build_chain(k)
        assert tuple(swap_symbols(t) for t in reversed(chain.twigs)) == chain.twigs
        assert chain.multiplicities[::-1] == chain.multiplicities


def test_emergent_twig_joins_adjacent_nodes():
    for k in range(1, 7):
        chain = build_chain(k, with_multiplicities=False)
        for chart in charts(k):
            sibling = chart[:-1] + ("1" if chart[-1] == "2" else "2")
            i, j = sorted((chain.nodes.index(chart), chain.nodes.index(sibling)))
            assert j == i + 1
            assert chain.twigs[j] == chart[:-1]
