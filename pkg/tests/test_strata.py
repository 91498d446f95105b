import itertools

import pytest

from nodal_prolong.nodal_family import End, build_chain, swap_symbols
from nodal_prolong.strata import (
    CodeWord,
    IncompatibleTwigWords,
    annotate_chain,
    enumerate_code_words,
    fibonacci,
    locus_contains,
    locus_signature,
    merge_twig_words,
    node_word_explicit,
    node_word_recursive,
    trace_node_word,
    twig_word,
    validate_code_word,
)
from nodal_prolong.tower import charts

from oracles import blocks_word, fibonacci_binet

W = CodeWord.parse

# Third prolongation, left to right. End twigs are checked separately.
LEVEL3_NODE_WORDS = ["RRR", "RRV3", "RV2V3", "RV2V2", "RV2V2", "RV2V3", "RRV3", "RRR"]
LEVEL3_TWIG_WORDS = ["RRR", "RRV3", "RV2R", "RV2V2", "RV2R", "RRV3", "RRR"]


def test_parse_and_render():
    w = W("RV₂V₃")
    assert w.symbols == (None, 2, 3)
    assert str(w) == "RV2V3"
    assert W("∅") == W("") == CodeWord(())
    with pytest.raises(ValueError):
        W("RX2")


@pytest.mark.parametrize("word, ok", [("RV2V3", True), ("V2RR", False), ("RV3R", False), ("", False)])
def test_validate(word, ok):
    assert validate_code_word(word) is ok


def _brute_force_words(k: int) -> set[str]:
    alphabet = [None] + list(range(2, k + 1))
    found = set()
    for syms in itertools.product(alphabet, repeat=k):
        if syms[0] is not None:
            continue
        if all(a is None or a == j or a == syms[j - 2] for j, a in zip(range(2, k + 1), syms[1:])):
            found.add(str(CodeWord(syms)))
    return found


def test_enumerate_small():
    assert [str(w) for w in enumerate_code_words(3)] == ["RRR", "RRV3", "RV2R", "RV2V2", "RV2V3"]
    assert [str(w) for w in enumerate_code_words(1)] == ["R"]
    assert len(enumerate_code_words(4)) == 13


@pytest.mark.parametrize("k", range(1, 7))
def test_enumerate_against_brute_force(k):
    assert {str(w) for w in enumerate_code_words(k)} == _brute_force_words(k)


def test_fibonacci_helper():
    assert [fibonacci(n) for n in range(1, 20)] == [fibonacci_binet(n) for n in range(1, 20)]


@pytest.mark.parametrize(
    "word, counts, codim",
    [("RV2V3", (1, 1), 2), ("RRR", (0, 0), 0), ("RV2V2", (2, 0), 2)],
)
def test_signature(word, counts, codim):
    sig = locus_signature(W(word))
    assert sig.counts == counts and sig.codimension == codim


def test_locus_contains():
    assert locus_contains(W("RRV3"), W("RV2V3"))
    assert not locus_contains(W("RRV3"), W("RV2V2"))
    assert all(locus_contains(W("RRR"), w) for w in enumerate_code_words(3))


@pytest.mark.parametrize(
    "label, k, word",
    [("", 3, "RV2V2"), ("2", 3, "RRV3"), ("212", 5, "RV2V3RV5"), (End.LEFT, 3, "RRR"), (End.RIGHT, 4, "RRRR")],
)
def test_twig_word(label, k, word):
    assert str(twig_word(label, k)) == word


@pytest.mark.parametrize(
    "label, word",
    [("21221", "RV2V3V3V5"), ("111", "RRR"), ("212", "RV2V3"), ("222122112", "RRRV4V5V5V7V7V9"), ("11111", "RRRRR")],
)
def test_node_word_both_ways(label, word):
    assert str(node_word_recursive(label)) == word
    assert str(node_word_explicit(label)) == word


@pytest.mark.parametrize("k", range(1, 11))
def test_explicit_formula_against_block_oracle(k):
    for label in charts(k):
        assert str(node_word_explicit(label)) == blocks_word(label)


def test_merge_rejects_clashing_subscripts():
    assert merge_twig_words(W("RRV3"), W("RV2R")) == W("RV2V3")
    with pytest.raises(IncompatibleTwigWords):
        merge_twig_words(W("RV2"), W("RV3"))
    with pytest.raises(ValueError):
        merge_twig_words(W("RR"), W("RRR"))


def test_words_are_valid_and_swap_invariant():
    for k in range(1, 9):
        for label in charts(k):
            w = node_word_recursive(label)
            assert validate_code_word(w)
            assert node_word_recursive(swap_symbols(label)) == w


def test_adjacent_twig_words_never_clash():
    for k in range(1, 11):
        chain = annotate_chain(k)
        for i in range(len(chain.chain.nodes)):
            merge_twig_words(chain.twig_words[i], chain.twig_words[i + 1])


def test_level_three_words():
    chain = annotate_chain(3)
    assert [str(w) for w in chain.node_words] == LEVEL3_NODE_WORDS
    assert [str(w) for w in chain.twig_words[1:-1]] == LEVEL3_TWIG_WORDS
    assert [str(w) for w in (chain.twig_words[0], chain.twig_words[-1])] == ["RRR", "RRR"]


def test_small_chains():
    c1 = annotate_chain(1)
    assert [str(w) for w in c1.node_words] == ["R", "R"] and str(c1.twig_words[1]) == "R"
    assert [str(w) for w in annotate_chain(2).node_words] == ["RR", "RV2", "RV2", "RR"]


def test_trace_of_running_example():
    steps = trace_node_word("21221")
    assert [s.node for s in steps] == ["", "2", "21", "212", "2122", "21221"]
    emerged = [s.left_twig if s.emergent == "left" else s.right_twig for s in steps[1:]]
    assert emerged == ["", "2", "21", "212", "2122"]
    assert steps[1].twigs()[1][1] is End.RIGHT
    assert str(steps[-1].node_word) == "RV2V3V3V5"


def test_trace_small():
    (base, one) = trace_node_word("1")
    assert str(one.node_word) == "R"
    assert [str(s.node_word) for s in trace_node_word("212")] == ["", "R", "RV2", "RV2V3"]
