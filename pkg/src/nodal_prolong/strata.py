"""Code words of the coarse stratification, and node/twig words of the chain.

A code word is a tuple of subscripts, ``None`` standing for R. Node words are
computed two ways: :func:`node_word_recursive` goes through twig words of
lower levels and the positionwise merge at each node, while
:func:`node_word_explicit` reads the word straight off the block structure of
the label.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional, Sequence

from .nodal_family import End, TwigChain, TwigLabel, build_chain, twig_text
from .tower import check_chart

__all__ = [
    "CodeWord",
    "LocusSignature",
    "IncompatibleTwigWords",
    "validate_code_word",
    "enumerate_code_words",
    "locus_signature",
    "locus_contains",
    "twig_word",
    "node_word_recursive",
    "node_word_explicit",
    "trace_node_word",
    "TraceStep",
    "AnnotatedChain",
    "annotate_chain",
    "fibonacci",
]

Symbol = Optional[int]


class IncompatibleTwigWords(AssertionError):
    """Two twig words carry different V's in the same position."""


@dataclass(frozen=True, order=True)
class CodeWord:
    symbols: tuple[Symbol, ...]

    def __post_init__(self):
        object.__setattr__(self, "symbols", tuple(self.symbols))

    @classmethod
    def parse(cls, text: str) -> "CodeWord":
        """Read ``RV2V3`` (subscript digits may also be Unicode subscripts)."""
        text = text.translate(str.maketrans("₀₁₂₃₄₅₆₇₈₉", "0123456789")).replace(" ", "")
        if text in ("", "∅"):
            return cls(())
        if not re.fullmatch(r"(R|V\d+)*", text):
            raise ValueError(f"not a code word: {text!r}")
        return cls(tuple(None if tok == "R" else int(tok[1:]) for tok in re.findall(r"R|V\d+", text)))

    def __len__(self) -> int:
        return len(self.symbols)

    def __add__(self, other: "CodeWord") -> "CodeWord":
        return CodeWord(self.symbols + other.symbols)

    def __str__(self) -> str:
        return "".join("R" if a is None else f"V{a}" for a in self.symbols)

    def sort_key(self) -> tuple[int, ...]:
        return tuple(0 if a is None else a for a in self.symbols)


def _word(symbols: Sequence[Symbol]) -> CodeWord:
    return CodeWord(tuple(symbols))


def validate_code_word(word: CodeWord | str) -> bool:
    if isinstance(word, str):
        try:
            word = CodeWord.parse(word)
        except ValueError:
            return False
    syms = word.symbols
    if not syms or syms[0] is not None:
        return False
    for j in range(2, len(syms) + 1):
        a = syms[j - 1]
        if a is not None and a != j and a != syms[j - 2]:
            return False
    return True


def enumerate_code_words(k: int) -> list[CodeWord]:
    """All valid words of length k in lexicographic order (R before V_j, V_j by j)."""
    if k < 1:
        raise ValueError("code words have length at least 1")
    words: list[tuple[Symbol, ...]] = [(None,)]
    for j in range(2, k + 1):
        nxt = []
        for w in words:
            options = {None, j}
            if w[-1] is not None:
                options.add(w[-1])
            for a in options:
                nxt.append(w + (a,))
        words = nxt
    return sorted((CodeWord(w) for w in words), key=CodeWord.sort_key)


def fibonacci(n: int) -> int:
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


@dataclass(frozen=True)
class LocusSignature:
    level: int
    counts: tuple[int, ...]  # n_2, ..., n_k

    def n(self, j: int) -> int:
        return self.counts[j - 2]

    @property
    def codimension(self) -> int:
        return sum(self.counts)


def locus_signature(word: CodeWord) -> LocusSignature:
    if not validate_code_word(word):
        raise ValueError(f"invalid code word {word}")
    k = len(word)
    counts = [0] * max(k - 1, 0)
    for a in word.symbols:
        if a is not None:
            counts[a - 2] += 1
    return LocusSignature(k, tuple(counts))


def locus_contains(outer: CodeWord, inner: CodeWord) -> bool:
    """Whether the intersection locus of ``inner`` lies in that of ``outer``."""
    so, si = locus_signature(outer), locus_signature(inner)
    if so.level != si.level:
        raise ValueError("words of different lengths")
    return all(b >= a for a, b in zip(so.counts, si.counts))


# -- node and twig words -----------------------------------------------------------


def twig_word(label: TwigLabel, k: int) -> CodeWord:
    """Word of the twig T(label) at level k: W(label), then R, then V_{j+2}
    repeated k-1-j times. End twigs carry R^k."""
    if isinstance(label, End):
        return _word([None] * k)
    j = len(check_chart(label))
    if not 0 <= j <= k - 1:
        raise ValueError(f"T({label}) is not a twig at level {k}")
    return node_word_recursive(label) + _word([None] + [j + 2] * (k - 1 - j))


def _neighbours(label: str) -> tuple[str | None, str | None]:
    """Lexicographically adjacent labels of the same length."""
    k = len(label)
    idx = int(label.translate(str.maketrans("12", "01")), 2) if k else 0

    def unrank(i: int) -> str:
        return format(i, f"0{k}b").translate(str.maketrans("01", "12"))

    left = unrank(idx - 1) if idx > 0 else None
    right = unrank(idx + 1) if idx < 2**k - 1 else None
    return left, right


def _prefix(a: str, b: str) -> str:
    i = 0
    while i < min(len(a), len(b)) and a[i] == b[i]:
        i += 1
    return a[:i]


def _twigs_at(label: str) -> tuple[TwigLabel, TwigLabel]:
    left, right = _neighbours(label)
    return (
        End.LEFT if left is None else _prefix(left, label),
        End.RIGHT if right is None else _prefix(label, right),
    )


def merge_twig_words(a: CodeWord, b: CodeWord) -> CodeWord:
    out = []
    for x, y in zip(a.symbols, b.symbols, strict=True):
        if x == y or y is None:
            out.append(x)
        elif x is None:
            out.append(y)
        else:
            raise IncompatibleTwigWords(f"{a} and {b} disagree with V{x} against V{y}")
    return _word(out)


@lru_cache(maxsize=None)
def node_word_recursive(label: str) -> CodeWord:
    check_chart(label)
    k = len(label)
    if not k:
        return _word(())
    if label == label[0] * k:
        return _word([None] * k)
    left, right = _twigs_at(label)
    return merge_twig_words(twig_word(left, k), twig_word(right, k))


def node_word_explicit(label: str) -> CodeWord:
    """First block of the label becomes R's; a block starting at position j
    becomes V_j's."""
    check_chart(label)
    out: list[Symbol] = []
    start = 1
    for i, ch in enumerate(label, start=1):
        if i > 1 and ch != label[i - 2]:
            start = i
        out.append(None if start == 1 else start)
    return _word(out)


# -- level-by-level trace ----------------------------------------------------------


@dataclass(frozen=True)
class TraceStep:
    level: int
    node: str
    node_word: CodeWord
    left_twig: TwigLabel | None
    right_twig: TwigLabel | None
    left_word: CodeWord | None
    right_word: CodeWord | None
    emergent: str | None  # "left" or "right": which twig emerged from the previous node

    def twigs(self) -> list[tuple[str, TwigLabel, CodeWord]]:
        if self.left_twig is None:
            return []
        return [("left", self.left_twig, self.left_word), ("right", self.right_twig, self.right_word)]


def trace_node_word(label: str) -> list[TraceStep]:
    """Node words of N(label) and all its projections, with the two twigs at each
    of those nodes and their words."""
    check_chart(label)
    steps = [TraceStep(0, "", _word(()), None, None, None, None, None)]
    for i in range(1, len(label) + 1):
        node = label[:i]
        left, right = _twigs_at(node)
        emerged = node[:-1]
        side = "left" if left == emerged else "right"
        steps.append(
            TraceStep(
                i,
                node,
                node_word_recursive(node),
                left,
                right,
                twig_word(left, i),
                twig_word(right, i),
                side,
            )
        )
    return steps


# -- annotated chain ---------------------------------------------------------------


@dataclass(frozen=True)
class AnnotatedChain:
    chain: TwigChain
    node_words: tuple[CodeWord, ...]
    twig_words: tuple[CodeWord, ...]

    @property
    def level(self) -> int:
        return self.chain.level

    def rows(self) -> Iterator[tuple[str, str, str]]:
        """("twig"|"node", label text, word text) from left to right."""
        for i, twig in enumerate(self.chain.twigs):
            yield "twig", twig_text(twig), str(self.twig_words[i])
            if i < len(self.chain.nodes):
                yield "node", f"N({self.chain.nodes[i]})", str(self.node_words[i])


def annotate_chain(chain: TwigChain | int) -> AnnotatedChain:
    if isinstance(chain, int):
        chain = build_chain(chain)
    k = chain.level
    nodes = tuple(node_word_recursive(n) for n in chain.nodes)
    twigs = tuple(twig_word(t, k) for t in chain.twigs)
    return AnnotatedChain(chain, nodes, twigs)
