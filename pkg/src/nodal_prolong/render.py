"""Text emitters for chains, traces and binomial tables.

ASCII chains follow the picture of the central fiber: nodes sit alternately
low and high, starting low at the left, and each twig is drawn as ``\\`` or
``/`` between them. DOT output has one vertex per node (plus a point vertex
for each end) and one edge per twig. JSON chains use the fixed schema::

    {"level": k,
     "nodes": [{"label": "212", "word": "RV2V3"}, ...],
     "twigs": [{"label": "21" | "left-end" | "right-end",
                "word": "RV2R", "multiplicity": 5, "emergent_level": 3}, ...]}

Empty labels are ``""`` in JSON and ``∅`` in the text formats.
"""

from __future__ import annotations

import json

from .nodal_family import End, TwigChain, TwigLabel, multiplicities
from .strata import AnnotatedChain, CodeWord, TraceStep

__all__ = [
    "node_text",
    "label_text",
    "chain_ascii",
    "chain_dot",
    "chain_to_json",
    "chain_from_json",
    "trace_ascii",
    "trace_dot",
]


def node_text(label: str) -> str:
    return f"N({label or '∅'})"


def label_text(twig: TwigLabel) -> str:
    return str(twig) if isinstance(twig, End) else f"T({twig or '∅'})"


def _twig_lines(chain: AnnotatedChain, i: int, words: bool, mults: bool) -> list[str]:
    lines = [label_text(chain.chain.twigs[i])]
    if words:
        lines.append(str(chain.twig_words[i]))
    if mults:
        lines.append(f"m={chain.chain.multiplicities[i]}")
    return lines


def chain_ascii(chain: AnnotatedChain, words: bool = False, mults: bool = False) -> str:
    nodes = chain.chain.nodes
    twig_rows = 1 + words + mults
    node_rows = 1 + words
    # one column per twig and per node, interleaved: t0 n0 t1 n1 ... t_N
    columns = []
    for i in range(len(chain.chain.twigs)):
        previous_high = i == 0 or (i - 1) % 2 == 1
        glyph = "\\" if previous_high else "/"
        columns.append(("twig", [glyph] + _twig_lines(chain, i, words, mults)))
        if i < len(nodes):
            cell = [node_text(nodes[i])] + ([str(chain.node_words[i])] if words else [])
            columns.append(("high" if i % 2 else "low", cell))
    height = node_rows + 1 + twig_rows + node_rows
    grid = [[""] * len(columns) for _ in range(height)]
    for c, (kind, cell) in enumerate(columns):
        if kind == "high":
            rows = range(0, node_rows)
        elif kind == "low":
            rows = range(height - node_rows, height)
        else:
            rows = range(node_rows, node_rows + 1 + twig_rows)
        for r, text in zip(rows, cell):
            grid[r][c] = text
    widths = [max(len(grid[r][c]) for r in range(height)) for c in range(len(columns))]
    lines = ["  ".join(grid[r][c].center(widths[c]) for c in range(len(columns))).rstrip() for r in range(height)]
    return "\n".join(lines) + "\n"


def _dot_escape(text: str) -> str:
    return text.replace("\\", "\\\\").replace('"', '\\"')


def chain_dot(chain: AnnotatedChain, words: bool = False, mults: bool = False) -> str:
    k = chain.level
    out = [f"graph chain_{k} {{", "  rankdir=LR;", "  node [shape=plaintext];"]
    out.append("  left_end [shape=point];")
    for i, label in enumerate(chain.chain.nodes):
        text = _dot_escape(node_text(label)) + (f"\\n{chain.node_words[i]}" if words else "")
        out.append(f'  n{i} [label="{text}"];')
    out.append("  right_end [shape=point];")
    ends = ["left_end"] + [f"n{i}" for i in range(len(chain.chain.nodes))] + ["right_end"]
    for i in range(len(chain.chain.twigs)):
        text = "\\n".join(_dot_escape(s) for s in _twig_lines(chain, i, words, mults))
        out.append(f'  {ends[i]} -- {ends[i + 1]} [label="{text}"];')
    out.append("}")
    return "\n".join(out) + "\n"


def chain_to_json(chain: AnnotatedChain) -> str:
    mults = chain.chain.multiplicities or multiplicities(chain.chain)
    doc = {
        "level": chain.level,
        "nodes": [{"label": n, "word": str(w)} for n, w in zip(chain.chain.nodes, chain.node_words)],
        "twigs": [
            {
                "label": str(t) if isinstance(t, End) else t,
                "word": str(w),
                "multiplicity": m,
                "emergent_level": chain.chain.emergent_level(t),
            }
            for t, w, m in zip(chain.chain.twigs, chain.twig_words, mults)
        ],
    }
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def chain_from_json(text: str) -> AnnotatedChain:
    doc = json.loads(text)
    twigs = tuple(End(t["label"]) if t["label"] in (End.LEFT.value, End.RIGHT.value) else t["label"] for t in doc["twigs"])
    chain = TwigChain(
        doc["level"],
        tuple(n["label"] for n in doc["nodes"]),
        twigs,
        tuple(t["multiplicity"] for t in doc["twigs"]),
    )
    return AnnotatedChain(
        chain,
        tuple(CodeWord.parse(n["word"]) for n in doc["nodes"]),
        tuple(CodeWord.parse(t["word"]) for t in doc["twigs"]),
    )


def trace_ascii(steps: list[TraceStep]) -> str:
    """The two parallel trees of a node-word computation, one column per level.

    Upper block: the left twig, the node, the right twig. Lower block: their
    words. A ``*`` marks the twig that emerged from the previous node.
    """

    def mark(step: TraceStep, side: str, text: str) -> str:
        return text + ("*" if step.emergent == side else "")

    rows: list[list[str]] = [[] for _ in range(7)]
    for st in steps:
        if st.left_twig is None:
            col = ["", node_text(st.node), "", "", "", "∅", ""]
        else:
            col = [
                mark(st, "left", label_text(st.left_twig)),
                node_text(st.node),
                mark(st, "right", label_text(st.right_twig)),
                "",
                mark(st, "left", str(st.left_word)),
                str(st.node_word),
                mark(st, "right", str(st.right_word)),
            ]
        for r, text in enumerate(col):
            rows[r].append(text)
    widths = [max(len(rows[r][c]) for r in range(7)) for c in range(len(steps))]
    lines = ["  ".join(rows[r][c].ljust(widths[c]) for c in range(len(steps))).rstrip() for r in range(7)]
    lines.append("(* twig emerging from the previous node)")
    return "\n".join(lines) + "\n"


def trace_dot(steps: list[TraceStep]) -> str:
    out = ["digraph trace {", "  rankdir=LR;", "  node [shape=box];"]
    for st in steps:
        out.append(f'  v{st.level} [label="{node_text(st.node)}\\n{st.node_word or "∅"}"];')
        if st.level:
            out.append(f"  v{st.level - 1} -> v{st.level};")
            for side, twig, word in st.twigs():
                style = "dotted" if st.emergent == side else "solid"
                out.append(f'  t{st.level}{side[0]} [shape=plaintext, label="{label_text(twig)}\\n{word}"];')
                out.append(f"  v{st.level} -> t{st.level}{side[0]} [style={style}, arrowhead=none];")
    out.append("}")
    return "\n".join(out) + "\n"
