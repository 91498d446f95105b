"""Command-line front end.

Exit codes: 0 success, 1 a verification check failed, 2 usage or parse error,
3 internal invariant breach (two algorithms disagreeing).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import nodal_family as nf
from . import strata
from .parsing import ParseError, parse_curve_spec
from .prolong import ORDER_ENV, ProlongError, default_order, prolong
from .render import chain_ascii, chain_dot, chain_to_json, trace_ascii, trace_dot
from .tower import MalformedChart, chart_coordinates, charts, check_chart

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _label(text: str) -> str:
    text = "" if text in ("∅", "-") else text
    try:
        return check_chart(text)
    except MalformedChart as exc:
        raise UsageError(str(exc)) from exc


def _level(text: str) -> int:
    k = int(text)
    if k < 0:
        raise argparse.ArgumentTypeError("level must be nonnegative")
    return k


def cmd_binomials(args) -> int:
    if args.all:
        if args.level is None:
            raise UsageError("--all needs --level")
        labels = [c for k in range(args.level + 1) for c in charts(k)]
    else:
        if args.chart is None:
            raise UsageError("give --chart LABEL or --all --level K")
        chart = _label(args.chart)
        labels = [chart[:i] for i in range(len(chart) + 1)]
    bins = [nf.node_binomial(c) for c in labels]
    if args.format == "json":
        doc = [{"chart": b.chart, "alpha": b.alpha, "beta": b.beta, "binomial": b.render()} for b in bins]
        print(json.dumps(doc, indent=2))
    else:
        for b in bins:
            print(b.render())
    return EXIT_OK


def cmd_chain(args) -> int:
    annotated = strata.annotate_chain(nf.build_chain(args.level))
    if args.format == "json":
        sys.stdout.write(chain_to_json(annotated))
    elif args.format == "dot":
        sys.stdout.write(chain_dot(annotated, args.words, args.multiplicities))
    else:
        sys.stdout.write(chain_ascii(annotated, args.words, args.multiplicities))
    return EXIT_OK


def cmd_codewords(args) -> int:
    if args.level < 1:
        raise UsageError("code words have length at least 1")
    words = strata.enumerate_code_words(args.level)
    for w in words:
        print(w)
    print(f"count={len(words)} (F_{2 * args.level - 1})")
    return EXIT_OK


def cmd_nodeword(args) -> int:
    label = _label(args.label)
    recursive = strata.node_word_recursive(label)
    explicit = strata.node_word_explicit(label)
    if args.trace:
        steps = strata.trace_node_word(label)
        sys.stdout.write(trace_dot(steps) if args.format == "dot" else trace_ascii(steps))
    print(f"recursive: {recursive}")
    print(f"explicit:  {explicit}")
    if recursive != explicit:
        print(f"internal error: node word algorithms disagree on N({label})", file=sys.stderr)
        return EXIT_INTERNAL
    print(recursive)
    return EXIT_OK


def cmd_prolong(args) -> int:
    path = Path(args.spec)
    try:
        text = path.read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc
    try:
        spec = parse_curve_spec(text)
    except ParseError as exc:
        print(f"{path}:{exc.line}:{exc.column}: {exc.message}", file=sys.stderr)
        return EXIT_USAGE
    order = args.order or default_order(len(spec.chart) + args.levels)
    c = spec.curve(order)
    try:
        lifted = prolong(c, args.levels)
    except ProlongError as exc:
        print(f"prolongation failed: {exc}", file=sys.stderr)
        return EXIT_FAIL
    print(f"chart: {lifted.chart or '∅'}")
    history = " ".join(k.value for k in lifted.steps) or "(none)"
    print(f"steps: {history}")
    for name, s in zip(chart_coordinates(lifted.chart), lifted.coords):
        print(f"{name} = {s}")
    return EXIT_OK


def verify_level(k: int) -> list[tuple[str, str, bool, str]]:
    """(chart, check, passed, detail) for each chart at level k and each of the
    three cross-checks."""
    results = []
    for chart in charts(k):
        b = nf.node_binomial(chart)
        try:
            derived = nf.binomials_by_differentiation(chart)[-1]
            results.append((chart, "binomial", True, str(derived)))
        except nf.MismatchWithRecursion as exc:
            results.append((chart, "binomial", False, str(exc)))
        try:
            flat = nf.verify_flat_limit(chart)
            ok = flat.unit != 0 and (flat.exp_n, flat.exp_r) == (b.alpha, b.alpha + b.beta)
            results.append((chart, "flat-limit", ok, f"{flat.unit}*n^{flat.exp_n}*r^{flat.exp_r} - t"))
        except (nf.EliminationFailed, ValueError) as exc:
            results.append((chart, "flat-limit", False, str(exc)))
        rec, exp = strata.node_word_recursive(chart), strata.node_word_explicit(chart)
        results.append((chart, "node-word", rec == exp, str(rec) if rec == exp else f"{rec} != {exp}"))
    return results


def cmd_verify(args) -> int:
    if args.level < 1:
        raise UsageError("verify needs --level >= 1")
    results = verify_level(args.level)
    failed = 0
    for chart, check, ok, detail in results:
        failed += not ok
        print(f"{'PASS' if ok else 'FAIL'} {check:<10} {chart}  {detail}")
    print(f"{len(results) - failed}/{len(results)} checks passed")
    return EXIT_FAIL if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nodal-prolong",
        description="Prolongation of the nodal family x1*x2 = t into the monster tower.",
        epilog=f"Truncation order for prolong defaults to 2k+4; override with ${ORDER_ENV}.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("binomials", help="node binomials of a chart and its prefixes")
    p.add_argument("--chart", help="chart label over {1,2}; empty string for the base")
    p.add_argument("--all", action="store_true", help="every chart up to --level")
    p.add_argument("--level", type=_level)
    p.add_argument("--format", choices=["ascii", "json"], default="ascii")
    p.set_defaults(func=cmd_binomials)

    p = sub.add_parser("chain", help="the twig chain of the k-th prolongation")
    p.add_argument("--level", type=_level, required=True)
    p.add_argument("--format", choices=["ascii", "dot", "json"], default="ascii")
    p.add_argument("--words", action="store_true", help="annotate node and twig words")
    p.add_argument("--multiplicities", action="store_true", help="annotate twig multiplicities")
    p.set_defaults(func=cmd_chain)

    p = sub.add_parser("codewords", help="enumerate code words of a length")
    p.add_argument("--level", type=_level, required=True)
    p.set_defaults(func=cmd_codewords)

    p = sub.add_parser("nodeword", help="node word of N(label), by both algorithms")
    p.add_argument("label")
    p.add_argument("--trace", action="store_true", help="show the level-by-level computation")
    p.add_argument("--format", choices=["ascii", "dot"], default="ascii")
    p.set_defaults(func=cmd_nodeword)

    p = sub.add_parser("prolong", help="lift a parametrized curve")
    p.add_argument("spec", help="curve specification file")
    p.add_argument("--levels", type=_level, default=1)
    p.add_argument("--order", type=int, help="truncation order (default 2k+4)")
    p.set_defaults(func=cmd_prolong)

    p = sub.add_parser("verify", help="run the cross-checks for every chart of a level")
    p.add_argument("--level", type=_level, required=True)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
