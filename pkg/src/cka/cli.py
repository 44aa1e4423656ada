"""Command-line front end.

Subcommands: refines, equal, member, lang, dot, laws, star.  Exit code 0
means the query holds, 1 means it fails, 2 means the input was rejected
(lexical, syntax, file or validation error).

Two pre-built four-event partial strings are available as complete
operands: ``P4``, two independent two-chains with labels a,b each, and
``N4``, the same events with one extra cross ordering.  The pair
separates refinement from language equality.  Inside larger expressions
those spellings are ordinary one-event labels.
"""

from __future__ import annotations

import argparse
import sys
import time
from dataclasses import dataclass
from typing import Optional

from .expr import ExprError, evaluate, parse, tokenize
from .language import language
from .partial_string import (
    DependenceRelation,
    InvalidPartialString,
    Morphism,
    PartialString,
    TextFormatError,
    chain,
    find_morphism,
    from_strict_pairs,
    from_text,
    par,
    seq,
    to_dot,
    weakseq,
)
from .program import (
    Program,
    contains,
    equals,
    program_of,
    program_to_text,
    star,
    subset,
)
from .testkit import GenConfig, law_suite

DEFAULT_SEED = 271828


@dataclass(frozen=True)
class Verdict:
    """Outcome of one query: holds/fails, optional witness, elapsed time."""

    outcome: str
    witness: Optional[Morphism] = None
    elapsed_ms: float = 0.0


def example_strings() -> dict[str, PartialString]:
    """Named partial strings usable as expression operands."""
    return {
        "P4": par(chain(("a", "b")), chain(("a", "b"))),
        "N4": from_strict_pairs(("a", "a", "b", "b"), [(0, 2), (0, 3), (1, 3)]),
    }


def _seq_compose(weak_dep: Optional[str]):
    """Composition used for ';': strong by default, weak under --weak-dep."""
    if weak_dep is None:
        return seq
    spec = weak_dep.strip()
    if spec == "full":
        return lambda x, y: weakseq(
            x, y, DependenceRelation.full(set(x.labels) | set(y.labels))
        )
    if spec in ("empty", "none"):
        relation = DependenceRelation.none()
        return lambda x, y: weakseq(x, y, relation)
    pairs = []
    for item in spec.split(","):
        a, sep, b = item.partition(":")
        if not sep or not a.strip() or not b.strip():
            raise ValueError(
                f"bad dependence item {item!r}; use label:label, 'full' or 'empty'"
            )
        pairs.append((a.strip(), b.strip()))
    relation = DependenceRelation.of(pairs)
    return lambda x, y: weakseq(x, y, relation)


def _eval_operand(text: str, seq_compose) -> Program:
    name = text.strip()
    examples = example_strings()
    if name in examples:
        return program_of((examples[name],))
    return evaluate(parse(tokenize(text)), seq_compose)


def _single_generator(p: Program, what: str) -> PartialString:
    if len(p.generators) != 1:
        raise ValueError(
            f"{what} must denote a single generator, got {len(p.generators)} generators"
        )
    return p.generators[0]


def _load_file(path: str) -> PartialString:
    with open(path, "r", encoding="utf-8") as handle:
        return from_text(handle.read())


def _print_verdict(verdict: Verdict, src: PartialString | None, tgt: PartialString | None) -> None:
    print(verdict.outcome)
    if verdict.witness is not None:
        if src is None or tgt is None or not verdict.witness.is_valid(src, tgt):
            raise RuntimeError("witness failed revalidation")
        pairs = " ".join(f"{i}->{t}" for i, t in enumerate(verdict.witness.mapping))
        print(f"witness: {pairs}")
    print(f"elapsed-ms: {verdict.elapsed_ms:.3f}")


def cmd_refines(args) -> int:
    compose = _seq_compose(args.weak_dep)
    start = time.perf_counter()
    if args.pomset:
        left = _single_generator(_eval_operand(args.left, compose), "left operand")
        right = _single_generator(_eval_operand(args.right, compose), "right operand")
        witness = find_morphism(right, left)
        verdict = Verdict(
            "holds" if witness is not None else "fails",
            witness,
            (time.perf_counter() - start) * 1000.0,
        )
        _print_verdict(verdict, right, left)
    else:
        holds = subset(
            _eval_operand(args.left, compose), _eval_operand(args.right, compose)
        )
        verdict = Verdict(
            "holds" if holds else "fails",
            None,
            (time.perf_counter() - start) * 1000.0,
        )
        _print_verdict(verdict, None, None)
    return 0 if verdict.outcome == "holds" else 1


def cmd_equal(args) -> int:
    compose = _seq_compose(args.weak_dep)
    start = time.perf_counter()
    holds = equals(
        _eval_operand(args.left, compose), _eval_operand(args.right, compose)
    )
    verdict = Verdict(
        "holds" if holds else "fails", None, (time.perf_counter() - start) * 1000.0
    )
    _print_verdict(verdict, None, None)
    return 0 if holds else 1


def cmd_member(args) -> int:
    compose = _seq_compose(args.weak_dep)
    if args.file is not None:
        if args.element is not None:
            raise ValueError("give either an element expression or --file, not both")
        element = _load_file(args.file)
    elif args.element is not None:
        element = _single_generator(
            _eval_operand(args.element, compose), "element expression"
        )
    else:
        raise ValueError("an element expression or --file is required")
    holds = contains(_eval_operand(args.program, compose), element)
    print("holds" if holds else "fails")
    return 0 if holds else 1


def cmd_lang(args) -> int:
    if args.max_display is not None and args.max_display < 0:
        raise ValueError("--max-display must be nonnegative")
    compose = _seq_compose(args.weak_dep)
    words = sorted(language(_eval_operand(args.expr, compose)))
    shown = words if args.max_display is None else words[: args.max_display]
    for word in shown:
        print(" ".join(word))
    if len(shown) < len(words):
        print(f"# {len(words) - len(shown)} more words omitted")
    return 0


def cmd_dot(args) -> int:
    if args.file is not None:
        if args.expr is not None:
            raise ValueError("give either an expression or --file, not both")
        target = _load_file(args.file)
    elif args.expr is not None:
        compose = _seq_compose(args.weak_dep)
        target = _single_generator(_eval_operand(args.expr, compose), "expression")
    else:
        raise ValueError("an expression or --file is required")
    print(to_dot(target))
    return 0


def cmd_star(args) -> int:
    compose = _seq_compose(args.weak_dep)
    op = par if args.op == "par" else seq
    result = star(_eval_operand(args.expr, compose), op, args.bound)
    text = program_to_text(result)
    if text:
        print(text)
    return 0


def cmd_laws(args) -> int:
    if args.cases < 1:
        raise ValueError("--cases must be at least 1")
    cfg = GenConfig(
        max_events=args.max_events,
        alphabet=("a", "b"),
        edge_probability=0.4,
        seed=args.seed,
    )
    report = law_suite(cfg, cases=args.cases)
    print(report.to_text())
    return 0 if report.ok else 1


def _add_weak_dep(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--weak-dep",
        metavar="SPEC",
        help="interpret ';' as weak sequencing under a dependence relation: "
        "'full', 'empty', or comma-separated label:label pairs",
    )


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="cka",
        description="Pomset model of Concurrent Kleene Algebra: refinement, "
        "program algebra, languages and algebraic law checking.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("refines", help="does the left program refine the right one")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument(
        "--pomset",
        action="store_true",
        help="compare single partial strings and print the witness mapping",
    )
    _add_weak_dep(p)
    p.set_defaults(fn=cmd_refines)

    p = sub.add_parser("equal", help="semantic program equality")
    p.add_argument("left")
    p.add_argument("right")
    _add_weak_dep(p)
    p.set_defaults(fn=cmd_equal)

    p = sub.add_parser("member", help="is a partial string in a program's closure")
    p.add_argument("element", nargs="?", help="single-generator expression")
    p.add_argument("program")
    p.add_argument("--file", help="read the element from a text-format file")
    _add_weak_dep(p)
    p.set_defaults(fn=cmd_member)

    p = sub.add_parser("lang", help="list the words of a program's language")
    p.add_argument("expr")
    p.add_argument("--max-display", type=int, metavar="N", help="show at most N words")
    _add_weak_dep(p)
    p.set_defaults(fn=cmd_lang)

    p = sub.add_parser("dot", help="emit the cover relation as a DOT digraph")
    p.add_argument("expr", nargs="?", help="single-generator expression")
    p.add_argument("--file", help="read a partial string from a text-format file")
    _add_weak_dep(p)
    p.set_defaults(fn=cmd_dot)

    p = sub.add_parser("star", help="bounded Kleene iterate of a program")
    p.add_argument("expr")
    p.add_argument("bound", type=int)
    p.add_argument("--op", choices=("seq", "par"), default="seq")
    _add_weak_dep(p)
    p.set_defaults(fn=cmd_star)

    p = sub.add_parser("laws", help="run the algebraic law suite")
    p.add_argument("--cases", type=int, default=100)
    p.add_argument("--max-events", type=int, default=3)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.set_defaults(fn=cmd_laws)

    return ap


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (ExprError, TextFormatError, InvalidPartialString, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
