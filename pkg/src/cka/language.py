"""Linearizations of partial strings and the languages of programs.

A word is a total-order flattening of a partial string; the language of a
program collects the words of its generators.  Inclusion of languages is
strictly coarser than inclusion of programs: refinement implies language
containment but not conversely.
"""

from __future__ import annotations

from .partial_string import Label, PartialString, _bits
from .program import Program

Word = tuple[Label, ...]


def linearize(x: PartialString) -> frozenset[Word]:
    """Label sequences of every linear extension of ``x``'s order.

    Enumerates by repeatedly removing a minimal element.  Distinct
    extensions with equal label sequences collapse into one word.
    """
    n = x.n_events
    preds = [0] * n
    for i in range(n):
        for j in _bits(x.order[i] & ~(1 << i)):
            preds[j] |= 1 << i
    out: set[Word] = set()
    prefix: list[Label] = []

    def extend(remaining: int) -> None:
        if not remaining:
            out.add(tuple(prefix))
            return
        m = remaining
        while m:
            low = m & -m
            m ^= low
            e = low.bit_length() - 1
            if preds[e] & remaining == 0:
                prefix.append(x.labels[e])
                extend(remaining ^ low)
                prefix.pop()

    extend((1 << n) - 1)
    return frozenset(out)


def language(p: Program) -> frozenset[Word]:
    """All words refining some member of ``p``'s downward closure.

    The union over generators is complete: a word refining a closure
    member refines, by transitivity, the generator above it.
    """
    words: set[Word] = set()
    for g in p.generators:
        words |= linearize(g)
    return frozenset(words)


def lang_subset(p: Program, q: Program) -> bool:
    """Language containment (implied by program inclusion, weaker than it)."""
    return language(p) <= language(q)
