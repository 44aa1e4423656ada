# Languages, linearization, and the term syntax.
#
# Flattening a partial string into all of its total orders gives a word
# language.  Program inclusion implies language inclusion, but the
# converse fails, which is exactly what separates true concurrency from
# interleaving semantics.  Terms give a compact way to write programs.

from cka import (
    chain,
    evaluate,
    from_strict_pairs,
    lang_subset,
    language,
    linearize,
    par,
    parse_text,
    pretty,
    program_of,
    refines,
    subset,
)

# All interleavings of two independent events.
two = par(chain("a"), chain("b"))
print("words of a|b:", sorted(linearize(two)))

# Three independent events give 3! words.
three = evaluate(parse_text("a|b|c"))
print("word count of a|b|c:", len(language(three)))
print()

# The four-event pair from the refinement demo has identical languages
# even though refinement separates the two shapes.
p4 = program_of((par(chain("ab"), chain("ab")),))
n4 = program_of((from_strict_pairs("aabb", [(0, 2), (0, 3), (1, 3)]),))
print("language(P4) == language(N4):", language(p4) == language(n4))
print("P4 below N4 as programs:", subset(p4, n4))
print()

# Language containment without program containment.
concurrent = evaluate(parse_text("a|b"))
sequenced = evaluate(parse_text("a;b + b;a"))
print("lang(a|b) within lang(a;b + b;a):", lang_subset(concurrent, sequenced))
print("a|b within a;b + b;a:", subset(concurrent, sequenced))
print()

# Every word of a partial string refines it when read back as a chain.
source = evaluate(parse_text("(a;b)|c")).generators[0]
print("words of (a;b)|c refine it:",
      all(refines(chain(w), source) for w in linearize(source)))
print()

# Terms round-trip through the printer, and stars stay bounded.
tree = parse_text("seqstar(a;b, 2) + (c|1)")
print("pretty form:", pretty(tree))
print("language:", sorted(language(evaluate(tree))))
