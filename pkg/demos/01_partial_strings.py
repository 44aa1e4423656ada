# Building and composing partial strings.
#
# A partial string is a finite set of labelled events with a partial
# order; it generalizes a string by letting unordered events run
# concurrently.  This walkthrough builds a few, composes them
# sequentially, concurrently and weakly-sequentially, and renders them.

from cka import (
    DependenceRelation,
    chain,
    empty,
    from_text,
    hasse,
    isomorphic,
    par,
    seq,
    singleton,
    to_dot,
    to_text,
    weakseq,
)

a = singleton("a")
b = singleton("b")
c = singleton("c")

# Sequential composition chains everything; concurrent composition
# keeps the operands independent.
print("seq(a, b) as text:")
print(to_text(seq(a, b)))
print()
print("par(seq(a, b), c) as text:")
print(to_text(par(seq(a, b), c)))
print()

# The empty partial string is the identity for every composition.
x = seq(par(a, b), c)
print("x ; empty isomorphic to x:", isomorphic(seq(x, empty()), x))
print("empty | x isomorphic to x:", isomorphic(par(empty(), x), x))
print()

# Weak sequencing sits between the two: only label pairs named in the
# dependence relation are ordered across the composition boundary.
d = DependenceRelation.of([("a", "c")])
w = weakseq(par(a, b), c, d)
print("weakseq under {a before c}:")
print(to_text(w))  # the a is ordered before c, the b stays concurrent
print()

# The cover relation (transitive reduction) drives the DOT rendering.
diamond = seq(a, seq(par(b, c), singleton("d")))
print("covers of a;(b|c);d:", hasse(diamond))
print(to_dot(diamond))
print()

# The same shapes load back from the line-based text format.
loaded = from_text("""
events: a b c d
order: 0 < 1
order: 0 < 2
order: 1 < 3
order: 2 < 3
""")
print("round-trip isomorphic:", isomorphic(loaded, diamond))

# Words are just totally ordered partial strings.
print("chain('abc') as text:")
print(to_text(chain("abc")))
