# Programs: downward-closed sets of partial strings.
#
# A program is represented by a finite generator set and denotes every
# behaviour refining some generator; union is nondeterministic choice,
# composition is pointwise, and bounded stars truncate the least fixed
# point of choice-or-continue.

from cka import (
    GenConfig,
    contains,
    equals,
    law_suite,
    one,
    par,
    pcompose,
    program_of,
    program_to_text,
    punion,
    seq,
    singleton,
    star,
    subset,
    zero,
)

a = program_of((singleton("a"),))
b = program_of((singleton("b"),))

# Generators are kept as an antichain: a;b is absorbed by a|b because
# every behaviour of the chain already refines the antichain.
absorbed = program_of((seq(singleton("a"), singleton("b")),
                       par(singleton("a"), singleton("b"))))
print("generators after normalization:")
print(program_to_text(absorbed))
print()

# Membership goes through refinement, so the chain is a behaviour of a|b.
chain_ab = seq(singleton("a"), singleton("b"))
print("a;b in a|b:", contains(pcompose(a, b, par), chain_ab))

# 0 annihilates compositions and 1 is their unit.
p = punion(pcompose(a, b, seq), b)
print("p ; 0 = 0:", equals(pcompose(p, zero(), seq), zero()))
print("p ; 1 = p:", equals(pcompose(p, one(), seq), p))
print("p + 0 = p:", equals(punion(p, zero()), p))
print()

# Sequencing both ways still refines running concurrently, but the
# converse fails: interleaving choices do not exhaust concurrency.
both_orders = punion(pcompose(a, b, seq), pcompose(b, a, seq))
concurrent = pcompose(a, b, par)
print("(a;b)+(b;a) below a|b:", subset(both_orders, concurrent))
print("a|b below (a;b)+(b;a):", subset(concurrent, both_orders))
print()

# Bounded stars grow monotonically toward the least fixed point.
for n in range(1, 5):
    words = len(star(a, seq, n).generators)
    print(f"star(a, seq, {n}) has {words} generators")
print()
print("star(a, seq, 3) serialized:")
print(program_to_text(star(a, seq, 3)))
print()

# The whole algebra is checked law by law on seeded random programs.
report = law_suite(GenConfig(max_events=3, seed=7), cases=25)
print(report.to_text().split("result:")[1].splitlines()[0].strip(), "- law suite")
