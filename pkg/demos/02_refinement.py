# Refinement between partial strings.
#
# x refines y when a label-preserving monotone bijection maps y's events
# onto x's: every ordering constraint of y holds in x, so x is the more
# deterministic behaviour.  The search is exact, and the returned
# mapping is a checkable witness.

from cka import (
    brute_force_refines,
    chain,
    exchange_holds,
    find_morphism,
    from_strict_pairs,
    isomorphic,
    par,
    refines,
    seq,
    singleton,
    to_text,
)

a = singleton("a")
b = singleton("b")

# A chain refines the corresponding antichain, never the other way.
print("a;b refines a|b:", refines(seq(a, b), par(a, b)))
print("a|b refines a;b:", refines(par(a, b), seq(a, b)))

# The witness maps the coarser string's events onto the finer one's.
witness = find_morphism(par(a, b), seq(a, b))
print("witness for a;b below a|b:", witness.mapping)
print()

# The classic four-event separation: two independent a;b chains versus
# the N-shaped order with one extra cross constraint.
p4 = par(chain("ab"), chain("ab"))
n4 = from_strict_pairs("aabb", [(0, 2), (0, 3), (1, 3)])
print("P4 =")
print(to_text(p4))
print("N4 =")
print(to_text(n4))
print("N4 refines P4:", refines(n4, p4))   # N carries strictly more order
print("P4 refines N4:", refines(p4, n4))   # and the converse fails
print("isomorphic:", isomorphic(p4, n4))
print()

# The optimized search agrees with plain enumeration of bijections.
print("oracle agrees:", brute_force_refines(n4, p4), brute_force_refines(p4, n4))
print()

# The exchange law relates the two compositions: running the halves
# sequentially refines running them concurrently.
u, v, x, y = (singleton(s) for s in "uvxy")
print("exchange holds on singletons:", exchange_holds(u, v, x, y))
lhs = seq(par(u, v), par(x, y))
rhs = par(seq(u, x), seq(v, y))
print("but it is not an isomorphism:", isomorphic(lhs, rhs))
print("witness mapping:", find_morphism(rhs, lhs).mapping)
