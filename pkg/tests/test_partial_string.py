import pytest

from cka import (
    DependenceRelation,
    InvalidPartialString,
    Morphism,
    PartialString,
    TextFormatError,
    chain,
    empty,
    exchange_holds,
    find_morphism,
    from_strict_pairs,
    from_text,
    hasse,
    isomorphic,
    par,
    refines,
    seq,
    singleton,
    to_dot,
    to_text,
    validate,
    weakseq,
)
from cka.testkit import GenConfig, _sample_string, brute_force_refines

import random


def n4():
    return from_strict_pairs(("a", "a", "b", "b"), [(0, 2), (0, 3), (1, 3)])


def p4():
    return par(chain(("a", "b")), chain(("a", "b")))


# --------------------------------------------------------------------- #
# Constructors and validation
# --------------------------------------------------------------------- #


def test_empty_has_no_events():
    bottom = empty()
    assert bottom.n_events == 0
    assert bottom.labels == ()
    assert bottom.order == ()
    assert isomorphic(bottom, empty())
    assert refines(bottom, empty())


def test_singleton_shape():
    a = singleton("a")
    assert a.n_events == 1
    assert a.labels == ("a",)
    assert a.leq(0, 0)


def test_seq_of_singletons_is_two_chain():
    s = seq(singleton("a"), singleton("b"))
    assert s.labels == ("a", "b")
    assert s.leq(0, 1) and not s.leq(1, 0)


def test_par_of_singletons_is_antichain():
    p = par(singleton("a"), singleton("b"))
    assert not p.leq(0, 1) and not p.leq(1, 0)


def test_chain_is_totally_ordered():
    c = chain(("a", "b", "c"))
    assert all(c.leq(i, j) for i in range(3) for j in range(i, 3))


def test_validate_accepts_chain():
    validate(seq(singleton("a"), singleton("b")))


def test_validate_reports_antisymmetry():
    bad = PartialString(("a", "b"), (0b11, 0b11))
    with pytest.raises(InvalidPartialString, match=r"antisymmetry violation at \(0, 1\)"):
        validate(bad)


def test_validate_reports_reflexivity():
    bad = PartialString(("a", "b"), (0b10, 0b10))
    with pytest.raises(InvalidPartialString, match="reflexivity violation at 0"):
        validate(bad)


def test_validate_reports_transitivity():
    # 0 < 1 and 1 < 2 without 0 < 2
    bad = PartialString(("a", "b", "c"), (0b011, 0b110, 0b100))
    with pytest.raises(InvalidPartialString, match="transitivity violation"):
        validate(bad)


def test_validate_reports_non_total_labels():
    bad = PartialString(("a", "b"), (0b1,))
    with pytest.raises(InvalidPartialString, match="labels are not total"):
        validate(bad)


def test_from_strict_pairs_rejects_out_of_range():
    with pytest.raises(InvalidPartialString, match="outside events"):
        from_strict_pairs(("a",), [(0, 1)])


def test_from_strict_pairs_rejects_cycle():
    with pytest.raises(InvalidPartialString, match="antisymmetry"):
        from_strict_pairs(("a", "b"), [(0, 1), (1, 0)])


# --------------------------------------------------------------------- #
# Composition operators
# --------------------------------------------------------------------- #


def test_par_keeps_blocks_incomparable():
    # a->b chain alongside an isolated c
    p = par(chain(("a", "b")), singleton("c"))
    assert p.labels == ("a", "b", "c")
    assert p.leq(0, 1)
    assert not p.leq(0, 2) and not p.leq(2, 0)
    assert not p.leq(1, 2) and not p.leq(2, 1)


def test_seq_orders_blocks():
    s = seq(chain(("a", "b")), singleton("c"))
    assert s.leq(0, 1) and s.leq(1, 2) and s.leq(0, 2)


def test_identity_laws():
    x = seq(par(singleton("a"), singleton("b")), singleton("c"))
    d = DependenceRelation.full(("a", "b", "c"))
    for op in (seq, par, lambda l, r: weakseq(l, r, d)):
        assert isomorphic(op(x, empty()), x)
        assert isomorphic(op(empty(), x), x)


def test_par_commutative_small_random():
    rng = random.Random(5)
    cfg = GenConfig(max_events=4, alphabet=("a", "b"), edge_probability=0.4, seed=5)
    for _ in range(30):
        x = _sample_string(rng, cfg)
        y = _sample_string(rng, cfg)
        assert isomorphic(par(x, y), par(y, x))


def test_seq_refines_par_random():
    rng = random.Random(6)
    cfg = GenConfig(max_events=4, alphabet=("a", "b"), edge_probability=0.4, seed=6)
    for _ in range(30):
        x = _sample_string(rng, cfg)
        y = _sample_string(rng, cfg)
        assert refines(seq(x, y), par(x, y))


def test_weakseq_full_dependence_equals_seq_exactly():
    x = chain(("a", "b"))
    y = par(singleton("a"), singleton("c"))
    d = DependenceRelation.full(("a", "b", "c"))
    assert weakseq(x, y, d) == seq(x, y)


def test_weakseq_empty_dependence_equals_par_exactly():
    x = chain(("a", "b"))
    y = par(singleton("a"), singleton("c"))
    assert weakseq(x, y, DependenceRelation.none()) == par(x, y)


def test_weakseq_adds_only_dependent_cross_pairs():
    d = DependenceRelation.of([("a", "c")])
    w = weakseq(chain(("a", "b")), singleton("c"), d)
    assert w.leq(0, 2)       # a before c: dependent
    assert not w.leq(1, 2)   # b before c: not dependent


def test_weakseq_transitively_closes_through_cross_pairs():
    # b depends on c; the a below b must then also precede c
    d = DependenceRelation.of([("b", "c")])
    w = weakseq(chain(("a", "b")), singleton("c"), d)
    assert w.leq(1, 2)
    assert w.leq(0, 2)


def test_weakseq_identity():
    d = DependenceRelation.of([("a", "a")])
    x = seq(singleton("a"), par(singleton("a"), singleton("b")))
    assert isomorphic(weakseq(x, empty(), d), x)
    assert isomorphic(weakseq(empty(), x, d), x)


def test_event_counts_add_and_pair_counts_chain():
    x = chain(("a", "b"))
    y = par(singleton("a"), singleton("b"))
    d = DependenceRelation.of([("a", "a")])
    s, w, p = seq(x, y), weakseq(x, y, d), par(x, y)
    for c in (s, w, p):
        assert c.n_events == x.n_events + y.n_events
    assert s.order_pair_count() >= w.order_pair_count() >= p.order_pair_count()


# --------------------------------------------------------------------- #
# Morphisms, refinement, isomorphism
# --------------------------------------------------------------------- #


def test_find_morphism_par_into_seq_is_identity():
    m = find_morphism(par(singleton("a"), singleton("b")), seq(singleton("a"), singleton("b")))
    assert m is not None
    assert m.mapping == (0, 1)


def test_find_morphism_seq_into_par_absent():
    src = seq(singleton("a"), singleton("b"))
    tgt = par(singleton("a"), singleton("b"))
    assert find_morphism(src, tgt) is None
    # cross-check with the exhaustive oracle: refines(tgt, src) is false
    assert not brute_force_refines(tgt, src)


def test_find_morphism_identity_on_self():
    x = n4()
    m = find_morphism(x, x)
    assert m is not None and m.is_valid(x, x)


def test_morphism_is_valid_rejects_bad_maps():
    s = seq(singleton("a"), singleton("b"))
    p = par(singleton("a"), singleton("b"))
    assert Morphism((0, 1)).is_valid(p, s)
    assert not Morphism((0, 1)).is_valid(s, p)      # order not preserved
    assert not Morphism((0, 0)).is_valid(p, s)      # not a bijection
    assert not Morphism((1, 0)).is_valid(p, s)      # labels not preserved
    assert not Morphism((0,)).is_valid(p, s)        # wrong arity


def test_refines_four_event_counterexample():
    assert not refines(p4(), n4())
    assert refines(n4(), p4())
    assert not isomorphic(p4(), n4())
    # agreement with the independent oracle on both orders
    assert not brute_force_refines(p4(), n4())
    assert brute_force_refines(n4(), p4())


def test_refines_reflexive_on_examples():
    for x in (empty(), singleton("a"), n4(), p4()):
        assert refines(x, x)


def test_isomorphic_seq_associativity():
    x, y, z = chain(("a", "b")), singleton("c"), par(singleton("a"), singleton("d"))
    assert isomorphic(seq(seq(x, y), z), seq(x, seq(y, z)))
    assert isomorphic(par(par(x, y), z), par(x, par(y, z)))


def test_exchange_holds_but_is_not_isomorphism_on_singletons():
    u, v, x, y = (singleton(l) for l in "uvxy")
    assert exchange_holds(u, v, x, y)
    lhs = seq(par(u, v), par(x, y))
    rhs = par(seq(u, x), seq(v, y))
    assert not isomorphic(lhs, rhs)


def test_exchange_on_empties():
    e = empty()
    assert exchange_holds(e, e, e, e)


def test_exchange_random_with_witness():
    rng = random.Random(11)
    cfg = GenConfig(max_events=3, alphabet=("a", "b"), edge_probability=0.4, seed=11)
    for _ in range(50):
        u, v, x, y = (_sample_string(rng, cfg) for _ in range(4))
        assert exchange_holds(u, v, x, y)
        lhs = seq(par(u, v), par(x, y))
        rhs = par(seq(u, x), seq(v, y))
        witness = find_morphism(rhs, lhs)
        assert witness is not None and witness.is_valid(rhs, lhs)


def test_frame_laws_random():
    rng = random.Random(12)
    cfg = GenConfig(max_events=3, alphabet=("a", "b"), edge_probability=0.4, seed=12)
    for _ in range(50):
        x, y, z = (_sample_string(rng, cfg) for _ in range(3))
        assert refines(seq(par(x, y), z), par(x, seq(y, z)))
        assert refines(seq(x, par(y, z)), par(seq(x, y), z))


# --------------------------------------------------------------------- #
# Rendering and text format
# --------------------------------------------------------------------- #


def test_hasse_of_chain():
    assert hasse(chain(("a", "b", "c"))) == [(0, 1), (1, 2)]


def test_hasse_of_antichain():
    assert hasse(par(singleton("a"), singleton("b"))) == []


def test_hasse_of_n_shape():
    assert hasse(n4()) == [(0, 2), (0, 3), (1, 3)]


def test_text_round_trip():
    for x in (empty(), singleton("a"), n4(), p4(), seq(n4(), p4())):
        assert from_text(to_text(x)) == x


def test_from_text_computes_closure():
    x = from_text("events: a b c\norder: 0 < 1\norder: 1 < 2\n")
    assert x.leq(0, 2)


def test_from_text_rejects_cycles():
    with pytest.raises(InvalidPartialString, match="antisymmetry"):
        from_text("events: a b\norder: 0 < 1\norder: 1 < 0\n")


def test_from_text_rejects_garbage():
    with pytest.raises(TextFormatError):
        from_text("order: 0 < 1\n")
    with pytest.raises(TextFormatError):
        from_text("events: a\nnonsense\n")
    with pytest.raises(TextFormatError):
        from_text("events: a b\norder: 0 1\n")


def test_to_dot_n_shape():
    assert to_dot(n4()) == (
        "digraph pomset {\n"
        '  e0 [label="0:a"];\n'
        '  e1 [label="1:a"];\n'
        '  e2 [label="2:b"];\n'
        '  e3 [label="3:b"];\n'
        "  e0 -> e2;\n"
        "  e0 -> e3;\n"
        "  e1 -> e3;\n"
        "}"
    )
