import itertools
import random

from cka import (
    chain,
    from_strict_pairs,
    lang_subset,
    language,
    linearize,
    one,
    par,
    pcompose,
    program_of,
    punion,
    refines,
    seq,
    singleton,
    star,
    subset,
)
from cka.testkit import GenConfig, _sample_program, _sample_string


def brute_words(x):
    """Oracle: all permutations of events filtered by order consistency."""
    n = x.n_events
    strict = x.strict_pairs()
    words = set()
    for perm in itertools.permutations(range(n)):
        pos = [0] * n
        for idx, e in enumerate(perm):
            pos[e] = idx
        if all(pos[i] < pos[j] for i, j in strict):
            words.add(tuple(x.labels[e] for e in perm))
    return frozenset(words)


def test_linearize_two_antichain():
    assert linearize(par(singleton("a"), singleton("b"))) == {("a", "b"), ("b", "a")}


def test_linearize_chain_has_one_word():
    assert linearize(seq(singleton("a"), singleton("b"))) == {("a", "b")}


def test_linearize_three_antichain_has_six_words():
    x = par(singleton("a"), par(singleton("b"), singleton("c")))
    assert len(linearize(x)) == 6


def test_linearize_matches_permutation_oracle():
    rng = random.Random(21)
    cfg = GenConfig(max_events=5, alphabet=("a", "b", "c"), edge_probability=0.4, seed=21)
    for _ in range(40):
        x = _sample_string(rng, cfg)
        assert linearize(x) == brute_words(x)


def test_every_linearization_refines_the_source():
    rng = random.Random(22)
    cfg = GenConfig(max_events=4, alphabet=("a", "b"), edge_probability=0.4, seed=22)
    for _ in range(30):
        x = _sample_string(rng, cfg)
        for word in linearize(x):
            assert refines(chain(word), x)


def test_language_of_one_is_empty_word():
    assert language(one()) == {()}


def test_language_equality_despite_refinement_gap():
    p4 = par(chain(("a", "b")), chain(("a", "b")))
    n4 = from_strict_pairs(("a", "a", "b", "b"), [(0, 2), (0, 3), (1, 3)])
    assert language(program_of((p4,))) == language(program_of((n4,)))
    assert not refines(p4, n4)


def test_language_of_bounded_star():
    a = program_of((singleton("a"),))
    assert language(star(a, seq, 3)) == {(), ("a",), ("a", "a")}


def test_lang_subset_reflexive():
    p = program_of((par(singleton("a"), singleton("b")),))
    assert lang_subset(p, p)


def test_program_subset_implies_language_subset():
    rng = random.Random(23)
    cfg = GenConfig(max_events=3, alphabet=("a", "b"), edge_probability=0.4, seed=23)
    for _ in range(30):
        p = _sample_program(rng, cfg)
        q = punion(p, _sample_program(rng, cfg))
        assert subset(p, q)
        assert lang_subset(p, q)


def test_language_subset_does_not_imply_program_subset():
    x = program_of((singleton("a"),))
    y = program_of((singleton("b"),))
    interleaved = pcompose(x, y, par)
    sequenced = punion(pcompose(x, y, seq), pcompose(y, x, seq))
    assert lang_subset(interleaved, sequenced)
    assert not subset(interleaved, sequenced)
