import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from apforge import braids
from apforge.braids import BraidWord, NotPure, artin_action, braid_word_of, compose, sigma
from apforge.words import Word

from strategies import pure_braids


def x(i, n):
    return Word.gen(i, n)


def test_generator_action():
    e = artin_action(sigma(1, 3))
    assert e.images == (x(1, 3) * x(2, 3) * x(1, 3).inverse(), x(1, 3), x(3, 3))


def test_braid_relations():
    n = 4
    s1, s2, s3 = sigma(1, n), sigma(2, n), sigma(3, n)
    assert braids.braid_words_equal(s1 * s2 * s1, s2 * s1 * s2)
    assert braids.braid_words_equal(s1 * s3, s3 * s1)
    assert not braids.braid_words_equal(s1 * s2, s2 * s1)


def test_full_twist_squared_is_pure():
    n = 3
    delta = sigma(1, n) * sigma(2, n) * sigma(1, n)
    assert not braids.is_pure(delta)
    assert braids.is_pure(delta * delta)
    assert braids.permutation_of(delta) == (2, 1, 0)


def test_pure_generator_is_pure():
    for i in range(1, 4):
        for j in range(i + 1, 5):
            assert braids.is_pure(braids.pure_generator(i, j, 4))


def test_not_pure_rejected():
    with pytest.raises(NotPure):
        braids.to_framed_automorphism(sigma(1, 2))


def test_framings_length_checked():
    with pytest.raises(ValueError):
        braids.to_framed_automorphism(sigma(1, 2, 2), (1,))


@given(st.lists(st.tuples(st.integers(1, 3), st.sampled_from([1, -1])), max_size=14))
def test_action_fixes_product_word(letters):
    e = artin_action(BraidWord(4, tuple(letters)))
    p = Word.product_word(4)
    assert e(p) == p


@given(st.lists(st.tuples(st.integers(1, 3), st.sampled_from([1, -1])), max_size=14))
def test_action_images_are_conjugates_of_generators(letters):
    b = BraidWord(4, tuple(letters))
    e = artin_action(b)
    perm = braids.permutation_of(b)
    for k, img in enumerate(e.images):
        core, _ = img.cyclically_reduce()
        assert len(core) == 1
    assert sorted(perm) == [0, 1, 2, 3]


@given(st.lists(st.tuples(st.integers(1, 2), st.sampled_from([1, -1])), max_size=12),
       st.lists(st.tuples(st.integers(1, 2), st.sampled_from([1, -1])), max_size=12))
def test_action_is_multiplicative(u, v):
    a, b = BraidWord(3, tuple(u)), BraidWord(3, tuple(v))
    # phi_{ab} = phi_a o phi_b: substitute phi_b first
    assert artin_action(a * b) == artin_action(b).then(artin_action(a))


@given(pure_braids(3, 6))
def test_braid_word_recovery(b):
    e = artin_action(b)
    w = braid_word_of(e)
    assert artin_action(w) == e


@given(pure_braids(3, 4), pure_braids(3, 4))
def test_compose_matches_braid_product(b1, b2):
    f1 = braids.to_framed_automorphism(b1, (1, 0, 2))
    f2 = braids.to_framed_automorphism(b2, (0, -1, 1))
    c = compose(f1, f2)
    assert c.endo == artin_action(b1 * b2)
    assert c.framings == (1, -1, 3)


@given(pure_braids(4, 5))
def test_invert(b):
    a = braids.to_framed_automorphism(b, (2, -1, 0, 3))
    inv = braids.invert(a)
    assert compose(a, inv).endo == artin_action(BraidWord(4))
    assert inv.framings == (-2, 1, 0, -3)


def test_random_pure_braid_is_pure():
    rng = random.Random(5)
    for _ in range(50):
        assert braids.is_pure(braids.random_pure_braid(5, 30, rng))


def test_conjugators_normalized():
    # a trailing power of x_i in A_i does not change the image of x_i
    n = 2
    a = braids.FramedAutomorphism(n, (x(2, n) * x(1, n) ** 3, Word.identity(n)), (0, 0))
    assert a.conjugators[0] == x(2, n)
