import pytest
from hypothesis import given
from hypothesis import strategies as st

from apforge.words import FreeEndo, RankMismatch, Word, product_length, substitute

from strategies import words


def w(*letters, rank=3):
    return Word.from_letters(letters, rank)


def test_free_reduction_on_construction():
    assert w(1, 2, -2, -1) == Word.identity(3)
    assert w(1, 1, -1, 2).syllables == ((1, 1), (2, 1))
    assert str(w(1, 1, -3)) == "x1^2 x3^-1"


def test_identity_prints_as_one():
    assert str(Word.identity(2)) == "1"
    assert not Word.identity(2)


def test_generator_out_of_range():
    with pytest.raises(ValueError):
        Word.gen(4, 3)


def test_rank_mismatch():
    with pytest.raises(RankMismatch):
        Word.gen(1, 2) * Word.gen(1, 3)


def test_product_word():
    assert str(Word.product_word(4)) == "x1 x2 x3 x4"


def test_exponent_sums():
    u = w(1, 2, 1, -3, -3)
    assert u.exponent_vector() == [2, 1, -2]
    assert u.exponent_sum(3) == -2


def test_commutator_convention():
    a, b = Word.gen(1, 2), Word.gen(2, 2)
    assert str(a.commutator(b)) == "x1^-1 x2^-1 x1 x2"


def test_cyclic_reduction():
    u = w(2, 1, 3, -2)
    core, conj = u.cyclically_reduce()
    assert str(core) == "x1 x3"
    assert conj * core * conj.inverse() == u


def test_power_negative():
    u = w(1, 2)
    assert u ** -2 == (u.inverse()) ** 2
    assert u ** 0 == Word.identity(3)


def test_endo_application():
    e = FreeEndo([w(1, 2, -1), w(1), w(3)])
    assert e(w(1, 2)) == w(1, 2, -1, 1) == w(1, 2)
    assert substitute(w(2), e) == w(1)


def test_endo_composition_order():
    e = FreeEndo([w(2), w(1), w(3)])
    f = FreeEndo([w(1, 1), w(2), w(3)])
    # then: apply e first, then f
    x1 = w(1)
    assert e.then(f)(x1) == f(e(x1))


@given(words(3), words(3))
def test_product_is_free_reduction_of_concatenation(u, v):
    assert u * v == Word.from_letters(list(u.letters()) + list(v.letters()), 3)
    assert product_length(u, v) == len(u * v)


@given(words(3), words(3), words(3))
def test_associative(u, v, x):
    assert (u * v) * x == u * (v * x)


@given(words(4))
def test_inverse(u):
    assert u * u.inverse() == Word.identity(4)
    assert u.inverse().inverse() == u


@given(words(3))
def test_reduced_form_has_no_cancelling_pairs(u):
    ls = list(u.letters())
    assert all(a != -b for a, b in zip(ls, ls[1:]))
    assert len(u) == len(ls)


@given(words(3), words(3))
def test_exponent_vector_is_a_homomorphism(u, v):
    assert (u * v).exponent_vector() == [a + b for a, b in zip(u.exponent_vector(), v.exponent_vector())]


@given(words(3))
def test_cyclic_reduction_property(u):
    core, conj = u.cyclically_reduce()
    assert core.is_cyclically_reduced()
    assert conj * core * conj.inverse() == u
    assert all(len(c) == len(core) for c in core.cyclic_permutations())


@given(st.lists(words(2, 6), min_size=2, max_size=2), words(2))
def test_endo_is_a_homomorphism(images, u):
    e = FreeEndo(images)
    v = Word.gen(1, 2) * u
    assert e(u * v) == e(u) * e(v)
