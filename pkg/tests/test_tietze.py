import random

import pytest

from apforge import artin
from apforge.example import load_corpus
from apforge.groups.coset import group_order
from apforge.groups.fpgroup import from_strings, pi
from apforge.groups.tietze import canonical_relator, tietze_simplify
from apforge.grammar import parse_word


def test_canonical_relator_is_cyclic_class_invariant():
    w = parse_word("x1 x2 x1^-1 x2^2", 2)
    rotated = parse_word("x2^2 x1 x2 x1^-1", 2)
    assert canonical_relator(w) == canonical_relator(rotated) == canonical_relator(rotated.inverse())


def test_eliminates_defined_generator():
    g = from_strings(3, ["x3^-1 x1 x2", "x1^2", "x2^3", "x3^5"])  # A5
    h = tietze_simplify(g)
    assert h.generator_count == 2
    assert group_order(h) == group_order(g) == 60


@pytest.mark.parametrize(
    "rels, order",
    [
        (["x1^2", "x2^3", "(x1 x2)^5"], 60),
        (["x1^4", "x1^2 x2^-2", "x2^-1 x1 x2 x1"], 8),
        (["x1 x2", "x1 x2^2"], 1),
    ],
)
def test_order_preserved(rels, order):
    h = tietze_simplify(from_strings(2, rels))
    assert group_order(h) == order
    assert h.total_length() <= sum(len(parse_word(r, 2)) for r in rels)


def test_abelianization_preserved_on_random_presentations():
    rng = random.Random(77)
    for _ in range(30):
        r = artin.random_presentation(3, rng, 16)
        g = pi(r)
        h = tietze_simplify(g)
        torsion, rank = g.abelianization()
        assert h.abelianization() == (torsion, rank)


def test_e8_simplifies_to_two_generators():
    r = load_corpus("e8.ap").require_valid()
    h = tietze_simplify(pi(r))
    assert h.generator_count == 2
    assert group_order(h) == 120
