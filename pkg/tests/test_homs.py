import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from apforge.groups import finite as F
from apforge.groups.fpgroup import FpGroup, free_group, from_strings
from apforge.groups.homs import (
    SearchBudgetExceeded,
    brute_force_count,
    find_nontrivial_hom,
    find_surjection,
    hom_count,
    is_homomorphism,
)
from apforge.words import Word

from strategies import words

TREFOIL = from_strings(2, ["x1 x2 x1 x2^-1 x1^-1 x2^-1"])
FIGURE8 = from_strings(2, ["x2^-1 x1 x2 x1^-1 x2 x1 x2^-1 x1^-1 x2 x1^-1"])


def strip(c):
    return (c.total, c.nonabelian_image, c.surjective)


@pytest.mark.parametrize(
    "g, target, expected",
    [
        (TREFOIL, F.symmetric(3), (12, 6, 6)),
        (TREFOIL, F.alternating(4), (36, 24, 24)),
        (TREFOIL, F.alternating(5), (360, 300, 120)),
        (TREFOIL, F.sl25(), (720, 600, 240)),
        (FIGURE8, F.symmetric(3), (6, 0, 0)),
        (FIGURE8, F.alternating(5), (300, 240, 0)),
        (FIGURE8, F.cyclic(5), (5, 0, 4)),
        (free_group(2), F.symmetric(3), (36, 18, 18)),
    ],
)
def test_frozen_counts(g, target, expected):
    assert strip(hom_count(g, target)) == expected


@pytest.mark.parametrize("target", [F.symmetric(3), F.alternating(4), F.binary_tetrahedral(), F.alternating(5)], ids=lambda t: t.name)
@pytest.mark.parametrize("g", [TREFOIL, FIGURE8], ids=["trefoil", "figure8"])
def test_matches_brute_force(g, target):
    assert strip(hom_count(g, target)) == strip(brute_force_count(g, target))


@settings(max_examples=40)
@given(st.lists(words(3, 8), min_size=1, max_size=3), st.sampled_from(["s3", "a4", "bd:2", "c:6"]))
def test_random_presentations_match_brute_force(rels, name):
    target = F.by_name(name)
    g = FpGroup(3, tuple(rels))
    # |target|^3 <= 1e6 for every sampled target
    assert strip(hom_count(g, target)) == strip(brute_force_count(g, target))


def test_cyclic_group_homs():
    for k in range(1, 13):
        g = from_strings(1, [f"x1^{k}"])
        for m in (4, 6, 12):
            from math import gcd

            assert hom_count(g, F.cyclic(m)).total == gcd(k, m)


def test_find_surjection_is_a_homomorphism():
    img = find_surjection(TREFOIL, F.alternating(5))
    assert img is not None and is_homomorphism(TREFOIL, F.alternating(5), img)
    assert find_surjection(FIGURE8, F.alternating(5)) is None


def test_trivial_group_has_only_trivial_hom():
    g = from_strings(2, ["x1 x2", "x1 x2^2"])
    assert find_nontrivial_hom(g, F.sl25()) is None
    assert hom_count(g, F.sl25()).total == 1


def test_node_cap():
    with pytest.raises(SearchBudgetExceeded):
        hom_count(free_group(3), F.sl25(), node_cap=1000)
