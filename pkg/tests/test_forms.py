import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from apforge import artin, forms
from apforge.forms import NO, NOT_APPLICABLE, UNKNOWN, YES, FormError
from apforge.groups.coset import group_order
from apforge.groups.fpgroup import FpGroup


def cofactor_det(m):
    if not m:
        return 1
    return sum((-1) ** j * m[0][j] * cofactor_det([r[:j] + r[j + 1 :] for r in m[1:]]) for j in range(len(m)) if m[0][j])


def leading_minors_positive(m):
    return all(cofactor_det([row[:k] for row in m[:k]]) > 0 for k in range(1, len(m) + 1))


sym = st.integers(1, 5).flatmap(
    lambda n: st.lists(st.integers(-3, 3), min_size=n * (n + 1) // 2, max_size=n * (n + 1) // 2).map(
        lambda vals, n=n: _fill(n, vals)
    )
)


def _fill(n, vals):
    m = [[0] * n for _ in range(n)]
    it = iter(vals)
    for i in range(n):
        for j in range(i, n):
            m[i][j] = m[j][i] = next(it)
    return m


def unimodular(n, seed):
    return forms.random_unimodular(n, random.Random(seed), steps=10, bound=2)


def test_e8_invariants():
    rep = forms.classify(forms.e8())
    assert (rep.rank, rep.det, rep.signature) == (8, 1, 8)
    assert (rep.definiteness, rep.parity, rep.unimodular) == ("PosDef", "Even", True)
    assert rep.diagonalizable_to_identity == NO


def test_e8_roots():
    # 240 roots of norm 2, listed once per +-pair
    assert len(forms.short_vectors(forms.e8(), 2)) == 120
    assert forms.short_vectors(forms.e8(), 1) == []


@pytest.mark.parametrize(
    "m, expected",
    [
        (forms.identity(4), YES),
        (forms.identity(3, -1), YES),
        (forms.direct_sum(forms.e8(), forms.identity(1)), NO),
        (forms.direct_sum(forms.e8(), forms.identity(3)), NO),
        ([[2, 1], [1, 1]], YES),
        ([[0, 1], [1, 0]], NOT_APPLICABLE),
        ([[2]], NOT_APPLICABLE),
        (forms.direct_sum(forms.e8(), forms.e8()), NO),
        (forms.direct_sum(forms.e8(), forms.identity(5)), UNKNOWN),
    ],
)
def test_diagonalizability(m, expected):
    assert forms.diagonalizable_to_identity(m) == expected


def test_non_symmetric_rejected():
    with pytest.raises(FormError):
        forms.classify([[1, 2], [0, 1]])


def test_donaldson_predicate():
    assert forms.donaldson_obstructed(forms.e8()) is True
    assert forms.donaldson_obstructed(forms.identity(5)) is False
    assert forms.donaldson_obstructed([[0, 1], [1, 0]]) is False
    assert forms.donaldson_obstructed(forms.direct_sum(forms.e8(), forms.identity(5))) is None
    assert forms.donaldson_obstructed(forms.direct_sum(forms.e8(), forms.identity(5)), rank_cap=13) is True


@given(sym)
def test_determinant_matches_cofactor_expansion(m):
    assert forms.determinant(m) == cofactor_det(m)


@given(sym)
def test_inertia_against_sylvester(m):
    p, q, z = forms.inertia(m)
    assert p + q + z == len(m)
    assert (p == len(m)) == leading_minors_positive(m)
    neg = [[-v for v in row] for row in m]
    assert forms.inertia(neg) == (q, p, z)
    assert (z == 0) == (cofactor_det(m) != 0)


@settings(max_examples=25)
@given(st.integers(0, 10**6), st.sampled_from(["e8", "i6", "e8+i2", "h", "-i3"]))
def test_classification_is_a_congruence_invariant(seed, name):
    m = {
        "e8": forms.e8(),
        "i6": forms.identity(6),
        "e8+i2": forms.direct_sum(forms.e8(), forms.identity(2)),
        "h": [[0, 1], [1, 0]],
        "-i3": forms.identity(3, -1),
    }[name]
    u = unimodular(len(m), seed)
    assert forms.classify(forms.congruent(m, u)) == forms.classify(m)


@given(st.integers(0, 10**6), st.integers(1, 7))
def test_congruent_identity_splits_completely(seed, n):
    m = forms.congruent(forms.identity(n), unimodular(n, seed))
    assert forms.diagonalizable_to_identity(m) == YES


def test_e8_presentation():
    r = forms.e8_presentation()
    assert artin.abelianization_matrix(r) == forms.e8()
    assert artin.check_equation(r.n, r.relators) is None


def test_theorem_witness_on_e8():
    w = forms.theorem_witness(forms.e8_presentation(), budget=60)
    assert w.verdict == forms.CERTIFIED
    assert w.target == "SL(2,5)"


def test_theorem_witness_not_obstructed():
    r = artin.ArtinPresentation.identity(3)
    assert forms.theorem_witness(r).verdict == forms.NOT_OBSTRUCTED


def test_sharpness_witness():
    rels, violation = forms.sharpness_witness()
    assert group_order(FpGroup(8, tuple(rels))) == 1
    assert violation is not None
    assert artin.exponent_matrix(rels, 8) == forms.e8()


def test_trivial_group_with_any_unimodular_form():
    m = forms.congruent(forms.identity(4), unimodular(4, 3))
    rels = forms.trivial_group_with_form(m)
    assert artin.exponent_matrix(rels, 4) == m
    assert group_order(FpGroup(4, tuple(rels))) == 1
