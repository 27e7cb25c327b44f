from apforge import artin, braids, forms
from apforge.groups.finite import sl25
from apforge.groups.fpgroup import from_strings
from apforge.groups.homs import is_homomorphism
from apforge.groups.triality import I120, TRIVIAL, UNKNOWN, VIOLATION, group_triality, triality_check


def test_trivial():
    res = group_triality(from_strings(2, ["x1 x2", "x1 x2^2"]))
    assert res.verdict == TRIVIAL and res.order == 1


def test_binary_icosahedral_is_recognized():
    g = from_strings(3, ["x1^2 x2^-3", "x2^3 x3^-5", "x1^2 (x1 x2 x3)^-1"])
    res = group_triality(g)
    assert res.verdict == I120
    assert res.order == 120
    target = sl25()
    images = [target.labels.index(tuple(m)) for m in res.isomorphism]
    assert is_homomorphism(g, target, images)
    assert len(target.subgroup_generated(images)) == 120


def test_other_perfect_finite_group_is_flagged():
    # A5 is perfect of order 60: it cannot be pi(r), so it is reported as a violation
    res = group_triality(from_strings(2, ["x1^2", "x2^3", "(x1 x2)^5"]))
    assert res.verdict == VIOLATION
    assert res.order == 60


def test_non_perfect_is_unknown():
    res = group_triality(from_strings(1, ["x1^3"]))
    assert res.verdict == UNKNOWN and not res.perfect


def test_overflow_is_unknown():
    res = group_triality(from_strings(2, ["x1^2", "x2^3", "(x1 x2)^7"]), max_cosets=2000)
    assert res.verdict == UNKNOWN and res.perfect and res.order is None


def test_identity_with_unit_framings_is_trivial():
    for f in ((1, 1), (1, -1), (-1, -1, 1)):
        r = artin.from_braid(braids.BraidWord(len(f), ()), f)
        assert triality_check(r).verdict == TRIVIAL


def test_e8_presentation_is_i120():
    res = triality_check(forms.e8_presentation())
    assert res.verdict == I120
    assert res.simplified.generator_count == 2


def test_json():
    res = triality_check(forms.e8_presentation())
    js = res.to_json()
    assert js["verdict"] == I120 and js["order"] == 120
