from itertools import permutations

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from apforge.laurent import LaurentPoly, determinant, exact_div, gcd_all, poly_gcd

P = LaurentPoly.parse

polys = st.builds(
    LaurentPoly,
    st.lists(st.integers(-4, 4), min_size=1, max_size=4),
    st.integers(-2, 2),
)


def leibniz(m):
    n = len(m)
    total = LaurentPoly()
    for perm in permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = LaurentPoly([-1 if inversions % 2 else 1])
        for i, j in enumerate(perm):
            term = term * m[i][j]
        total = total + term
    return total


@pytest.mark.parametrize(
    "text, printed",
    [("t^2-t+1", "t^2-t+1"), ("-t^-1+3-t", None), ("1", "1"), ("2t^{3}", "2t^3")],
)
def test_parse_and_print(text, printed):
    p = P(text)
    if printed is not None:
        assert str(p) == printed
    assert P(str(p)) == p


def test_parse_rejects_garbage():
    with pytest.raises(ValueError):
        P("")


def test_canonical_removes_units():
    assert P("-t^-1+3-t").canonical() == P("t^2-3t+1")
    assert P("-t^5").canonical() == P("1")
    assert P("t^3-t^2+t").canonical() == P("t^2-t+1")


def test_gcd_values():
    assert poly_gcd(P("t^2-1"), P("t^2-2t+1")).canonical() == P("t-1").canonical()
    assert poly_gcd(P("2t+2"), P("4t+4")) == P("2t+2")
    assert poly_gcd(P("t^2-t+1"), P("t^2-3t+1")) == P("1")
    assert gcd_all([P("t^2-1") * P("t^2-t+1"), P("t^3+1") * P("t-3")]) == P("t^3+1")


def test_exact_division():
    assert exact_div(P("t^3+1"), P("t+1")) == P("t^2-t+1")
    with pytest.raises(ValueError):
        exact_div(P("t^2+1"), P("t+1"))


def test_determinant_small():
    m = [[P("1-t"), P("t")], [P("-1"), P("1-t")]]
    assert determinant(m) == P("t^2-t+1")


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert a - a == LaurentPoly()


@given(polys, polys)
def test_evaluation_is_multiplicative(a, b):
    assert (a * b).evaluate(2) == pytest.approx(a.evaluate(2) * b.evaluate(2))


@given(polys, polys, polys)
def test_gcd_divides_and_is_greatest(a, b, c):
    assume(not c.is_zero() and not (a.is_zero() and b.is_zero()))
    g = poly_gcd(a * c, b * c)
    exact_div(a * c, g)
    exact_div(b * c, g)
    exact_div(g, c)


@given(polys)
def test_inverse_substitution_involutive(a):
    assert a.substitute_inverse().substitute_inverse() == a


@given(st.lists(st.lists(polys, min_size=3, max_size=3), min_size=3, max_size=3))
def test_determinant_matches_leibniz(m):
    assert determinant(m) == leibniz(m)
