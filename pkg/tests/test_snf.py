from functools import reduce
from itertools import combinations
from math import gcd

from hypothesis import given
from hypothesis import strategies as st

from apforge.groups.snf import abelian_invariants, format_abelian, invariant_factors, smith_with_transforms


def det(m):
    if not m:
        return 1
    if len(m) == 1:
        return m[0][0]
    return sum((-1) ** j * m[0][j] * det([row[:j] + row[j + 1 :] for row in m[1:]]) for j in range(len(m)))


def determinantal_divisors(m):
    rows, cols = len(m), len(m[0])
    out = []
    for k in range(1, min(rows, cols) + 1):
        minors = [det([[m[i][j] for j in cs] for i in rs]) for rs in combinations(range(rows), k) for cs in combinations(range(cols), k)]
        out.append(reduce(gcd, (abs(x) for x in minors), 0))
    return out


def factors_from_divisors(d):
    out, prev = [], 1
    for x in d:
        out.append(x // prev if prev else 0)
        prev = x
    return out


def matmul(a, b):
    return [[sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0]))] for i in range(len(a))]


matrices = st.integers(1, 4).flatmap(
    lambda r: st.integers(1, 4).flatmap(
        lambda c: st.lists(st.lists(st.integers(-5, 5), min_size=c, max_size=c), min_size=r, max_size=r)
    )
)


@given(matrices)
def test_invariant_factors_match_determinantal_divisors(m):
    assert invariant_factors(m) == factors_from_divisors(determinantal_divisors(m))


@given(matrices)
def test_transforms(m):
    u, d, v = smith_with_transforms(m)
    assert matmul(matmul(u, m), v) == d
    assert abs(det(u)) == 1 and abs(det(v)) == 1
    diag = [d[i][i] for i in range(min(len(d), len(d[0])))]
    assert all(x >= 0 for x in diag)
    for a, b in zip(diag, diag[1:]):
        assert (b % a == 0) if a else b == 0


def test_known_groups():
    assert abelian_invariants([[2, 0], [0, 3]], 2) == ([6], 0)
    assert abelian_invariants([[2, 4], [6, 8]], 2) == ([2, 4], 0)
    assert abelian_invariants([], 3) == ([], 3)
    assert abelian_invariants([[0, 0, 0]], 3) == ([], 3)
    assert format_abelian([2, 4], 1) == "Z/2 + Z/4 + Z"
    assert format_abelian([], 0) == "0"
