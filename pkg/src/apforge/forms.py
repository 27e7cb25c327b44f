"""Integral symmetric bilinear forms: invariants and the definite diagonalizability question."""

from __future__ import annotations

from dataclasses import asdict, dataclass
from fractions import Fraction
from math import floor, isqrt
from typing import Optional, Sequence

Matrix = list[list[int]]

RANK_CAP = 12

YES, NO, UNKNOWN, NOT_APPLICABLE = "Yes", "No", "Unknown", "NotApplicable"


class FormError(ValueError):
    pass


def e8() -> Matrix:
    """Even unimodular positive definite rank-8 form (tree with one branch vertex)."""
    edges = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (4, 6), (6, 7)]
    m = [[2 if i == j else 0 for j in range(8)] for i in range(8)]
    for i, j in edges:
        m[i][j] = m[j][i] = -1
    return m


def identity(n: int, sign: int = 1) -> Matrix:
    return [[sign if i == j else 0 for j in range(n)] for i in range(n)]


def direct_sum(*blocks: Matrix) -> Matrix:
    n = sum(len(b) for b in blocks)
    out = [[0] * n for _ in range(n)]
    off = 0
    for b in blocks:
        for i, row in enumerate(b):
            for j, v in enumerate(row):
                out[off + i][off + j] = v
        off += len(b)
    return out


def check_symmetric(m: Sequence[Sequence[int]]) -> Matrix:
    n = len(m)
    if any(len(row) != n for row in m):
        raise FormError("form matrix must be square")
    for i in range(n):
        for j in range(n):
            if not isinstance(m[i][j], int):
                raise FormError("form entries must be integers")
            if m[i][j] != m[j][i]:
                raise FormError(f"form is not symmetric at ({i + 1},{j + 1})")
    return [list(row) for row in m]


def determinant(m: Sequence[Sequence[int]]) -> int:
    """Bareiss fraction-free determinant over Z."""
    n = len(m)
    if n == 0:
        return 1
    a = [list(row) for row in m]
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def inertia(m: Sequence[Sequence[int]]) -> tuple[int, int, int]:
    """(positive, negative, zero) counts, by exact congruence diagonalization over Q."""
    n = len(m)
    a = [[Fraction(v) for v in row] for row in m]
    pos = neg = 0
    size = n
    while size:
        k = next((i for i in range(size) if a[i][i] != 0), None)
        if k is None:
            pair = next(((i, j) for i in range(size) for j in range(i + 1, size) if a[i][j] != 0), None)
            if pair is None:
                break
            i, j = pair
            # e_i -> e_i + e_j makes the diagonal entry 2 a_ij != 0
            for c in range(size):
                a[i][c] += a[j][c]
            for r in range(size):
                a[r][i] += a[r][j]
            k = i
        last = size - 1
        a[k], a[last] = a[last], a[k]
        for row in a:
            row[k], row[last] = row[last], row[k]
        p = a[last][last]
        if p > 0:
            pos += 1
        else:
            neg += 1
        for i in range(last):
            f = a[i][last] / p
            if f:
                for j in range(last):
                    a[i][j] -= f * a[last][j]
        size = last
    return pos, neg, n - pos - neg


def _ldl(m: Matrix) -> tuple[list[Fraction], list[list[Fraction]]]:
    """q(x) = sum_i d_i (x_i + sum_{j>i} mu[i][j] x_j)^2 for positive definite m."""
    n = len(m)
    a = [[Fraction(v) for v in row] for row in m]
    d = [Fraction(0)] * n
    mu = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        d[i] = a[i][i]
        if d[i] <= 0:
            raise FormError("form is not positive definite")
        for j in range(i + 1, n):
            mu[i][j] = a[i][j] / d[i]
        for j in range(i + 1, n):
            for k in range(i + 1, n):
                a[j][k] -= mu[i][j] * d[i] * mu[i][k]
    return d, mu


class _Budget(Exception):
    pass


def short_vectors(m: Matrix, bound: int, limit: Optional[int] = None, node_cap: int = 2_000_000) -> list[list[int]]:
    """Nonzero integer x with x^T m x <= bound, one of each pair +-x (Fincke-Pohst, exact arithmetic)."""
    n = len(m)
    d, mu = _ldl(m)
    found: list[list[int]] = []
    x = [0] * n
    nodes = 0

    def rec(i: int, remaining: Fraction):
        nonlocal nodes
        if i < 0:
            if any(x) and next(v for v in reversed(x) if v) > 0:
                found.append(x[:])
                if limit is not None and len(found) >= limit:
                    raise StopIteration
            return
        c = sum((mu[i][j] * x[j] for j in range(i + 1, n)), Fraction(0))
        # integers k with d_i (k + c)^2 <= remaining
        r = remaining / d[i]
        s = isqrt(floor(r)) + 1
        lo = floor(-c) - s
        hi = floor(-c) + s + 1
        for k in range(lo, hi + 1):
            nodes += 1
            if nodes > node_cap:
                raise _Budget()
            t = k + c
            q = d[i] * t * t
            if q <= remaining:
                x[i] = k
                rec(i - 1, remaining - q)
        x[i] = 0

    try:
        rec(n - 1, Fraction(bound))
    except StopIteration:
        pass
    return found


def _bilinear(m: Matrix, u: Sequence[int], v: Sequence[int]) -> int:
    n = len(m)
    return sum(u[i] * m[i][j] * v[j] for i in range(n) for j in range(n) if u[i] and v[j])


def _row_basis(vectors: list[list[int]]) -> list[list[int]]:
    """Basis of the Z-span of ``vectors`` by integer row echelon reduction."""
    rows = [v[:] for v in vectors if any(v)]
    if not rows:
        return []
    ncols = len(rows[0])
    basis = []
    for col in range(ncols):
        while True:
            nz = [r for r in rows if r[col]]
            if len(nz) <= 1:
                break
            piv = min(nz, key=lambda r: abs(r[col]))
            for r in nz:
                if r is not piv:
                    q = r[col] // piv[col]
                    for k in range(ncols):
                        r[k] -= q * piv[k]
            rows = [r for r in rows if any(r)]
        nz = [r for r in rows if r[col]]
        if nz:
            basis.append(nz[0])
            rows = [r for r in rows if r is not nz[0]]
    return basis


def orthogonal_complement_gram(m: Matrix, v: list[int]) -> Matrix:
    """Gram matrix of v-perp, where v has norm 1 (so the lattice splits as Zv + v-perp)."""
    n = len(m)
    proj = []
    for k in range(n):
        e = [1 if i == k else 0 for i in range(n)]
        c = _bilinear(m, e, v)
        proj.append([e[i] - c * v[i] for i in range(n)])
    basis = _row_basis(proj)
    return [[_bilinear(m, a, b) for b in basis] for a in basis]


def diagonalizable_to_identity(m: Matrix, rank_cap: int = RANK_CAP, node_cap: int = 2_000_000) -> str:
    """For definite unimodular m: is m congruent over Z to +-I?  Splits off norm-1 vectors one at a time."""
    m = check_symmetric(m)
    n = len(m)
    if n == 0:
        return YES
    if abs(determinant(m)) != 1:
        return NOT_APPLICABLE
    p, q, _ = inertia(m)
    if p == n:
        g = m
    elif q == n:
        g = [[-v for v in row] for row in m]
    else:
        return NOT_APPLICABLE
    if all(g[i][i] % 2 == 0 for i in range(n)):
        return NO  # an even form has no norm-1 vectors, while +-I does
    if n > rank_cap:
        return UNKNOWN
    try:
        while g:
            units = short_vectors(g, 1, limit=1, node_cap=node_cap)
            if not units:
                return NO
            g = orthogonal_complement_gram(g, units[0])
    except _Budget:
        return UNKNOWN
    return YES


@dataclass(frozen=True)
class FormReport:
    rank: int
    det: int
    signature: int
    definiteness: str  # PosDef | NegDef | Indefinite | Degenerate
    parity: str  # Even | Odd
    unimodular: bool
    diagonalizable_to_identity: str  # Yes | No | Unknown | NotApplicable

    def to_json(self) -> dict:
        return asdict(self)


def classify(m: Sequence[Sequence[int]], rank_cap: int = RANK_CAP) -> FormReport:
    m = check_symmetric(m)
    n = len(m)
    det = determinant(m)
    p, q, z = inertia(m)
    if z:
        kind = "Degenerate"
    elif p == n:
        kind = "PosDef"
    elif q == n:
        kind = "NegDef"
    else:
        kind = "Indefinite"
    parity = "Even" if all(m[i][i] % 2 == 0 for i in range(n)) else "Odd"
    unimodular = abs(det) == 1
    diag = diagonalizable_to_identity(m, rank_cap) if unimodular and kind in ("PosDef", "NegDef") else NOT_APPLICABLE
    return FormReport(n, det, p - q, kind, parity, unimodular, diag)


def donaldson_obstructed(m: Sequence[Sequence[int]], rank_cap: int = RANK_CAP) -> Optional[bool]:
    """True when m is unimodular and definite but not congruent to +-I; None when undecided."""
    rep = classify(m, rank_cap)
    if not rep.unimodular or rep.definiteness not in ("PosDef", "NegDef"):
        return False
    if rep.diagonalizable_to_identity == UNKNOWN:
        return None
    return rep.diagonalizable_to_identity == NO


def congruent(m: Matrix, u: Matrix) -> Matrix:
    """u^T m u."""
    n = len(m)
    mu = [[sum(m[i][k] * u[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
    return [[sum(u[k][i] * mu[k][j] for k in range(n)) for j in range(n)] for i in range(n)]


def random_unimodular(n: int, rng, steps: int = 12, bound: int = 2) -> Matrix:
    """Product of random elementary integer matrices (and sign flips)."""
    u = identity(n)
    for _ in range(steps):
        i, j = rng.randrange(n), rng.randrange(n)
        if i == j:
            for k in range(n):
                u[k][i] = -u[k][i]
            continue
        c = rng.choice([c for c in range(-bound, bound + 1) if c])
        for k in range(n):
            u[k][j] += c * u[k][i]
    return u


def e8_presentation():
    """An Artin presentation r on 8 strands with abelianization matrix exactly e8()."""
    from . import artin, braids

    n = 8
    m = e8()
    edges = [(i + 1, j + 1) for i in range(n) for j in range(i + 1, n) if m[i][j]]
    # each pure generator A_ij contributes -1 to entries (i,j) and (j,i)
    factors = []
    for i, j in edges:
        factors.extend([braids.pure_generator(i, j, n)] * (-m[i - 1][j - 1]))
    b = braids.product(factors, n)
    base = artin.abelianization_matrix(artin.from_braid(b, [0] * n))
    framings = [m[i][i] - base[i][i] for i in range(n)]
    r = artin.from_braid(b, framings)
    assert artin.abelianization_matrix(r) == m
    return r


CERTIFIED, NOT_OBSTRUCTED, INCONCLUSIVE = "NontrivialityCertified", "NotObstructed", "Inconclusive"


@dataclass
class WitnessResult:
    verdict: str
    target: Optional[str] = None
    images: Optional[list] = None  # images of x_1..x_n as target element labels
    searched: list = None
    reason: str = ""

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict,
            "target": self.target,
            "images": [repr(x) for x in self.images] if self.images is not None else None,
            "searched": self.searched or [],
            "reason": self.reason,
        }


def theorem_witness(r, budget: float = 60.0, node_cap: int = 10**7, targets=None) -> WitnessResult:
    """Look for a nontrivial map of pi(r) into a finite subgroup of SU(2) when A(r) is obstructed.

    ``budget`` is wall-clock seconds over the whole search.  A failed search is
    Inconclusive: representations need not land in a finite subgroup.
    """
    import time

    from .artin import abelianization_matrix
    from .groups.finite import su2_targets
    from .groups.fpgroup import pi
    from .groups.homs import SearchBudgetExceeded, find_nontrivial_hom

    obstructed = donaldson_obstructed(abelianization_matrix(r))
    if obstructed is False:
        return WitnessResult(NOT_OBSTRUCTED, searched=[], reason="A(r) is not a definite non-diagonal unimodular form")
    if obstructed is None:
        return WitnessResult(INCONCLUSIVE, searched=[], reason=f"form rank exceeds the cap {RANK_CAP}")
    g = pi(r)
    deadline = time.monotonic() + budget
    searched = []
    for target in targets if targets is not None else su2_targets():
        try:
            images = find_nontrivial_hom(g, target, node_cap, deadline)
        except SearchBudgetExceeded as exc:
            searched.append({"target": target.name, "status": "budget"})
            if exc.timed_out:
                return WitnessResult(INCONCLUSIVE, searched=searched, reason="time budget exhausted")
            continue
        if images is not None:
            searched.append({"target": target.name, "status": "found"})
            return WitnessResult(CERTIFIED, target.name, [target.labels[a] for a in images], searched)
        searched.append({"target": target.name, "status": "none"})
    return WitnessResult(INCONCLUSIVE, searched=searched, reason="finite-subgroup search exhausted")


def _elementary_ops_to_identity(m: Matrix) -> list[tuple]:
    """Row operations reducing a unimodular m to I: ('add', i, j, c) is row_i += c row_j, ('neg', i), ('swap', i, j)."""
    a = [row[:] for row in m]
    n = len(a)
    ops: list[tuple] = []

    def add(i, j, c):
        for k in range(n):
            a[i][k] += c * a[j][k]
        ops.append(("add", i, j, c))

    for col in range(n):
        while True:
            rows = [i for i in range(col, n) if a[i][col]]
            piv = min(rows, key=lambda i: abs(a[i][col]))
            others = [i for i in rows if i != piv]
            if not others:
                break
            for i in others:
                add(i, piv, -(a[i][col] // a[piv][col]))
        if piv != col:
            for k in range(n):
                a[piv][k], a[col][k] = a[col][k], a[piv][k]
            ops.append(("swap", piv, col))
        if a[col][col] < 0:
            a[col] = [-v for v in a[col]]
            ops.append(("neg", col))
        if a[col][col] != 1:
            raise FormError("matrix is not unimodular")
    for col in range(n - 1, -1, -1):
        for i in range(col):
            if a[i][col]:
                add(i, col, -a[i][col])
    return ops


def trivial_group_with_form(m: Matrix) -> list:
    """Relators w_1..w_n presenting the trivial group with exponent matrix m (m unimodular).

    Start from <x | x_1, ..., x_n> and undo a row reduction of m by relator moves
    w_i -> w_i w_j^c, w_i -> w_i^-1 and swaps; each keeps the normal closure.
    """
    from .words import Word

    n = len(m)
    rels = [Word.gen(i + 1, n) for i in range(n)]
    for op in reversed(_elementary_ops_to_identity(m)):
        if op[0] == "add":
            _, i, j, c = op
            rels[i] = rels[i] * rels[j] ** (-c)
        elif op[0] == "swap":
            _, i, j = op
            rels[i], rels[j] = rels[j], rels[i]
        else:
            rels[op[1]] = rels[op[1]].inverse()
    return rels


def sharpness_witness():
    """A presentation of the trivial group whose exponent matrix is E8, with its Artin check.

    Returns (relators, violation); the violation is expected, since an Artin
    presentation with this form would have nontrivial group.
    """
    from .artin import check_equation, exponent_matrix

    rels = trivial_group_with_form(e8())
    assert exponent_matrix(rels, 8) == e8()
    return rels, check_equation(8, rels)
