"""Knot groups of the components k_i(r) and Alexander polynomials via Fox calculus.

Knot-group rule ("AP-delete-one"): the group of k_i(r) is presented by
x_1..x_n with every relator except r_i; the meridian is x_i and the
recorded longitude word is r_i.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Sequence, Union

from .artin import ArtinPresentation
from .groups.fpgroup import FpGroup
from .groups.snf import smith_with_transforms
from .laurent import LaurentPoly, determinant, gcd_all
from .words import Word

PRESENTATION_RULE = "AP-delete-one"


class NotComputable(ValueError):
    pass


def knot_group(r: ArtinPresentation, i: int) -> FpGroup:
    if i == 0:
        raise NotImplementedError("the binding component k_0 has no implemented presentation rule")
    if not 1 <= i <= r.n:
        raise IndexError(f"knot index {i} out of range 1..{r.n}")
    rel = tuple(w for k, w in enumerate(r.relators, start=1) if k != i)
    meridian = Word.gen(i, r.n)
    return FpGroup(r.n, rel, peripheral=(meridian, r.relators[i - 1]), note=f"k_{i} ({PRESENTATION_RULE})")


# Fox calculus in the integral group ring of F_n: dict Word -> int


def fox_derivative(w: Word, g: int) -> dict[Word, int]:
    """Formal Fox derivative dw/dx_g as a finitely supported map F_n -> Z."""
    out: dict[Word, int] = {}
    prefix = Word.identity(w.rank)
    x = Word.gen(g, w.rank)
    for letter in w.letters():
        gen, sign = abs(letter), (1 if letter > 0 else -1)
        if gen == g:
            if sign > 0:
                out[prefix] = out.get(prefix, 0) + 1
            else:
                key = prefix * x.inverse()
                out[key] = out.get(key, 0) - 1
        prefix = prefix * Word.gen(gen, w.rank, sign)
    return {k: v for k, v in out.items() if v}


def abelianize_ring_element(elem: dict[Word, int], weights: Sequence[int]) -> LaurentPoly:
    terms: dict[int, int] = {}
    for w, c in elem.items():
        e = sum(weights[k] * v for k, v in enumerate(w.exponent_vector()))
        terms[e] = terms.get(e, 0) + c
    return LaurentPoly.from_dict(terms)


def fox_abelianized(w: Word, g: int, weights: Sequence[int]) -> LaurentPoly:
    """Image of dw/dx_g under x_j -> t^weights[j-1], computed syllable by syllable."""
    terms: dict[int, int] = {}
    p = 0
    for gen, e in w.syllables:
        step = weights[gen - 1]
        if gen == g:
            if e > 0:
                for m in range(e):
                    terms[p + m * step] = terms.get(p + m * step, 0) + 1
            else:
                for m in range(1, -e + 1):
                    terms[p - m * step] = terms.get(p - m * step, 0) - 1
        p += e * step
    return LaurentPoly.from_dict(terms)


def abelianization_weights(g: FpGroup) -> Optional[list[int]]:
    """x_j -> t^e_j realizing H_1(g) = Z, or None when H_1 is not infinite cyclic."""
    n = g.generator_count
    m = g.exponent_matrix()
    if not m:
        return [1] if n == 1 else None
    _, d, v = smith_with_transforms(m, n)
    diag = [d[i][i] for i in range(min(len(d), n))]
    nonzero = sum(1 for x in diag if x != 0)
    if n - nonzero != 1 or any(abs(x) != 1 for x in diag if x != 0):
        return None
    col = nonzero  # the single column of V spanning the kernel
    e = [v[j][col] for j in range(n)]
    return e


def fox_matrix(g: FpGroup, weights: Sequence[int]) -> list[list[LaurentPoly]]:
    return [[fox_abelianized(w, j, weights) for j in range(1, g.generator_count + 1)] for w in g.relators]


@dataclass(frozen=True)
class AlexanderResult:
    polynomial: LaurentPoly
    deleted_column: int  # 0 when no generator maps to t^+-1 and all minors were used
    weights: tuple[int, ...]


def alexander_details(g: FpGroup, delete: Optional[int] = None) -> AlexanderResult:
    n = g.generator_count
    weights = abelianization_weights(g)
    if weights is None:
        raise NotComputable(f"abelianization is {g.describe_abelianization()}, not Z")
    candidates = [j for j in range(1, n + 1) if abs(weights[j - 1]) == 1]
    if delete is not None and delete not in candidates:
        raise ValueError(f"x{delete} does not map to t^+-1 (weights {weights})")
    if delete is None and candidates:
        delete = candidates[0]
    if n == 1:
        return AlexanderResult(LaurentPoly([1]), delete or 1, tuple(weights))
    jac = fox_matrix(g, weights)
    size = n - 1
    if len(jac) < size:
        # too few relators: every maximal minor vanishes
        return AlexanderResult(LaurentPoly(), delete or 0, tuple(weights))
    if delete is not None:
        column_sets = [[j for j in range(n) if j != delete - 1]]
    else:
        # no generator maps to t^+-1: the minors with column j deleted are
        # Delta * (t^e_j - 1)/(t - 1), and gcd(e_j) = 1, so the gcd over all
        # maximal minors is still Delta
        column_sets = [list(c) for c in combinations(range(n), size)]
    minors = (
        determinant([[jac[i][j] for j in cols] for i in rows])
        for cols in column_sets
        for rows in combinations(range(len(jac)), size)
    )
    return AlexanderResult(gcd_all(minors), delete or 0, tuple(weights))


def alexander_polynomial(g: FpGroup, delete: Optional[int] = None) -> LaurentPoly:
    return alexander_details(g, delete).polynomial


def alexander_or_none(g: FpGroup) -> Union[LaurentPoly, None]:
    try:
        return alexander_polynomial(g)
    except NotComputable:
        return None


def mirror(g: FpGroup) -> FpGroup:
    """Invert every generator: x_j -> x_j^-1 in all relators."""
    rel = tuple(Word(((gen, -e) for gen, e in w.syllables), w.rank) for w in g.relators)
    return FpGroup(g.generator_count, rel)
