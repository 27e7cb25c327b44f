"""Smith normal form over the integers, with unimodular transforms."""

from __future__ import annotations

from typing import Sequence

Matrix = list[list[int]]


def _identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def smith_with_transforms(m: Sequence[Sequence[int]], ncols: int | None = None) -> tuple[Matrix, Matrix, Matrix]:
    """Return ``(U, D, V)`` with ``U @ m @ V == D`` diagonal, d_1 | d_2 | ..., d_i >= 0.

    ``ncols`` is needed only when ``m`` has no rows.
    """
    a = [list(map(int, row)) for row in m]
    rows = len(a)
    cols = len(a[0]) if rows else (ncols or 0)
    U, V = _identity(rows), _identity(cols)

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, k):  # row dst += k * row src
        if k:
            a[dst] = [x + k * y for x, y in zip(a[dst], a[src])]
            U[dst] = [x + k * y for x, y in zip(U[dst], U[src])]

    def add_col(src, dst, k):
        if k:
            for row in a:
                row[dst] += k * row[src]
            for row in V:
                row[dst] += k * row[src]

    t = 0
    while t < min(rows, cols):
        # pivot: smallest nonzero |entry| in the remaining block
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                if a[i][j] and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        swap_rows(t, best[0])
        swap_cols(t, best[1])
        while True:
            p = a[t][t]
            dirty = False
            for i in range(t + 1, rows):
                q = a[i][t] // p
                add_row(t, i, -q)
                if a[i][t]:
                    dirty = True
            for j in range(t + 1, cols):
                q = a[t][j] // p
                add_col(t, j, -q)
                if a[t][j]:
                    dirty = True
            if dirty:
                # move the smallest remainder into the pivot and repeat
                best = (t, t)
                for i in range(t, rows):
                    if a[i][t] and abs(a[i][t]) < abs(a[best[0]][best[1]]):
                        best = (i, t)
                for j in range(t, cols):
                    if a[t][j] and abs(a[t][j]) < abs(a[best[0]][best[1]]):
                        best = (t, j)
                swap_rows(t, best[0])
                swap_cols(t, best[1])
                continue
            # divisibility: pivot must divide the rest of the block
            bad = None
            for i in range(t + 1, rows):
                for j in range(t + 1, cols):
                    if a[i][j] % p:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            add_row(bad, t, 1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            U[t] = [-x for x in U[t]]
        t += 1
    return U, a, V


def invariant_factors(m: Sequence[Sequence[int]], ncols: int | None = None) -> list[int]:
    """Diagonal of the Smith form, length min(rows, cols)."""
    _, d, _ = smith_with_transforms(m, ncols)
    return [d[i][i] for i in range(min(len(d), len(d[0]) if d else 0))]


def smith_normal_form(m: Sequence[Sequence[int]]) -> list[int]:
    return invariant_factors(m)


def abelian_invariants(m: Sequence[Sequence[int]], ncols: int) -> tuple[list[int], int]:
    """Invariants of Z^ncols / rowspace(m): (torsion orders > 1, free rank)."""
    d = invariant_factors(m, ncols) if m else []
    torsion = [x for x in d if x > 1]
    rank = ncols - sum(1 for x in d if x != 0)
    return torsion, rank


def format_abelian(torsion: Sequence[int], rank: int) -> str:
    parts = [f"Z/{k}" for k in torsion] + ["Z"] * rank
    return " + ".join(parts) if parts else "0"
