"""Felsch-style Todd-Coxeter coset enumeration.

Cosets are numbered from 0 (the subgroup itself) in order of definition.
Columns are ``2*(g-1)`` for x_g and ``2*(g-1)+1`` for x_g^-1, so the inverse
column is ``col ^ 1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from ..words import Word
from .fpgroup import FpGroup

UNDEF = -1


class CosetOverflow(RuntimeError):
    """The table outgrew ``max_cosets``; the index is unknown (not necessarily infinite)."""

    def __init__(self, max_cosets: int, defined: int):
        super().__init__(f"coset table exceeded {max_cosets} cosets after {defined} definitions")
        self.max_cosets = max_cosets
        self.defined = defined


@dataclass
class CosetTable:
    ngens: int
    rows: list[list[int]]
    completed: bool
    defined: int  # total cosets ever defined

    @property
    def index(self) -> int:
        return len(self.rows)

    def action(self, word: Word, coset: int = 0) -> int:
        c = coset
        for g, e in word.syllables:
            col = 2 * (g - 1) + (0 if e > 0 else 1)
            for _ in range(abs(e)):
                c = self.rows[c][col]
        return c

    def permutations(self) -> list[list[int]]:
        """Permutation of the cosets induced by each generator x_1..x_n."""
        return [[row[2 * g] for row in self.rows] for g in range(self.ngens)]


def _letters(w: Word) -> list[int]:
    out = []
    for g, e in w.syllables:
        col = 2 * (g - 1) + (0 if e > 0 else 1)
        out.extend([col] * abs(e))
    return out


class _Enumerator:
    def __init__(self, ngens: int, relators: Sequence[Word], max_cosets: int):
        self.ncols = 2 * ngens
        self.max_cosets = max_cosets
        self.table: list[list[int]] = [[UNDEF] * self.ncols]
        self.parent: list[int] = [0]
        self.live = 1
        self.defined = 1
        self.deductions: list[tuple[int, int]] = []
        # every cyclic conjugate of every relator and its inverse, keyed by first letter
        self.cycles: list[list[list[int]]] = [[] for _ in range(self.ncols)]
        seen = set()
        for w in relators:
            core, _ = w.cyclically_reduce()
            if not core:
                continue
            base = _letters(core)
            for seq in (base, [c ^ 1 for c in reversed(base)]):
                for k in range(len(seq)):
                    rot = tuple(seq[k:] + seq[:k])
                    if rot not in seen:
                        seen.add(rot)
                        self.cycles[rot[0]].append(list(rot))
        self.pointer = 0
        self.hole_floor: Optional[int] = None

    # union-find

    def rep(self, c: int) -> int:
        p = self.parent
        r = c
        while p[r] != r:
            r = p[r]
        while p[c] != r:
            p[c], c = r, p[c]
        return r

    def merge(self, a: int, b: int, queue: list[int]) -> None:
        a, b = self.rep(a), self.rep(b)
        if a == b:
            return
        lo, hi = (a, b) if a < b else (b, a)
        self.parent[hi] = lo
        self.live -= 1
        queue.append(hi)

    def coincidence(self, a: int, b: int) -> None:
        t = self.table
        queue: list[int] = []
        self.merge(a, b, queue)
        i = 0
        while i < len(queue):
            e = queue[i]
            i += 1
            row = t[e]
            for x in range(self.ncols):
                f = row[x]
                if f == UNDEF:
                    continue
                xi = x ^ 1
                if t[f][xi] == e:
                    t[f][xi] = UNDEF
                    self._note_hole(f)
                e1, f1 = self.rep(e), self.rep(f)
                if t[e1][x] != UNDEF:
                    self.merge(f1, t[e1][x], queue)
                elif t[f1][xi] != UNDEF:
                    self.merge(e1, t[f1][xi], queue)
                else:
                    t[e1][x] = f1
                    t[f1][xi] = e1
                    self.deductions.append((e1, x))

    def _note_hole(self, c: int) -> None:
        if self.hole_floor is None or c < self.hole_floor:
            self.hole_floor = c

    # definitions and scans

    def define(self, c: int, x: int) -> int:
        if len(self.table) >= self.max_cosets:
            raise CosetOverflow(self.max_cosets, self.defined)
        d = len(self.table)
        self.table.append([UNDEF] * self.ncols)
        self.parent.append(d)
        self.live += 1
        self.defined += 1
        self.table[c][x] = d
        self.table[d][x ^ 1] = c
        self.deductions.append((c, x))
        return d

    def scan(self, c: int, w: list[int], fill: bool = False) -> None:
        t = self.table
        n = len(w)
        while True:
            f, i = c, 0
            while i < n and t[f][w[i]] != UNDEF:
                f = t[f][w[i]]
                i += 1
            if i == n:
                if f != c:
                    self.coincidence(f, c)
                return
            b, j = c, n - 1
            while j >= i and t[b][w[j] ^ 1] != UNDEF:
                b = t[b][w[j] ^ 1]
                j -= 1
            if j < i:
                self.coincidence(f, b)
                return
            if j == i:
                t[f][w[i]] = b
                t[b][w[i] ^ 1] = f
                self.deductions.append((f, w[i]))
                return
            if not fill:
                return
            self.define(f, w[i])

    def process_deductions(self) -> None:
        t = self.table
        while self.deductions:
            c, x = self.deductions.pop()
            if self.parent[c] != c:
                continue
            for w in self.cycles[x]:
                if self.parent[c] != c:
                    break
                self.scan(c, w)
            d = t[c][x]
            if d != UNDEF and self.parent[d] == d:
                for w in self.cycles[x ^ 1]:
                    if self.parent[d] != d:
                        break
                    self.scan(d, w)

    def next_hole(self) -> Optional[tuple[int, int]]:
        if self.hole_floor is not None:
            self.pointer = min(self.pointer, self.hole_floor)
            self.hole_floor = None
        t, p = self.table, self.parent
        c = self.pointer
        while c < len(t):
            if p[c] == c:
                row = t[c]
                for x in range(self.ncols):
                    if row[x] == UNDEF:
                        self.pointer = c
                        return c, x
            c += 1
        self.pointer = c
        return None

    def compact(self) -> None:
        t, p = self.table, self.parent
        new_index = {}
        for c in range(len(t)):
            if p[c] == c:
                new_index[c] = len(new_index)
        rows = []
        for c in range(len(t)):
            if p[c] == c:
                rows.append([new_index[self.rep(v)] if v != UNDEF else UNDEF for v in t[c]])
        self.table = rows
        self.parent = list(range(len(rows)))
        self.pointer = 0
        self.hole_floor = None

    def run(self, subgroup: Sequence[Word]) -> CosetTable:
        for w in subgroup:
            letters = _letters(w)
            if letters:
                self.scan(self.rep(0), letters, fill=True)
                self.process_deductions()
        while True:
            if self.live < 0.5 * len(self.table) and not self.deductions:
                self.compact()
            hole = self.next_hole()
            if hole is None:
                break
            c, x = hole
            self.define(c, x)
            self.process_deductions()
        self.compact()
        return CosetTable(self.ncols // 2, self.table, True, self.defined)


def todd_coxeter(
    g: FpGroup, subgroup_gens: Sequence[Word] = (), max_cosets: int = 100_000
) -> CosetTable:
    """Enumerate cosets of the subgroup generated by ``subgroup_gens``.

    Raises :class:`CosetOverflow` once more than ``max_cosets`` rows are needed.
    """
    if max_cosets < 1:
        raise ValueError("max_cosets must be at least 1")
    return _Enumerator(g.generator_count, g.relators, max_cosets).run(subgroup_gens)


def group_order(g: FpGroup, max_cosets: int = 100_000) -> Optional[int]:
    """|G| if the enumeration closes within the cap, else None."""
    try:
        return todd_coxeter(g, (), max_cosets).index
    except CosetOverflow:
        return None
