"""Small finite groups as multiplication tables (targets for homomorphism search)."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations
from typing import Callable, Hashable, Iterable, Optional, Sequence

MAX_ORDER = 720


@dataclass
class FiniteGroup:
    name: str
    table: list[list[int]]  # table[a][b] = a*b
    identity: int = 0
    labels: list = field(default_factory=list, repr=False)

    def __post_init__(self):
        n = len(self.table)
        self.inverse = [0] * n
        for a in range(n):
            row = self.table[a]
            self.inverse[a] = row.index(self.identity)

    @property
    def order(self) -> int:
        return len(self.table)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def power(self, a: int, k: int) -> int:
        if k < 0:
            a, k = self.inverse[a], -k
        out = self.identity
        for _ in range(k):
            out = self.table[out][a]
        return out

    def element_order(self, a: int) -> int:
        k, x = 1, a
        while x != self.identity:
            x = self.table[x][a]
            k += 1
        return k

    def is_abelian(self) -> bool:
        t = self.table
        n = self.order
        return all(t[a][b] == t[b][a] for a in range(n) for b in range(a + 1, n))

    def commute(self, a: int, b: int) -> bool:
        return self.table[a][b] == self.table[b][a]

    def subgroup_generated(self, gens: Iterable[int]) -> set[int]:
        seen = {self.identity}
        frontier = [self.identity]
        gens = [g for g in set(gens) if g != self.identity]
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = self.table[x][g]
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return seen

    def conjugacy_classes(self) -> list[list[int]]:
        seen: set[int] = set()
        classes = []
        t, inv = self.table, self.inverse
        for a in range(self.order):
            if a in seen:
                continue
            cls = sorted({t[t[g][a]][inv[g]] for g in range(self.order)})
            seen.update(cls)
            classes.append(cls)
        return classes

    def check_group_axioms(self, samples: int = 2000, seed: int = 0) -> bool:
        n = self.order
        t = self.table
        if any(t[self.identity][a] != a or t[a][self.identity] != a for a in range(n)):
            return False
        if any(t[a][self.inverse[a]] != self.identity for a in range(n)):
            return False
        if any(sorted(row) != list(range(n)) for row in t):
            return False
        rng = random.Random(seed)
        for _ in range(samples):
            a, b, c = rng.randrange(n), rng.randrange(n), rng.randrange(n)
            if t[t[a][b]][c] != t[a][t[b][c]]:
                return False
        return True


def from_elements(name: str, elements: Sequence[Hashable], mul: Callable, identity: Hashable) -> FiniteGroup:
    index = {e: k for k, e in enumerate(elements)}
    table = [[index[mul(a, b)] for b in elements] for a in elements]
    return FiniteGroup(name, table, index[identity], list(elements))


def closure(gens: Sequence[Hashable], mul: Callable, identity: Hashable, limit: int = MAX_ORDER) -> list:
    """Elements generated by ``gens`` in breadth-first discovery order."""
    elems = [identity]
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = mul(x, g)
                if y not in seen:
                    seen.add(y)
                    elems.append(y)
                    nxt.append(y)
                    if len(elems) > limit:
                        raise ValueError(f"group exceeds order cap {limit}")
        frontier = nxt
    return elems


def cyclic(k: int) -> FiniteGroup:
    if k < 1:
        raise ValueError("cyclic group order must be positive")
    return FiniteGroup(f"C{k}", [[(a + b) % k for b in range(k)] for a in range(k)], 0, list(range(k)))


def _perm_mul(p: tuple, q: tuple) -> tuple:
    # apply p then q (right action), matching word order in group presentations
    return tuple(q[p[i]] for i in range(len(p)))


def _parity(p: tuple) -> int:
    seen, sign = set(), 0
    for i in range(len(p)):
        if i in seen:
            continue
        j, length = i, 0
        while j not in seen:
            seen.add(j)
            j = p[j]
            length += 1
        sign ^= (length - 1) & 1
    return sign


def symmetric(k: int) -> FiniteGroup:
    if not 1 <= k <= 6:
        raise ValueError("symmetric groups are capped at S_6")
    elems = sorted(permutations(range(k)))
    return from_elements(f"S{k}", elems, _perm_mul, tuple(range(k)))


def alternating(k: int) -> FiniteGroup:
    if not 1 <= k <= 6:
        raise ValueError("alternating groups are capped at A_6")
    elems = [p for p in sorted(permutations(range(k))) if _parity(p) == 0]
    return from_elements(f"A{k}", elems, _perm_mul, tuple(range(k)))


def binary_dihedral(k: int) -> FiniteGroup:
    """Dicyclic group of order 4k: <a, x | a^2k, x^2 = a^k, x^-1 a x = a^-1>."""
    if k < 2:
        raise ValueError("binary dihedral groups need k >= 2")
    m = 2 * k
    elems = [(i, e) for e in (0, 1) for i in range(m)]  # a^i x^e

    def mul(p, q):
        i, e = p
        j, f = q
        if e == 0:
            return ((i + j) % m, f)
        # a^i x a^j x^f = a^(i-j) x^(1+f), x^2 = a^k
        if f == 0:
            return ((i - j) % m, 1)
        return ((i - j + k) % m, 0)

    return from_elements(f"BD{4 * k}", elems, mul, (0, 0))


def sl2(p: int) -> FiniteGroup:
    """SL(2, p) from explicit 2x2 matrices over the prime field."""
    elems = []
    for a in range(p):
        for b in range(p):
            for c in range(p):
                for d in range(p):
                    if (a * d - b * c) % p == 1:
                        elems.append((a, b, c, d))
    if len(elems) > MAX_ORDER:
        raise ValueError("order cap exceeded")

    def mul(x, y):
        a, b, c, d = x
        e, f, g, h = y
        return ((a * e + b * g) % p, (a * f + b * h) % p, (c * e + d * g) % p, (c * f + d * h) % p)

    return from_elements(f"SL(2,{p})", elems, mul, (1, 0, 0, 1))


def sl25() -> FiniteGroup:
    """SL(2,5), the binary icosahedral group I(120)."""
    g = sl2(5)
    g.name = "SL(2,5)"
    return g


# Quaternions over Q(sqrt 2): a number a + b*sqrt2 is the pair (a, b) of Fractions.


def _r2mul(x, y):
    return (x[0] * y[0] + 2 * x[1] * y[1], x[0] * y[1] + x[1] * y[0])


def _r2add(x, y):
    return (x[0] + y[0], x[1] + y[1])


def _r2neg(x):
    return (-x[0], -x[1])


def _qmul(p, q):
    a1, b1, c1, d1 = p
    a2, b2, c2, d2 = q
    m = _r2mul
    s = _r2add
    n = _r2neg
    return (
        s(s(m(a1, a2), n(m(b1, b2))), s(n(m(c1, c2)), n(m(d1, d2)))),
        s(s(m(a1, b2), m(b1, a2)), s(m(c1, d2), n(m(d1, c2)))),
        s(s(m(a1, c2), n(m(b1, d2))), s(m(c1, a2), m(d1, b2))),
        s(s(m(a1, d2), m(b1, c2)), s(n(m(c1, b2)), m(d1, a2))),
    )


def _q(*coords) -> tuple:
    return tuple((Fraction(a), Fraction(b)) for a, b in coords)


_Q_ONE = _q((1, 0), (0, 0), (0, 0), (0, 0))


def binary_tetrahedral() -> FiniteGroup:
    half = Fraction(1, 2)
    i = _q((0, 0), (1, 0), (0, 0), (0, 0))
    w = _q((half, 0), (half, 0), (half, 0), (half, 0))
    elems = closure([i, w], _qmul, _Q_ONE)
    return from_elements("2T", elems, _qmul, _Q_ONE)


def binary_octahedral() -> FiniteGroup:
    half = Fraction(1, 2)
    r = _q((0, half), (0, half), (0, 0), (0, 0))  # (1 + i)/sqrt2
    w = _q((half, 0), (half, 0), (half, 0), (half, 0))
    elems = closure([r, w], _qmul, _Q_ONE)
    return from_elements("2O", elems, _qmul, _Q_ONE)


def by_name(spec: str) -> FiniteGroup:
    """Parse target names used by the CLI: ``sl25``, ``s3``, ``a5``, ``cyclic:k``, ``bd:k``, ``2t``, ``2o``."""
    s = spec.strip().lower()
    if s in ("sl25", "sl(2,5)", "i120", "2i"):
        return sl25()
    if s in ("2t", "sl23"):
        return binary_tetrahedral()
    if s == "2o":
        return binary_octahedral()
    if s.startswith("cyclic:") or s.startswith("c:"):
        return cyclic(int(s.split(":", 1)[1]))
    if s.startswith("bd:"):
        return binary_dihedral(int(s.split(":", 1)[1]))
    if s[0] == "s" and s[1:].isdigit():
        return symmetric(int(s[1:]))
    if s[0] == "a" and s[1:].isdigit():
        return alternating(int(s[1:]))
    raise ValueError(f"unknown target group {spec!r}")


def su2_targets() -> list[FiniteGroup]:
    """Finite subgroups of SU(2) in search order."""
    out = [cyclic(k) for k in range(2, 13)]
    out += [binary_dihedral(k) for k in range(2, 7)]
    out += [binary_tetrahedral(), binary_octahedral(), sl25()]
    return out
