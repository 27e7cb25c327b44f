"""Braid words, the Artin action on F_n, and framed pure braids.

Action convention (the only place it is fixed)::

    s_i      : x_i -> x_i x_{i+1} x_i^-1,   x_{i+1} -> x_i
    s_i^-1   : x_i -> x_{i+1},              x_{i+1} -> x_{i+1}^-1 x_i x_{i+1}

and ``artin_action(u * v) == artin_action(u) @ artin_action(v)``.
Flip ``MIRROR`` to use the mirror convention instead.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .words import FreeEndo, RankMismatch, Word, product_length

MIRROR = False


class NotPure(ValueError):
    pass


class NotABraidAutomorphism(ValueError):
    pass


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple((int(i), int(s)) for i, s in self.letters))
        for i, s in self.letters:
            if not 1 <= i <= self.strands - 1 or s not in (1, -1):
                raise ValueError(f"bad braid letter ({i}, {s}) on {self.strands} strands")

    def __mul__(self, other: BraidWord) -> BraidWord:
        if self.strands != other.strands:
            raise RankMismatch(f"{self.strands} vs {other.strands} strands")
        return BraidWord(self.strands, self.letters + other.letters)

    def inverse(self) -> BraidWord:
        return BraidWord(self.strands, tuple((i, -s) for i, s in reversed(self.letters)))

    def __pow__(self, k: int) -> BraidWord:
        base = self if k >= 0 else self.inverse()
        return BraidWord(self.strands, base.letters * abs(k))

    def __len__(self) -> int:
        return len(self.letters)

    def free_reduce(self) -> BraidWord:
        out: list[tuple[int, int]] = []
        for i, s in self.letters:
            if out and out[-1] == (i, -s):
                out.pop()
            else:
                out.append((i, s))
        return BraidWord(self.strands, tuple(out))

    def __str__(self) -> str:
        if not self.letters:
            return "1"
        runs: list[list[int]] = []
        for i, s in self.letters:
            if runs and runs[-1][0] == i and (runs[-1][1] > 0) == (s > 0):
                runs[-1][1] += s
            else:
                runs.append([i, s])
        return " ".join(f"s{i}" if e == 1 else f"s{i}^{e}" for i, e in runs)


def sigma(i: int, strands: int, power: int = 1) -> BraidWord:
    return BraidWord(strands, ((i, 1 if power > 0 else -1),) * abs(power))


def pure_generator(i: int, j: int, strands: int) -> BraidWord:
    """A_ij = (s_{j-1} .. s_{i+1}) s_i^2 (s_{i+1}^-1 .. s_{j-1}^-1) for 1 <= i < j <= n."""
    if not 1 <= i < j <= strands:
        raise ValueError(f"need 1 <= i < j <= {strands}, got ({i}, {j})")
    down = tuple((k, 1) for k in range(j - 1, i, -1))
    up = tuple((k, -1) for k in range(i + 1, j))
    return BraidWord(strands, down + ((i, 1), (i, 1)) + up)


def permutation_of(b: BraidWord) -> tuple[int, ...]:
    """Image in S_n as a 0-based tuple ``perm`` with strand ``k`` ending at ``perm[k]``."""
    perm = list(range(b.strands))
    for i, _ in b.letters:
        perm[i - 1], perm[i] = perm[i], perm[i - 1]
    inv = [0] * b.strands
    for pos, k in enumerate(perm):
        inv[k] = pos
    return tuple(inv)


def is_pure(b: BraidWord) -> bool:
    return all(p == k for k, p in enumerate(permutation_of(b)))


def _right_compose(images: list[Word], i: int, sign: int) -> None:
    """In place: images := images ∘ (action of s_i^sign)."""
    a, b = images[i - 1], images[i]
    if sign > 0 and not MIRROR or sign < 0 and MIRROR:
        images[i - 1], images[i] = a * b * a.inverse(), a
    else:
        images[i - 1], images[i] = b, b.inverse() * a * b


def artin_action(b: BraidWord) -> FreeEndo:
    images = [Word.gen(k, b.strands) for k in range(1, b.strands + 1)]
    for i, s in b.letters:
        _right_compose(images, i, s)
    return FreeEndo(images)


def _normalize_conjugator(a: Word, i: int) -> Word:
    s = a.syllables
    if s and s[-1][0] == i:
        return Word(s[:-1], a.rank, _reduced=True)
    return a


def conjugator_of(image: Word, i: int) -> Optional[Word]:
    """Return normalized ``u`` with ``image == u x_i u^-1``, or None if there is none."""
    core, conj = image.cyclically_reduce()
    if core.syllables != ((i, 1),):
        return None
    return _normalize_conjugator(conj, i)


@dataclass(frozen=True)
class FramedAutomorphism:
    """x_i -> A_i x_i A_i^-1 together with integer framings f_i."""

    strands: int
    conjugators: tuple[Word, ...]
    framings: tuple[int, ...]
    _endo: Optional[FreeEndo] = field(default=None, compare=False, repr=False, hash=False)

    def __post_init__(self):
        n = self.strands
        if len(self.conjugators) != n or len(self.framings) != n:
            raise ValueError(f"need {n} conjugators and {n} framings")
        conj = tuple(_normalize_conjugator(a, k + 1) for k, a in enumerate(self.conjugators))
        for a in conj:
            if a.rank != n:
                raise RankMismatch(f"conjugator of rank {a.rank} on {n} strands")
        object.__setattr__(self, "conjugators", conj)
        object.__setattr__(self, "framings", tuple(int(f) for f in self.framings))

    @classmethod
    def identity(cls, strands: int, framings: Optional[Sequence[int]] = None) -> FramedAutomorphism:
        f = tuple(framings) if framings is not None else (0,) * strands
        return cls(strands, tuple(Word.identity(strands) for _ in range(strands)), f)

    @property
    def endo(self) -> FreeEndo:
        if self._endo is None:
            imgs = [
                a * Word.gen(k + 1, self.strands) * a.inverse() for k, a in enumerate(self.conjugators)
            ]
            object.__setattr__(self, "_endo", FreeEndo(imgs))
        return self._endo

    def fixes_product(self) -> bool:
        p = Word.product_word(self.strands)
        return self.endo(p) == p

    def is_identity(self) -> bool:
        return not any(self.conjugators) and not any(self.framings)

    def with_framings(self, framings: Sequence[int]) -> FramedAutomorphism:
        return FramedAutomorphism(self.strands, self.conjugators, tuple(framings))


def to_framed_automorphism(b: BraidWord, framings: Optional[Sequence[int]] = None) -> FramedAutomorphism:
    n = b.strands
    f = tuple(framings) if framings is not None else (0,) * n
    if len(f) != n:
        raise ValueError(f"need {n} framings, got {len(f)}")
    if not is_pure(b):
        raise NotPure(f"braid {b} is not pure")
    return framed_from_endo(artin_action(b), f)


def framed_from_endo(e: FreeEndo, framings: Sequence[int]) -> FramedAutomorphism:
    conj = []
    for k, img in enumerate(e.images):
        a = conjugator_of(img, k + 1)
        if a is None:
            raise NotPure(f"image of x{k + 1} is not a conjugate of x{k + 1}: {img}")
        conj.append(a)
    return FramedAutomorphism(e.rank, tuple(conj), tuple(framings))


def compose(a: FramedAutomorphism, b: FramedAutomorphism) -> FramedAutomorphism:
    """The automorphism ``a ∘ b`` (apply b first); framings add."""
    if a.strands != b.strands:
        raise RankMismatch(f"{a.strands} vs {b.strands} strands")
    ea = a.endo
    conj = tuple(ea(bi) * ai for ai, bi in zip(a.conjugators, b.conjugators))
    fr = tuple(x + y for x, y in zip(a.framings, b.framings))
    return FramedAutomorphism(a.strands, conj, fr)


def _moves(n: int) -> list[tuple[int, int]]:
    # tie-break order: lowest index first, positive sign first
    return [(i, s) for i in range(1, n) for s in (1, -1)]


def braid_word_of(a: FramedAutomorphism | FreeEndo, max_steps: Optional[int] = None) -> BraidWord:
    """Recover a braid word whose Artin action equals ``a``.

    Greedy: repeatedly right-compose with the generator action that most
    reduces the summed length of all images; each move peels one letter off
    the end of the braid word.
    """
    e = a.endo if isinstance(a, FramedAutomorphism) else a
    n = e.rank
    images = list(e.images)
    total = sum(len(w) for w in images)
    if max_steps is None:
        max_steps = 10 * (total + n)
    peeled: list[tuple[int, int]] = []
    steps = 0
    while total > n:
        if steps >= max_steps:
            raise NotABraidAutomorphism(f"step cap {max_steps} reached")
        best = None
        for i, s in _moves(n):
            if (s > 0) != MIRROR:
                a = images[i - 1]
                t = product_length(a, images[i], a.inverse()) - len(images[i])
            else:
                b = images[i]
                t = product_length(b.inverse(), images[i - 1], b) - len(images[i - 1])
            if best is None or t < best[0]:
                best = (t, i, s)
        assert best is not None
        if best[0] >= 0:
            raise NotABraidAutomorphism(f"no length-reducing move at total length {total}")
        t, i, s = best
        _right_compose(images, i, s)
        total += t
        peeled.append((i, s))
        steps += 1
    # images now have total length n: a permutation of the generators
    gens = []
    for w in images:
        if len(w.syllables) != 1 or w.syllables[0][1] != 1:
            raise NotABraidAutomorphism(f"terminal image {w} is not a generator")
        gens.append(w.syllables[0][0])
    if sorted(gens) != list(range(1, n + 1)):
        raise NotABraidAutomorphism("terminal images are not a permutation of the generators")
    if gens != list(range(1, n + 1)):
        # a permutation of generators fixing x1..xn must be the identity
        raise NotABraidAutomorphism(f"terminal permutation {gens} does not fix the product word")
    # e ∘ m_1 ∘ ... ∘ m_k = id, so e = m_k^-1 ∘ ... ∘ m_1^-1
    word = tuple((i, -s) for i, s in reversed(peeled))
    return BraidWord(n, word)


def invert(a: FramedAutomorphism) -> FramedAutomorphism:
    b = braid_word_of(a)
    return framed_from_endo(artin_action(b.inverse()), tuple(-f for f in a.framings))


def random_braid(strands: int, length: int, rng: random.Random) -> BraidWord:
    return BraidWord(strands, tuple((rng.randint(1, strands - 1), rng.choice((1, -1))) for _ in range(length)))


def random_pure_braid(strands: int, max_length: int, rng: random.Random) -> BraidWord:
    """Random product of pure generators A_ij^{+-1} with at most ``max_length`` letters."""
    letters: tuple[tuple[int, int], ...] = ()
    if strands < 2:
        return BraidWord(strands, letters)
    target = rng.randint(0, max_length)
    while True:
        i = rng.randint(1, strands - 1)
        j = rng.randint(i + 1, strands)
        g = pure_generator(i, j, strands)
        if rng.random() < 0.5:
            g = g.inverse()
        if len(letters) + len(g) > target:
            break
        letters = letters + g.letters
    return BraidWord(strands, letters).free_reduce()


def random_framings(strands: int, rng: random.Random, bound: int = 3) -> tuple[int, ...]:
    return tuple(rng.randint(-bound, bound) for _ in range(strands))


def braid_words_equal(u: BraidWord, v: BraidWord) -> bool:
    """Equality in B_n via the faithful Artin action."""
    return u.strands == v.strands and artin_action(u) == artin_action(v)


def product(braids: Iterable[BraidWord], strands: int) -> BraidWord:
    out = BraidWord(strands)
    for b in braids:
        out = out * b
    return out
