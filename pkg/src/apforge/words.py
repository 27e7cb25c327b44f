"""Free-group words in syllable (run-length) form.

A :class:`Word` is always freely reduced: adjacent syllables carry distinct
generators and no syllable has exponent zero. Generators are 1-based, so the
word ``x1 x3^-2`` is stored as ``((1, 1), (3, -2))``.
"""

from __future__ import annotations

from itertools import accumulate
from operator import itemgetter
from typing import Iterable, Iterator, Sequence

Syllable = tuple[int, int]


class RankMismatch(ValueError):
    pass


def _reduce(syllables: Iterable[Syllable]) -> list[Syllable]:
    out: list[Syllable] = []
    for g, e in syllables:
        if e == 0:
            continue
        if out and out[-1][0] == g:
            e += out[-1][1]
            out.pop()
            if e:
                out.append((g, e))
        else:
            out.append((g, e))
    return out


class Word:
    """Immutable, freely reduced element of the free group of rank ``rank``."""

    __slots__ = ("syllables", "rank", "_hash", "_len", "_inv", "_cum")

    def __init__(self, syllables: Iterable[Syllable] = (), rank: int = 1, *, _reduced: bool = False):
        if rank < 0:
            raise ValueError("rank must be non-negative")
        syl = tuple(syllables) if _reduced else tuple(_reduce(syllables))
        for g, _ in syl:
            if not 1 <= g <= rank:
                raise ValueError(f"generator x{g} out of range for rank {rank}")
        object.__setattr__(self, "syllables", syl)
        object.__setattr__(self, "rank", rank)
        object.__setattr__(self, "_hash", None)
        object.__setattr__(self, "_len", None)
        object.__setattr__(self, "_inv", None)
        object.__setattr__(self, "_cum", None)

    def __setattr__(self, name, value):
        raise AttributeError("Word is immutable")

    # constructors

    @classmethod
    def identity(cls, rank: int) -> Word:
        return cls((), rank, _reduced=True)

    @classmethod
    def gen(cls, index: int, rank: int, power: int = 1) -> Word:
        return cls(((index, power),), rank)

    @classmethod
    def from_letters(cls, letters: Iterable[int], rank: int) -> Word:
        """Build from signed letters, e.g. ``[1, -2]`` is ``x1 x2^-1``."""
        return cls(((abs(a), 1 if a > 0 else -1) for a in letters), rank)

    @classmethod
    def product_word(cls, rank: int) -> Word:
        """The boundary word x1 x2 ... xn."""
        return cls(((i, 1) for i in range(1, rank + 1)), rank, _reduced=True)

    # group operations

    def _check(self, other: Word) -> None:
        if self.rank != other.rank:
            raise RankMismatch(f"rank {self.rank} vs {other.rank}")

    def __mul__(self, other: Word) -> Word:
        self._check(other)
        a, b = self.syllables, other.syllables
        if not a:
            return other
        if not b:
            return self
        # cancellation only happens at the seam
        if self._inv is not None and len(a) > 16 and len(b) > 16:
            ainv = self._inv.syllables
            k = _common_prefix(ainv, 0, len(ainv), b, 0, len(b))
            i, j = len(a) - k, k
        else:
            i, j = len(a), 0
            while i > 0 and j < len(b) and a[i - 1][0] == b[j][0] and a[i - 1][1] + b[j][1] == 0:
                i -= 1
                j += 1
        left, right = a[:i], b[j:]
        if left and right and left[-1][0] == right[0][0]:
            merged = ((left[-1][0], left[-1][1] + right[0][1]),)
            return Word(left[:-1] + merged + right[1:], self.rank, _reduced=True)
        return Word(left + right, self.rank, _reduced=True)

    def inverse(self) -> Word:
        inv = self._inv
        if inv is None:
            inv = Word(((g, -e) for g, e in reversed(self.syllables)), self.rank, _reduced=True)
            object.__setattr__(inv, "_inv", self)
            object.__setattr__(self, "_inv", inv)
        return inv

    def _cumulative(self) -> tuple[int, ...]:
        cum = self._cum
        if cum is None:
            cum = tuple(accumulate(map(abs, map(itemgetter(1), self.syllables))))
            object.__setattr__(self, "_cum", cum)
        return cum

    def __invert__(self) -> Word:
        return self.inverse()

    def __pow__(self, k: int) -> Word:
        if k < 0:
            return self.inverse() ** (-k)
        result = Word.identity(self.rank)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self, by: Word) -> Word:
        """Return ``by^-1 * self * by`` (right action, matching ``(x,y) = x^-1 y^-1 x y``)."""
        return by.inverse() * self * by

    def commutator(self, other: Word) -> Word:
        return self.inverse() * other.inverse() * self * other

    # inspection

    def __len__(self) -> int:
        n = self._len
        if n is None:
            n = sum(abs(e) for _, e in self.syllables)
            object.__setattr__(self, "_len", n)
        return n

    def __bool__(self) -> bool:
        return bool(self.syllables)

    def letters(self) -> Iterator[int]:
        for g, e in self.syllables:
            s = 1 if e > 0 else -1
            for _ in range(abs(e)):
                yield s * g

    def exponent_sum(self, g: int) -> int:
        if not 1 <= g <= self.rank:
            raise ValueError(f"generator x{g} out of range for rank {self.rank}")
        return sum(e for h, e in self.syllables if h == g)

    def exponent_vector(self) -> list[int]:
        v = [0] * self.rank
        for g, e in self.syllables:
            v[g - 1] += e
        return v

    def generators(self) -> set[int]:
        return {g for g, _ in self.syllables}

    def with_rank(self, rank: int) -> Word:
        return Word(self.syllables, rank, _reduced=True)

    def is_cyclically_reduced(self) -> bool:
        s = self.syllables
        return len(s) < 2 or s[0][0] != s[-1][0]

    def cyclically_reduce(self) -> tuple[Word, Word]:
        """Return ``(core, conj)`` with ``self == conj * core * conj^-1``."""
        s = self.syllables
        i, j = 0, len(s) - 1
        while i < j and s[i][0] == s[j][0] and s[i][1] == -s[j][1]:
            i += 1
            j -= 1
        conj = Word(s[:i], self.rank, _reduced=True)
        if i < j and s[i][0] == s[j][0]:
            # outer syllables share a generator: x^a M x^b = x^a (M x^(a+b)) x^-a
            g, a, b = s[i][0], s[i][1], s[j][1]
            conj = conj * Word.gen(g, self.rank, a)
            core = Word(s[i + 1 : j] + ((g, a + b),), self.rank)
            return core, conj
        core = Word(s[i : j + 1], self.rank, _reduced=True)
        return core, conj

    def cyclic_permutations(self) -> Iterator[Word]:
        """Letter-level rotations of a cyclically reduced word."""
        letters = list(self.letters())
        for k in range(len(letters)):
            yield Word.from_letters(letters[k:] + letters[:k], self.rank)

    # equality, hashing, printing

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Word):
            return NotImplemented
        return self.rank == other.rank and self.syllables == other.syllables

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = hash((self.rank, self.syllables))
            object.__setattr__(self, "_hash", h)
        return h

    def __str__(self) -> str:
        if not self.syllables:
            return "1"
        return " ".join(f"x{g}" if e == 1 else f"x{g}^{e}" for g, e in self.syllables)

    def __repr__(self) -> str:
        return f"Word({self}, rank={self.rank})"


def _common_prefix(a: tuple, alo: int, ahi: int, b: tuple, blo: int, bhi: int) -> int:
    """Length of the common prefix of a[alo:ahi] and b[blo:bhi] (galloping slice compares)."""
    limit = min(ahi - alo, bhi - blo)
    if limit == 0 or a[alo] != b[blo]:
        return 0
    good, step = 1, 1
    while good < limit:
        probe = min(good + step, limit)
        if a[alo + good : alo + probe] == b[blo + good : blo + probe]:
            good = probe
            step *= 2
        else:
            hi = probe - 1
            lo = good
            while lo < hi:
                mid = (lo + hi + 1) // 2
                if a[alo + good : alo + mid] == b[blo + good : blo + mid]:
                    lo = mid
                else:
                    hi = mid - 1
            return lo
    return good


def product_length(*factors: Word) -> int:
    """Letter length of the reduced product of ``factors`` without building it.

    Cost is dominated by C-level slice comparisons over the cancelled region.
    """
    total = 0
    stack: list[list] = []  # views [word, lo, hi] into word.syllables
    for w in factors:
        total += len(w)
        t = w.syllables
        lo, hi = 0, len(t)
        while stack and lo < hi:
            top = stack[-1]
            tw, tlo, thi = top
            tinv = tw.inverse().syllables
            m = len(tinv)
            k = _common_prefix(tinv, m - thi, m - tlo, t, lo, hi)
            if k:
                cum = w._cumulative()
                total -= 2 * (cum[lo + k - 1] - (cum[lo - 1] if lo else 0))
                top[2] -= k
                lo += k
                if top[1] == top[2]:
                    stack.pop()
                continue
            ga, ea = tw.syllables[thi - 1]
            gb, eb = t[lo]
            if ga == gb and (ea > 0) != (eb > 0):
                total -= 2 * min(abs(ea), abs(eb))
                top[2] -= 1
                if top[1] == top[2]:
                    stack.pop()
                lo += 1
                stack.append([Word(((ga, ea + eb),), w.rank, _reduced=True), 0, 1])
            break
        if lo < hi:
            stack.append([w, lo, hi])
    return total


def multiply(a: Word, b: Word) -> Word:
    return a * b


def invert(a: Word) -> Word:
    return a.inverse()


def exponent_sum(w: Word, g: int) -> int:
    return w.exponent_sum(g)


def cyclically_reduce(w: Word) -> tuple[Word, Word]:
    return w.cyclically_reduce()


def product(words: Iterable[Word], rank: int) -> Word:
    out = Word.identity(rank)
    for w in words:
        out = out * w
    return out


class FreeEndo:
    """Endomorphism of F_n given by the images of x1..xn."""

    __slots__ = ("rank", "images")

    def __init__(self, images: Sequence[Word]):
        images = tuple(images)
        rank = len(images)
        for w in images:
            if w.rank != rank:
                raise RankMismatch(f"image of rank {w.rank} in endomorphism of rank {rank}")
        object.__setattr__(self, "rank", rank)
        object.__setattr__(self, "images", images)

    def __setattr__(self, name, value):
        raise AttributeError("FreeEndo is immutable")

    @classmethod
    def identity(cls, rank: int) -> FreeEndo:
        return cls([Word.gen(i, rank) for i in range(1, rank + 1)])

    def __call__(self, w: Word) -> Word:
        if w.rank != self.rank:
            raise RankMismatch(f"rank {w.rank} vs {self.rank}")
        out = Word.identity(self.rank)
        for g, e in w.syllables:
            out = out * (self.images[g - 1] ** e)
        return out

    def then(self, other: FreeEndo) -> FreeEndo:
        """Composite ``other ∘ self`` as a map: first apply self, then other."""
        return FreeEndo([other(w) for w in self.images])

    def __matmul__(self, other: FreeEndo) -> FreeEndo:
        """``(self @ other)(w) == self(other(w))``."""
        return FreeEndo([self(w) for w in other.images])

    def total_length(self) -> int:
        return sum(len(w) for w in self.images)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FreeEndo):
            return NotImplemented
        return self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __repr__(self) -> str:
        inner = ", ".join(f"x{i + 1} -> {w}" for i, w in enumerate(self.images))
        return f"FreeEndo({inner})"


def substitute(w: Word, e: FreeEndo) -> Word:
    return e(w)
