"""Artin presentations, their framed-braid form, the group law and A(r)."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional, Sequence, Union

from . import braids
from .braids import FramedAutomorphism, compose
from .words import RankMismatch, Word

# Re-run the Artin-equation check on every from_framed/multiply result.
CHECKED = True

# False: r*s corresponds to phi_r ∘ phi_s.  True: phi_s ∘ phi_r.
REVERSED_ORDER = False


class InvalidPresentation(ValueError):
    def __init__(self, report: "Violation"):
        super().__init__(report.describe())
        self.report = report


class AsymmetricMatrix(ValueError):
    def __init__(self, i: int, j: int, a: int, b: int):
        super().__init__(f"A[{i}][{j}] = {a} but A[{j}][{i}] = {b}")
        self.pair = (i, j)
        self.values = (a, b)


@dataclass(frozen=True)
class Violation:
    """Failure of the Artin equation: both reduced sides and where they first differ."""

    n: int
    lhs: Word
    rhs: Word
    divergence: int  # 0-based letter index of the first difference

    def describe(self) -> str:
        return (
            f"Artin equation fails: x1..x{self.n} = {self.lhs} but the conjugate product reduces to "
            f"{self.rhs}; first divergence at letter {self.divergence}"
        )

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "lhs": str(self.lhs),
            "rhs": str(self.rhs),
            "rhs_length": len(self.rhs),
            "first_divergence": self.divergence,
        }


def _first_divergence(a: Word, b: Word) -> int:
    k = 0
    for x, y in zip(a.letters(), b.letters()):
        if x != y:
            return k
        k += 1
    return k


def conjugate_product(n: int, relators: Sequence[Word]) -> Word:
    """r_1^-1 x_1 r_1 ... r_n^-1 x_n r_n, freely reduced."""
    out = Word.identity(n)
    for k, r in enumerate(relators):
        out = out * r.inverse() * Word.gen(k + 1, n) * r
    return out


@dataclass(frozen=True)
class ArtinPresentation:
    n: int
    relators: tuple[Word, ...]

    def __post_init__(self):
        rel = tuple(self.relators)
        if len(rel) != self.n:
            raise ValueError(f"need {self.n} relators, got {len(rel)}")
        for w in rel:
            if w.rank != self.n:
                raise RankMismatch(f"relator of rank {w.rank} in presentation on {self.n} generators")
        object.__setattr__(self, "relators", rel)
        report = check_equation(self.n, rel)
        if report is not None:
            raise InvalidPresentation(report)

    @classmethod
    def identity(cls, n: int) -> ArtinPresentation:
        return cls(n, tuple(Word.identity(n) for _ in range(n)))

    def __mul__(self, other: ArtinPresentation) -> ArtinPresentation:
        return multiply(self, other)

    def inverse(self) -> ArtinPresentation:
        return invert(self)

    def __str__(self) -> str:
        return "\n".join(f"r{k + 1} = {w}" for k, w in enumerate(self.relators))


def check_equation(n: int, relators: Sequence[Word]) -> Optional[Violation]:
    lhs = Word.product_word(n)
    rhs = conjugate_product(n, relators)
    if lhs == rhs:
        return None
    return Violation(n, lhs, rhs, _first_divergence(lhs, rhs))


def validate(n: int, relators: Sequence[Word]) -> Union[ArtinPresentation, Violation]:
    """Return the checked presentation, or the :class:`Violation` describing why not."""
    if n < 1:
        raise ValueError("n must be positive")
    relators = tuple(relators)
    if len(relators) != n:
        raise ValueError(f"need {n} relators, got {len(relators)}")
    report = check_equation(n, relators)
    if report is not None:
        return report
    return ArtinPresentation(n, relators)


def _x_prefix(w: Word, i: int) -> tuple[int, Word]:
    s = w.syllables
    if s and s[0][0] == i:
        return s[0][1], Word(s[1:], w.rank, _reduced=True)
    return 0, w


def to_framed(r: ArtinPresentation) -> FramedAutomorphism:
    """Split each r_i = x_i^f_i * u_i; the automorphism is x_i -> u_i^-1 x_i u_i."""
    conj, fr = [], []
    for k, w in enumerate(r.relators):
        f, u = _x_prefix(w, k + 1)
        fr.append(f)
        conj.append(u.inverse())
    return FramedAutomorphism(r.n, tuple(conj), tuple(fr))


def _build(n: int, relators: tuple[Word, ...]) -> ArtinPresentation:
    if CHECKED:
        return ArtinPresentation(n, relators)
    obj = object.__new__(ArtinPresentation)
    object.__setattr__(obj, "n", n)
    object.__setattr__(obj, "relators", relators)
    return obj


def from_framed(a: FramedAutomorphism) -> ArtinPresentation:
    n = a.strands
    rel = tuple(Word.gen(k + 1, n, f) * c.inverse() for k, (c, f) in enumerate(zip(a.conjugators, a.framings)))
    return _build(n, rel)


def _raw_product(a: FramedAutomorphism, b: FramedAutomorphism) -> list[tuple[Word, int]]:
    """Conjugators of a ∘ b before normalization, with summed framings."""
    ea = a.endo
    return [(ea(bi) * ai, fa + fb) for ai, bi, fa, fb in zip(a.conjugators, b.conjugators, a.framings, b.framings)]


def multiply(r: ArtinPresentation, s: ArtinPresentation, *, reversed_order: Optional[bool] = None) -> ArtinPresentation:
    """The product in R_n: phi_r ∘ phi_s with framings added (phi_s ∘ phi_r if reversed).

    The relators are x_i^(f+f') C_i^-1 for the unnormalized conjugator C_i of
    the composite, so a trailing x_i-power of C_i moves into the framing prefix
    rather than being dropped.
    """
    if r.n != s.n:
        raise RankMismatch(f"{r.n} vs {s.n} generators")
    rev = REVERSED_ORDER if reversed_order is None else reversed_order
    a, b = to_framed(r), to_framed(s)
    raw = _raw_product(b, a) if rev else _raw_product(a, b)
    n = r.n
    return _build(n, tuple(Word.gen(k + 1, n, f) * c.inverse() for k, (c, f) in enumerate(raw)))


def invert(r: ArtinPresentation) -> ArtinPresentation:
    a = to_framed(r)
    b = braids.invert(a)
    framings = []
    for k, (c, _) in enumerate(_raw_product(a, b)):
        # a ∘ b is the identity automorphism, so c is a power of x_{k+1}
        m = c.exponent_sum(k + 1)
        if c != Word.gen(k + 1, r.n, m):
            raise braids.NotABraidAutomorphism(f"inverse reconstruction failed at x{k + 1}")
        framings.append(m - a.framings[k])
    return from_framed(b.with_framings(framings))


def power(r: ArtinPresentation, k: int) -> ArtinPresentation:
    base = r if k >= 0 else invert(r)
    out = ArtinPresentation.identity(r.n)
    for _ in range(abs(k)):
        out = multiply(out, base)
    return out


def exponent_matrix(relators: Sequence[Word], rank: int) -> list[list[int]]:
    return [w.exponent_vector() if w.rank == rank else w.with_rank(rank).exponent_vector() for w in relators]


def abelianization_matrix(r: ArtinPresentation | Sequence[Word], n: Optional[int] = None) -> list[list[int]]:
    """A[i][j] = exponent sum of x_j in r_i; raises :class:`AsymmetricMatrix` if not symmetric."""
    if isinstance(r, ArtinPresentation):
        rel, n = r.relators, r.n
    else:
        rel = tuple(r)
        n = n if n is not None else len(rel)
    m = exponent_matrix(rel, n)
    for i in range(n):
        for j in range(i + 1, n):
            if m[i][j] != m[j][i]:
                raise AsymmetricMatrix(i + 1, j + 1, m[i][j], m[j][i])
    return m


def is_torelli(r: ArtinPresentation) -> bool:
    return not any(any(row) for row in abelianization_matrix(r))


def from_braid(b: braids.BraidWord, framings: Optional[Sequence[int]] = None) -> ArtinPresentation:
    return from_framed(braids.to_framed_automorphism(b, framings))


def random_presentation(n: int, rng: random.Random, max_length: int = 40, framing_bound: int = 3) -> ArtinPresentation:
    b = braids.random_pure_braid(n, max_length, rng)
    f = braids.random_framings(n, rng, framing_bound) if framing_bound else (0,) * n
    return from_braid(b, f)


def commutator(a: ArtinPresentation, b: ArtinPresentation) -> ArtinPresentation:
    """(a*b) * (a^-1 * b^-1)."""
    return multiply(multiply(a, b), multiply(invert(a), invert(b)))


def random_torelli(n: int, seed: int, size: int = 12) -> ArtinPresentation:
    """Commutator of two random zero-framed pure-braid presentations of braid length <= size."""
    if n < 2:
        raise ValueError("random_torelli needs n >= 2")
    rng = random.Random(seed)
    a = random_presentation(n, rng, size, framing_bound=0)
    b = random_presentation(n, rng, size, framing_bound=0)
    return commutator(a, b)
