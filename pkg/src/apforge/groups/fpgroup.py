"""Finitely presented groups."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from ..artin import ArtinPresentation
from ..words import RankMismatch, Word
from .snf import abelian_invariants, format_abelian


@dataclass(frozen=True)
class FpGroup:
    generator_count: int
    relators: tuple[Word, ...] = ()
    peripheral: Optional[tuple[Word, Word]] = field(default=None, compare=False)
    note: str = field(default="", compare=False)

    def __post_init__(self):
        object.__setattr__(self, "relators", tuple(self.relators))
        for w in self.relators:
            if w.rank != self.generator_count:
                raise RankMismatch(f"relator of rank {w.rank} in group on {self.generator_count} generators")

    def exponent_matrix(self) -> list[list[int]]:
        return [w.exponent_vector() for w in self.relators]

    def abelianization(self) -> tuple[list[int], int]:
        return abelian_invariants(self.exponent_matrix(), self.generator_count)

    def describe_abelianization(self) -> str:
        return format_abelian(*self.abelianization())

    def total_length(self) -> int:
        return sum(len(w) for w in self.relators)

    def __str__(self) -> str:
        gens = ", ".join(f"x{i}" for i in range(1, self.generator_count + 1))
        rels = ", ".join(str(w) for w in self.relators)
        return f"< {gens} | {rels} >"


def free_group(rank: int) -> FpGroup:
    return FpGroup(rank, ())


def from_strings(rank: int, relators: Sequence[str]) -> FpGroup:
    from ..grammar import parse_word

    return FpGroup(rank, tuple(parse_word(t, rank) for t in relators))


def pi(r: ArtinPresentation) -> FpGroup:
    """The group presented by r."""
    return FpGroup(r.n, r.relators, note="pi(r)")


def is_perfect(g: FpGroup) -> bool:
    torsion, rank = g.abelianization()
    return not torsion and rank == 0
