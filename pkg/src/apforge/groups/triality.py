"""Order check for perfect groups pi(r): trivial, I(120), or undecided."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from ..artin import ArtinPresentation
from .coset import CosetOverflow, todd_coxeter
from .finite import sl25
from .fpgroup import FpGroup, is_perfect, pi
from .homs import SearchBudgetExceeded, find_surjection, is_homomorphism
from .tietze import tietze_simplify

TRIVIAL = "Trivial"
I120 = "I120"
UNKNOWN = "NotFinitePerfectOrUnknown"
VIOLATION = "TheoremViolation"


@dataclass
class TrialityResult:
    verdict: str
    perfect: bool
    order: Optional[int] = None
    reason: str = ""
    isomorphism: Optional[list] = None  # images of x_1..x_n as SL(2,5) matrices (a, b, c, d)
    simplified: Optional[FpGroup] = field(default=None, repr=False)

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict,
            "perfect": self.perfect,
            "order": self.order,
            "reason": self.reason,
            "isomorphism": self.isomorphism,
            "simplified": str(self.simplified) if self.simplified is not None else None,
        }


def group_triality(g: FpGroup, max_cosets: int = 100_000, node_cap: int = 10**7) -> TrialityResult:
    if not is_perfect(g):
        return TrialityResult(UNKNOWN, False, reason=f"not perfect: H_1 = {g.describe_abelianization()}")
    h = tietze_simplify(g)
    try:
        order = todd_coxeter(h, (), max_cosets).index
    except CosetOverflow as exc:
        return TrialityResult(UNKNOWN, True, reason=str(exc), simplified=h)
    if order == 1:
        return TrialityResult(TRIVIAL, True, 1, "coset enumeration closed with 1 coset", simplified=h)
    if order != 120:
        return TrialityResult(VIOLATION, True, order, f"perfect group of finite order {order}", simplified=h)
    target = sl25()
    try:
        images = find_surjection(g, target, node_cap)
    except SearchBudgetExceeded as exc:
        return TrialityResult(UNKNOWN, True, 120, f"order 120 but {exc}", simplified=h)
    if images is None:
        return TrialityResult(VIOLATION, True, 120, "order 120 but no surjection onto SL(2,5)", simplified=h)
    assert is_homomorphism(g, target, images)
    # a surjection between groups of equal finite order is an isomorphism
    mats = [list(target.labels[a]) for a in images]
    return TrialityResult(I120, True, 120, "order 120 and onto SL(2,5)", mats, h)


def triality_check(r: ArtinPresentation, max_cosets: int = 100_000, node_cap: int = 10**7) -> TrialityResult:
    """Decide whether a perfect pi(r) is trivial or I(120); overflow leaves it unknown.

    The enumeration runs on a Tietze-simplified presentation of pi(r); the
    SL(2,5) surjection is searched on the original generators.
    """
    return group_triality(pi(r), max_cosets, node_cap)
