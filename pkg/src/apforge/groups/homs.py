"""Homomorphisms from a finitely presented group into a finite group, by backtracking."""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable, Iterator, Optional

from .finite import FiniteGroup
from .fpgroup import FpGroup


class SearchBudgetExceeded(RuntimeError):
    def __init__(self, nodes: int, timed_out: bool = False):
        what = "its deadline" if timed_out else f"{nodes} nodes"
        super().__init__(f"homomorphism search exceeded {what}")
        self.nodes = nodes
        self.timed_out = timed_out


@dataclass(frozen=True)
class HomCount:
    total: int
    nonabelian_image: int
    surjective: int
    nodes: int


def _generator_order(g: FpGroup) -> list[int]:
    """Greedy order: next pick the generator that completes the most relators, then the most frequent."""
    n = g.generator_count
    supports = [set(gen for gen, _ in w.syllables) for w in g.relators]
    freq = [0] * (n + 1)
    for w in g.relators:
        for gen, e in w.syllables:
            freq[gen] += abs(e)
    chosen: list[int] = []
    left = set(range(1, n + 1))
    while left:
        done = set(chosen)

        def score(x):
            completes = sum(1 for s in supports if x in s and s <= done | {x})
            touches = sum(1 for s in supports if x in s)
            return (completes, touches, freq[x], -x)

        best = max(left, key=score)
        chosen.append(best)
        left.remove(best)
    return chosen


class _Search:
    def __init__(self, g: FpGroup, target: FiniteGroup, node_cap: int, deadline: Optional[float] = None):
        self.g = g
        self.deadline = deadline
        self.t = target
        self.node_cap = node_cap
        self.nodes = 0
        self.order = _generator_order(g)
        pos = {gen: k for k, gen in enumerate(self.order)}
        self.checks: list[list[list[tuple[int, int]]]] = [[] for _ in self.order]
        for w in g.relators:
            if not w.syllables:
                continue
            level = max(pos[gen] for gen, _ in w.syllables)
            self.checks[level].append(list(w.syllables))
        self._pow: dict[tuple[int, int], int] = {}
        self._elt_order = [target.element_order(a) for a in range(target.order)]

    def power(self, a: int, e: int) -> int:
        key = (a, e)
        p = self._pow.get(key)
        if p is None:
            p = self.t.power(a, e % self._elt_order[a])
            self._pow[key] = p
        return p

    def holds(self, rel: list[tuple[int, int]], img: list[int]) -> bool:
        tab = self.t.table
        acc = self.t.identity
        pw = self.power
        for gen, e in rel:
            acc = tab[acc][pw(img[gen], e)]
        return acc == self.t.identity

    def assignments(self, first_choices: Optional[list[int]] = None) -> Iterator[list[int]]:
        """Yield image lists indexed by generator (index 0 unused)."""
        n = self.g.generator_count
        img = [self.t.identity] * (n + 1)
        if n == 0:
            if all(self.holds(rel, img) for level in self.checks for rel in level):
                yield img[:]
            return
        elements = list(range(self.t.order))

        def rec(level: int):
            gen = self.order[level]
            choices = first_choices if (level == 0 and first_choices is not None) else elements
            for a in choices:
                self.nodes += 1
                if self.nodes > self.node_cap:
                    raise SearchBudgetExceeded(self.node_cap)
                if self.deadline is not None and not self.nodes & 0xFFF and time.monotonic() > self.deadline:
                    raise SearchBudgetExceeded(self.nodes, timed_out=True)
                img[gen] = a
                if all(self.holds(rel, img) for rel in self.checks[level]):
                    if level + 1 == n:
                        yield img[:]
                    else:
                        yield from rec(level + 1)

        yield from rec(0)


def _image_abelian(target: FiniteGroup, images: list[int]) -> bool:
    for i in range(len(images)):
        for j in range(i + 1, len(images)):
            if not target.commute(images[i], images[j]):
                return False
    return True


def hom_count(g: FpGroup, target: FiniteGroup, node_cap: int = 10**8) -> HomCount:
    """Count homomorphisms g -> target, those with nonabelian image, and surjective ones.

    The first generator ranges over conjugacy class representatives only; each
    count is weighted by the class size, since conjugation permutes homomorphisms
    and preserves both image properties.
    """
    s = _Search(g, target, node_cap)
    n = g.generator_count
    total = nonab = surj = 0
    surj_cache: dict[frozenset, bool] = {}
    if n == 0:
        for _ in s.assignments():
            total += 1
            surj += target.order == 1
        return HomCount(total, 0, surj, s.nodes)
    for cls in target.conjugacy_classes():
        weight = len(cls)
        for img in s.assignments([cls[0]]):
            images = img[1:]
            total += weight
            if not _image_abelian(target, images):
                nonab += weight
            key = frozenset(images)
            if key not in surj_cache:
                surj_cache[key] = len(target.subgroup_generated(images)) == target.order
            if surj_cache[key]:
                surj += weight
    return HomCount(total, nonab, surj, s.nodes)


def find_hom(
    g: FpGroup,
    target: FiniteGroup,
    accept: Callable[[list[int]], bool],
    node_cap: int = 10**8,
    deadline: Optional[float] = None,
) -> Optional[list[int]]:
    """First homomorphism (images of x_1..x_n) satisfying ``accept``, in a fixed search order.

    ``deadline`` is a ``time.monotonic()`` value.
    """
    s = _Search(g, target, node_cap, deadline)
    reps = [cls[0] for cls in target.conjugacy_classes()] if g.generator_count else None
    for img in s.assignments(reps):
        if accept(img[1:]):
            return img[1:]
    return None


def find_nontrivial_hom(
    g: FpGroup, target: FiniteGroup, node_cap: int = 10**8, deadline: Optional[float] = None
) -> Optional[list[int]]:
    e = target.identity
    return find_hom(g, target, lambda imgs: any(a != e for a in imgs), node_cap, deadline)


def find_surjection(g: FpGroup, target: FiniteGroup, node_cap: int = 10**8) -> Optional[list[int]]:
    return find_hom(g, target, lambda imgs: len(target.subgroup_generated(imgs)) == target.order, node_cap)


def is_homomorphism(g: FpGroup, target: FiniteGroup, images: list[int]) -> bool:
    tab = target.table
    for w in g.relators:
        acc = target.identity
        for gen, e in w.syllables:
            acc = tab[acc][target.power(images[gen - 1], e)]
        if acc != target.identity:
            return False
    return True


def brute_force_count(g: FpGroup, target: FiniteGroup) -> HomCount:
    """Exhaustive scan over all assignments; an oracle for small cases."""
    from itertools import product

    total = nonab = surj = 0
    for images in product(range(target.order), repeat=g.generator_count):
        images = list(images)
        if is_homomorphism(g, target, images):
            total += 1
            nonab += not _image_abelian(target, images)
            surj += len(target.subgroup_generated(images)) == target.order
    return HomCount(total, nonab, surj, target.order ** g.generator_count)
