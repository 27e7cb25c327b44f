"""Tietze simplification of finite presentations.

Only three moves are used, each giving an isomorphic group:

* replace a relator by a cyclically reduced conjugate, drop trivial and
  duplicate relators (duplicates up to cyclic permutation and inversion);
* replace a subword u of relator R by v^-1 when some cyclic conjugate of
  another relator (or its inverse) reads u v with |u| > |v|;
* eliminate a generator that occurs exactly once in some relator.
"""

from __future__ import annotations

from typing import Optional

from ..words import Word
from .fpgroup import FpGroup


def _encode(w: Word) -> str:
    out = []
    for g, e in w.syllables:
        out.append((chr(0x100 + g) if e > 0 else chr(0x1000 + g)) * abs(e))
    return "".join(out)


def _decode(s: str, rank: int) -> Word:
    syl = []
    for ch in s:
        c = ord(ch)
        syl.append((c - 0x100, 1) if c < 0x1000 else (c - 0x1000, -1))
    return Word(syl, rank)


def _inv_str(s: str) -> str:
    return "".join(chr(ord(ch) + 0xF00) if ord(ch) < 0x1000 else chr(ord(ch) - 0xF00) for ch in reversed(s))


def canonical_relator(w: Word) -> Word:
    """Least cyclic conjugate of w or w^-1 (as encoded strings): a canonical representative."""
    core, _ = w.cyclically_reduce()
    if not core:
        return core
    best = None
    for s in (_encode(core), _encode(core.inverse())):
        for k in range(len(s)):
            rot = s[k:] + s[:k]
            if best is None or rot < best:
                best = rot
    return _decode(best, w.rank)


def _normalize(rank: int, relators: list[Word]) -> list[Word]:
    seen = set()
    out = []
    for w in relators:
        c = canonical_relator(w)
        if c and c not in seen:
            seen.add(c)
            out.append(c)
    out.sort(key=lambda w: (len(w), _encode(w)))
    return out


def _shorten(target: str, by: str) -> Optional[str]:
    """One length-reducing substitution of ``by`` (a relator, cyclically) into ``target``."""
    n, m = len(target), len(by)
    if m == 0 or n == 0:
        return None
    doubled_t = target + target
    best = None
    for s in (by, _inv_str(by)):
        for k in range(m):
            rot = s[k:] + s[:k]  # rot = u v with u the prefix, relator says u = v^-1
            for ulen in range(m, m // 2, -1):
                if best is not None and 2 * ulen - m <= best[0]:
                    break
                u = rot[:ulen]
                pos = doubled_t.find(u)
                if 0 <= pos < n and ulen <= n:
                    v_inv = _inv_str(rot[ulen:])
                    # rotate target to start at pos, then substitute
                    rotated = doubled_t[pos : pos + n]
                    new = v_inv + rotated[ulen:]
                    best = (2 * ulen - m, new)
                    break
    return None if best is None or best[0] <= 0 else best[1]


def _eliminate_candidates(rank: int, relators: list[Word]):
    for idx, w in enumerate(relators):
        counts: dict[int, int] = {}
        for g, e in w.syllables:
            counts[g] = counts.get(g, 0) + abs(e)
        if w.syllables and w.syllables[0][0] == w.syllables[-1][0] and len(w.syllables) > 1:
            continue  # not cyclically reduced; normalization handles it
        for g, c in counts.items():
            if c == 1:
                yield idx, g


def _eliminate(rank: int, relators: list[Word], idx: int, g: int) -> tuple[int, list[Word]]:
    s = _encode(relators[idx])
    pos = next(k for k, ch in enumerate(s) if ord(ch) in (0x100 + g, 0x1000 + g))
    rot = s[pos:] + s[:pos]
    rest = _decode(rot[1:], rank)
    # relator reads g^{+-1} * rest = 1
    image = rest.inverse() if ord(rot[0]) < 0x1000 else rest
    new_rank = rank - 1

    def relabel(w: Word) -> Word:
        return Word(((h if h < g else h - 1, e) for h, e in w.syllables), new_rank)

    image_r = relabel(image)
    out = []
    for k, w in enumerate(relators):
        if k == idx:
            continue
        acc = Word.identity(new_rank)
        for h, e in w.syllables:
            if h == g:
                acc = acc * image_r ** e
            else:
                acc = acc * Word.gen(h if h < g else h - 1, new_rank, e)
        out.append(acc)
    return new_rank, out


def tietze_simplify(g: FpGroup, budget: int = 200, max_growth: float = 1.5) -> FpGroup:
    """Simplify ``g``; returns the best presentation found within ``budget`` moves.

    Generator elimination is accepted only while the total relator length
    stays below ``max_growth`` times the length at the start.
    """
    rank = g.generator_count
    rels = _normalize(rank, list(g.relators))
    start_len = max(sum(len(w) for w in rels), 1)
    moves = 0
    changed = True
    while changed and moves < budget:
        changed = False
        # substitutions: shorten longer relators by shorter ones
        for i in range(len(rels)):
            for j in range(len(rels)):
                if i == j or moves >= budget:
                    continue
                new = _shorten(_encode(rels[i]), _encode(rels[j]))
                if new is not None:
                    rels[i] = _decode(new, rank)
                    moves += 1
                    changed = True
        if changed:
            rels = _normalize(rank, rels)
            continue
        # generator elimination, cheapest result first
        best = None
        for idx, gen in _eliminate_candidates(rank, rels):
            new_rank, new_rels = _eliminate(rank, rels, idx, gen)
            total = sum(len(w) for w in new_rels)
            if total <= max_growth * start_len and (best is None or total < best[0]):
                best = (total, new_rank, new_rels)
        if best is not None and moves < budget:
            _, rank, rels = best
            rels = _normalize(rank, rels)
            moves += 1
            changed = True
    return FpGroup(rank, tuple(rels), note=g.note)
