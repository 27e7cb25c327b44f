"""Hypothesis strategies shared by the test modules."""

from hypothesis import strategies as st

from apforge import artin, braids
from apforge.words import Word


def words(rank: int, max_size: int = 12):
    letter = st.integers(1, rank).flatmap(lambda g: st.sampled_from([g, -g]))
    return st.lists(letter, max_size=max_size).map(lambda ls: Word.from_letters(ls, rank))


@st.composite
def pure_braids(draw, strands: int = 3, max_gens: int = 5):
    pairs = [(i, j) for i in range(1, strands + 1) for j in range(i + 1, strands + 1)]
    k = draw(st.integers(0, max_gens))
    out = braids.BraidWord(strands)
    for _ in range(k):
        i, j = draw(st.sampled_from(pairs))
        g = braids.pure_generator(i, j, strands)
        out = out * (g if draw(st.booleans()) else g.inverse())
    return out


@st.composite
def presentations(draw, strands: int = 3, max_gens: int = 4, framing_bound: int = 3):
    b = draw(pure_braids(strands, max_gens))
    f = draw(st.lists(st.integers(-framing_bound, framing_bound), min_size=strands, max_size=strands))
    return artin.from_braid(b, f)
