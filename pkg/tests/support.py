"""Shared strategies and small constructors for the test modules."""

from __future__ import annotations

from hypothesis import strategies as st

from schubkey.permutations import descents, swap_positions
from schubkey.tableaux import Tableau


def top(*rows):
    """Young tableau written top row first, the way it is drawn."""
    return Tableau.from_top([tuple(r) for r in rows])


@st.composite
def permutations(draw, min_rank=1, max_rank=7):
    n = draw(st.integers(min_rank, max_rank))
    return tuple(draw(st.permutations(range(1, n + 1))))


@st.composite
def reduced_words(draw, min_rank=2, max_rank=7):
    """A permutation together with a uniformly-stepped random reduced word for it."""
    w = draw(permutations(min_rank, max_rank))
    u, word = w, []
    while ds := descents(u):
        i = draw(st.sampled_from(ds))
        word.append(i)
        u = swap_positions(u, i)
    return w, tuple(word)


# one "criterion N: PASS/FAIL" line per acceptance check, echoed at session end
ACCEPTANCE_LINES: list[str] = []
