"""Statistics of a reduced word read through its increasing runs.

The runs of a word are its maximal strictly increasing factors. In the
descent tableau they become rows, with the rightmost run at the bottom.
"""

from __future__ import annotations

from typing import Sequence

from .compositions import VIRTUAL, hat_chain, pad
from .tableaux import KeyTableau, Tableau


def run_decomposition(rho: Sequence[int]) -> tuple[tuple[int, ...], ...]:
    """Maximal increasing runs, left to right.

    >>> run_decomposition((3, 6, 4, 7, 5, 2, 4))
    ((3, 6), (4, 7), (5,), (2, 4))
    """
    runs: list[list[int]] = []
    for i, a in enumerate(rho):
        if i and a > rho[i - 1]:
            runs[-1].append(a)
        else:
            runs.append([a])
    return tuple(tuple(r) for r in runs)


def descent_composition(rho: Sequence[int]) -> tuple[int, ...]:
    """Run lengths read from the rightmost run to the leftmost."""
    return tuple(len(r) for r in reversed(run_decomposition(rho)))


def descent_tableau(rho: Sequence[int]) -> Tableau:
    """Runs stacked as rows, rightmost run at the bottom."""
    return Tableau(reversed(run_decomposition(rho)))


def run_rows(rho: Sequence[int]):
    """Row index assigned to each run (leftmost run first), or VIRTUAL."""
    return hat_chain([r[0] for r in run_decomposition(rho)])


def weak_descent_composition(rho: Sequence[int], length: int | None = None):
    """Weak descent composition of a reduced word, or VIRTUAL.

    Without ``length`` the result ends at the highest occupied row.

    >>> weak_descent_composition((6, 7, 3, 4, 5, 2, 4))
    (0, 2, 3, 0, 0, 2)
    >>> weak_descent_composition((3, 5, 2, 3, 4), 5)
    (0, 3, 2, 0, 0)
    """
    runs = run_decomposition(rho)
    rows = hat_chain([r[0] for r in runs])
    if rows is VIRTUAL:
        return VIRTUAL
    top = rows[0] if rows else 0
    out = [0] * top
    for run, r in zip(runs, rows):
        out[r - 1] = len(run)
    return tuple(out) if length is None else pad(out, length)


def weak_descent_tableau(rho: Sequence[int]) -> KeyTableau:
    """Place each run in the row given by the weak descent recursion.

    Rows may land at height zero or below, which is how a virtual word shows.
    """
    runs = run_decomposition(rho)
    rows = {}
    prev = None
    for run in runs:
        r = run[0] if prev is None else min(run[0], prev - 1)
        rows[r] = run
        prev = r
    return KeyTableau(rows)
