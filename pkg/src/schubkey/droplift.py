"""Dropping and lifting letters between adjacent rows of a reduced word.

A word is handled through an increasing decomposition: a `Tableau` whose
rows (bottom first) are strictly increasing and whose reading word, top
row first, is the word. Rows may be empty. A bare word is decomposed into
its maximal increasing runs.

`drop_i` moves letters of row i+1 down into row i, `lift_i` moves letters
of row i up into row i+1. Both preserve the Coxeter-Knuth class. Dropping
until nothing moves gives the unique increasing Young tableau of the class;
lifting that tableau along the canonical path gives the Yamanouchi word.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Sequence

from .compositions import VIRTUAL, dominates
from .coxeter_knuth import ck_class
from .tableaux import Tableau
from .wordstats import descent_tableau, weak_descent_composition

Row = tuple[int, ...]


@dataclass(frozen=True)
class Column:
    """One column of an alignment; ``None`` marks an empty cell."""

    top: int | None
    bottom: int | None


# -- drop ------------------------------------------------------------------------


def drop_align(tau: Sequence[int], sigma: Sequence[int]) -> list[Column]:
    """Drop alignment of ``sigma`` below ``tau``.

    Scanning from the left, a letter of tau sits over the next letter of
    sigma when it is larger; otherwise it is left unsupported and sigma
    shifts one column right. Letters of tau past the end of sigma are
    unsupported too.
    """
    cols = []
    p = q = 0
    while p < len(tau) and q < len(sigma):
        if tau[p] > sigma[q]:
            cols.append(Column(tau[p], sigma[q]))
            q += 1
        else:
            cols.append(Column(tau[p], None))
        p += 1
    cols += [Column(t, None) for t in tau[p:]]
    cols += [Column(None, s) for s in sigma[q:]]
    return cols


def _blocks(cols: list[Column], marker) -> tuple[list[int], list[list[Column]]]:
    """Split columns at the marked cells. Returns the marked letters and the blocks between."""
    xs, blocks = [], [[]]
    for c in cols:
        x = marker(c)
        if x is None:
            blocks[-1].append(c)
        else:
            xs.append(x)
            blocks.append([])
    return xs, blocks


def drop_pair(tau: Sequence[int], sigma: Sequence[int]) -> tuple[Row, Row]:
    """Drop the unsupported letters of the upper row ``tau`` into ``sigma``.

    Each dropped letter x lands in its own column. When the block of columns
    right of x starts with x+1 over x, x+2 over x+1, and so on, the lower
    letters of that staircase go up by one to make room.

    >>> drop_pair((3, 6), (4, 7))
    ((6,), (3, 4, 7))
    >>> drop_pair((3, 4, 5), (2, 4))
    ((3, 5), (2, 4, 5))
    """
    cols = drop_align(tuple(tau), tuple(sigma))
    xs, blocks = _blocks(cols, lambda c: c.top if c.bottom is None else None)
    top = [c.top for c in cols if c.top is not None and c.bottom is not None]
    bottom: list[int] = []
    for j, block in enumerate(blocks):
        if j:
            bottom.append(xs[j - 1])
        low = [c.bottom for c in block]
        if j:
            x = xs[j - 1]
            b = 0
            for c in block:
                if c.top is not None and c.top == x + b + 1 and c.bottom == x + b:
                    b += 1
                else:
                    break
            low = [v + 1 if k < b else v for k, v in enumerate(low)]
        bottom += low
    return tuple(top), tuple(bottom)


# -- lift ------------------------------------------------------------------------


def lift_align(tau: Sequence[int], sigma: Sequence[int]) -> list[Column] | None:
    """Lift alignment of ``tau`` above ``sigma``, or None when none exists.

    Scanning from the right, a letter of sigma sits under the next letter of
    tau when that letter is weakly larger; otherwise it is unblocked and tau
    shifts one column left. Letters of tau left over at the start simply
    have nothing below. Letters of sigma left over at the start cannot be
    placed, and then there is no alignment.
    """
    cols = []
    p, q = len(tau) - 1, len(sigma) - 1
    while p >= 0 and q >= 0:
        if tau[p] >= sigma[q]:
            cols.append(Column(tau[p], sigma[q]))
            p -= 1
        else:
            cols.append(Column(None, sigma[q]))
        q -= 1
    if q >= 0:
        return None
    cols += [Column(t, None) for t in reversed(tau[: p + 1])]
    return cols[::-1]


def lift_pair(tau: Sequence[int], sigma: Sequence[int]) -> tuple[Row, Row]:
    """Lift the unblocked letters of the lower row ``sigma`` into ``tau``.

    Each lifted letter x keeps its column. When the block right of x starts
    with x+1 over x+1, x+2 over x+2, and so on, the lower letters of that
    staircase go down by one. Without a lift alignment nothing moves.

    >>> lift_pair((3, 5), (2, 4, 5))
    ((3, 4, 5), (2, 4))
    >>> lift_pair((6,), (3, 4, 7))
    ((6,), (3, 4, 7))
    """
    tau, sigma = tuple(tau), tuple(sigma)
    cols = lift_align(tau, sigma)
    if cols is None:
        return tau, sigma
    xs, blocks = _blocks(cols, lambda c: c.bottom if c.top is None else None)
    top = [c.bottom if c.top is None else c.top for c in cols]
    bottom: list[int] = []
    for j, block in enumerate(blocks):
        low = [c.bottom for c in block if c.bottom is not None]
        if j:
            x = xs[j - 1]
            b = 0
            for c in block:
                if c.top == c.bottom == x + b + 1:
                    b += 1
                else:
                    break
            low = [v - 1 if k < b else v for k, v in enumerate(low)]
        bottom += low
    return tuple(top), tuple(bottom)


# -- operators on decompositions ------------------------------------------------------


def _as_tableau(obj) -> tuple[Tableau, bool]:
    if isinstance(obj, Tableau):
        return obj, True
    return descent_tableau(tuple(obj)), False


def _apply_pair(obj, i: int, pair):
    T, is_tab = _as_tableau(obj)
    k = len(T.rows)
    if not 1 <= i < k:
        raise IndexError(f"row index {i} out of range for {k} rows")
    rows = list(T.rows)
    rows[i], rows[i - 1] = pair(rows[i], rows[i - 1])
    out = Tableau(rows)
    return out if is_tab else out.reading_word()


def drop_i(obj, i: int):
    """Drop letters from row i+1 into row i.

    ``obj`` is a `Tableau` or a reduced word; the result has the same kind.
    """
    return _apply_pair(obj, i, drop_pair)


def lift_i(obj, i: int):
    """Lift letters from row i into row i+1.

    ``obj`` is a `Tableau` or a reduced word; the result has the same kind.
    """
    return _apply_pair(obj, i, lift_pair)


def drop_rows(T: Tableau) -> Tableau:
    """Apply drops, lowest row pair first, until every drop is trivial."""
    while True:
        for i in range(1, len(T.rows)):
            S = drop_i(T, i)
            if S != T:
                T = S
                break
        else:
            return T.strip()


def drop_full(rho: Sequence[int]) -> tuple[int, ...]:
    """Reading word of the increasing Young tableau in the class of ``rho``.

    >>> drop_full((3, 6, 4, 7, 5, 2, 4))
    (6, 7, 3, 5, 2, 4, 5)
    """
    return drop_rows(descent_tableau(rho)).reading_word()


def drop_tableau(rho: Sequence[int]) -> Tableau:
    return drop_rows(descent_tableau(rho))


def _graph(T: Tableau, op) -> tuple[list[Tableau], list[tuple[Tableau, int, Tableau]]]:
    nodes = [T]
    seen = {T}
    edges = []
    queue = deque([T])
    while queue:
        u = queue.popleft()
        for i in range(1, len(u.rows)):
            v = op(u, i)
            if v != u:
                edges.append((u, i, v))
                if v not in seen:
                    seen.add(v)
                    nodes.append(v)
                    queue.append(v)
    return nodes, edges


def drop_graph(T):
    """Every tableau reachable by nontrivial drops, with labelled edges."""
    return _graph(_as_tableau(T)[0], drop_i)


def lift_graph(T):
    """Every tableau reachable by nontrivial lifts, with labelled edges."""
    return _graph(_as_tableau(T)[0], lift_i)


def lift_path(P: Tableau) -> list[tuple[int, int, Tableau]]:
    """Canonical lifting path from an increasing Young tableau.

    At each stage take the largest j for which some chain lift_i, lift_{i+1},
    ..., lift_j is nontrivial at every step, using the smallest such i, and
    apply that chain. Stops when every lift is trivial. Returns the steps as
    (i, j, tableau after the chain).
    """
    T = P
    steps = []
    k = len(T.rows)
    while True:
        best = None
        for i in range(1, k):
            S = T
            for j in range(i, k):
                S2 = lift_i(S, j)
                if S2 == S:
                    break
                S = S2
                if best is None or j > best[1]:
                    best = (i, j, S)
        if best is None:
            return steps
        T = best[2]
        steps.append(best)


def lift_canonical(obj):
    """Lift an increasing Young tableau (or its reading word) to the Yamanouchi form."""
    T, is_tab = _as_tableau(obj)
    if not is_tab:
        T = _rows_of_increasing_word(tuple(obj))
    if not T.is_increasing():
        raise ValueError("lifting starts from an increasing Young tableau")
    steps = lift_path(T)
    out = steps[-1][2] if steps else T
    return out if is_tab else out.reading_word()


def _rows_of_increasing_word(rho) -> Tableau:
    T = descent_tableau(rho)
    if not T.is_increasing():
        raise ValueError(f"{rho} is not the reading word of an increasing Young tableau")
    return T


def yamanouchi_word(rho: Sequence[int]) -> tuple[int, ...]:
    """The Yamanouchi word in the Coxeter-Knuth class of ``rho``."""
    return lift_canonical(drop_tableau(rho)).reading_word()


def is_yamanouchi(rho: Sequence[int]) -> bool:
    rho = tuple(rho)
    return yamanouchi_word(rho) == rho


def is_yamanouchi_by_scan(rho: Sequence[int]) -> bool:
    """Definitional check: des(rho) is nonvirtual and dominated by des of every other word in its class."""
    rho = tuple(rho)
    a = weak_descent_composition(rho)
    if a is VIRTUAL:
        return False
    for other in ck_class(rho):
        if other == rho:
            continue
        b = weak_descent_composition(other)
        if b is not VIRTUAL and not dominates(b, a):
            return False
    return True


def yamanouchi_by_scan(cls) -> tuple[int, ...]:
    """The unique word of a class whose weak descent composition is dominance-least."""
    found = [rho for rho in cls if is_yamanouchi_by_scan(rho)]
    if len(found) != 1:
        raise AssertionError(f"expected one Yamanouchi word, found {len(found)}")
    return found[0]
