"""Permutations in one-line notation and their reduced words.

A permutation of rank n is a tuple containing 1..n once each. A reduced word
is a tuple of letters in printed order, so ``rho[0]`` is the leftmost letter.
The rightmost letter acts first: starting from the identity, the letters are
applied right to left, each letter ``i`` swapping positions i and i+1.

Positional operators follow the right-to-left convention used for the
letters themselves: position 1 is ``rho[-1]`` and position ``len(rho)`` is
``rho[0]``.

>>> apply_word((5, 3, 2, 3, 4), 6)
(1, 5, 3, 2, 6, 4)
"""

from __future__ import annotations

from collections import deque
from functools import lru_cache
from itertools import permutations as _perms
from typing import Iterator, Sequence

Permutation = tuple[int, ...]
ReducedWord = tuple[int, ...]


def identity(n: int) -> Permutation:
    return tuple(range(1, n + 1))


def is_permutation(w: Sequence[int]) -> bool:
    return sorted(w) == list(range(1, len(w) + 1))


def check_permutation(w: Sequence[int]) -> Permutation:
    w = tuple(w)
    if not is_permutation(w):
        raise ValueError(f"not a permutation in one-line notation: {w}")
    return w


def all_permutations(n: int) -> list[Permutation]:
    return list(_perms(range(1, n + 1)))


def length(w: Sequence[int]) -> int:
    """Number of inversions."""
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])


def descents(w: Sequence[int]) -> list[int]:
    """Positions i (1-based) with w(i) > w(i+1)."""
    return [i + 1 for i in range(len(w) - 1) if w[i] > w[i + 1]]


def last_descent(w: Sequence[int]) -> int:
    d = descents(w)
    return d[-1] if d else 0


def swap_positions(w: Sequence[int], i: int) -> Permutation:
    """Right multiplication by s_i."""
    w = list(w)
    w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def apply_word(rho: Sequence[int], n: int | None = None) -> Permutation:
    """The permutation of rank ``n`` represented by ``rho``.

    Raises ValueError when a letter does not fit in rank ``n``.
    """
    if n is None:
        n = max(rho, default=0) + 1
    w = list(range(1, n + 1))
    for a in reversed(rho):
        if not 1 <= a < n:
            raise ValueError(f"letter {a} out of range for rank {n}")
        w[a - 1], w[a] = w[a], w[a - 1]
    return tuple(w)


def is_reduced(rho: Sequence[int], n: int | None = None) -> bool:
    if n is None:
        n = max(rho, default=0) + 1
    return length(apply_word(rho, n)) == len(rho)


def reduced_permutation(rho: Sequence[int], n: int | None = None) -> Permutation:
    """Like `apply_word`, but insists that ``rho`` is reduced."""
    w = apply_word(rho, n)
    if length(w) != len(rho):
        raise ValueError(f"{tuple(rho)} is not a reduced word")
    return w


def iter_reduced_words(w: Sequence[int]) -> Iterator[ReducedWord]:
    """Reduced words of ``w`` in lexicographic order.

    The leftmost letter of a reduced word of w is a descent of w, and the
    rest is a reduced word of w s_i.
    """
    w = list(w)
    word: list[int] = []
    ell = length(w)

    def rec(depth):
        if depth == ell:
            yield tuple(word)
            return
        for i in range(len(w) - 1):
            if w[i] > w[i + 1]:
                w[i], w[i + 1] = w[i + 1], w[i]
                word.append(i + 1)
                yield from rec(depth + 1)
                word.pop()
                w[i], w[i + 1] = w[i + 1], w[i]

    yield from rec(0)


def enumerate_reduced_words(w: Sequence[int]) -> list[ReducedWord]:
    """All reduced words of ``w``, sorted.

    >>> enumerate_reduced_words((3, 2, 1))
    [(1, 2, 1), (2, 1, 2)]
    """
    return list(iter_reduced_words(check_permutation(w)))


@lru_cache(maxsize=None)
def count_reduced_words(w: Permutation) -> int:
    ds = descents(w)
    if not ds:
        return 1
    return sum(count_reduced_words(swap_positions(w, i)) for i in ds)


def _index(rho: Sequence[int], j: int) -> int:
    """List index of position j (position 1 is the rightmost letter)."""
    return len(rho) - j


def commutation(rho: Sequence[int], j: int) -> ReducedWord:
    """Swap the letters at positions j and j+1 when they differ by more than one."""
    rho = tuple(rho)
    if not 1 <= j < len(rho):
        raise IndexError(f"commutation index {j} out of range for length {len(rho)}")
    a, b = _index(rho, j + 1), _index(rho, j)
    if abs(rho[a] - rho[b]) <= 1:
        return rho
    out = list(rho)
    out[a], out[b] = out[b], out[a]
    return tuple(out)


def braid(rho: Sequence[int], j: int) -> ReducedWord:
    """Replace the window at positions j+1, j, j-1 of shape ``a b a`` by ``b a b``."""
    rho = tuple(rho)
    if not 1 < j < len(rho):
        raise IndexError(f"braid index {j} out of range for length {len(rho)}")
    hi, mid, lo = _index(rho, j + 1), _index(rho, j), _index(rho, j - 1)
    if rho[hi] != rho[lo] or abs(rho[hi] - rho[mid]) != 1:
        return rho
    out = list(rho)
    out[hi], out[mid], out[lo] = rho[mid], rho[hi], rho[mid]
    return tuple(out)


def coxeter_graph(w: Sequence[int]) -> dict[ReducedWord, set[tuple[str, int, ReducedWord]]]:
    """Adjacency of R(w) under nontrivial commutation and braid moves.

    Each edge is stored on both endpoints as ``(kind, j, other)`` with kind
    ``"c"`` or ``"b"``.
    """
    graph: dict[ReducedWord, set] = {}
    for rho in iter_reduced_words(check_permutation(w)):
        edges = graph.setdefault(rho, set())
        for j in range(1, len(rho)):
            other = commutation(rho, j)
            if other != rho:
                edges.add(("c", j, other))
        for j in range(2, len(rho)):
            other = braid(rho, j)
            if other != rho:
                edges.add(("b", j, other))
    return graph


def connected_components(graph: dict) -> list[set]:
    seen: set = set()
    comps = []
    for start in sorted(graph):
        if start in seen:
            continue
        comp = {start}
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for *_, v in graph[u]:
                if v not in comp:
                    comp.add(v)
                    queue.append(v)
        seen |= comp
        comps.append(comp)
    return comps
