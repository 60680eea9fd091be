"""Strong and weak compositions.

Compositions are plain tuples of ints. A weak composition may contain zeros;
its length is significant only up to trailing zeros, which `trim` removes.
"""

from __future__ import annotations

from itertools import accumulate
from typing import Sequence

Composition = tuple[int, ...]


class _Virtual:
    """Marker for a word or tableau whose weak descent composition is undefined."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "VIRTUAL"

    def __str__(self) -> str:
        return "∅"

    def __reduce__(self):
        return (_Virtual, ())


VIRTUAL = _Virtual()


def flat(a: Sequence[int]) -> Composition:
    """Drop zero parts.

    >>> flat((0, 3, 0, 2))
    (3, 2)
    """
    return tuple(p for p in a if p)


def trim(a: Sequence[int]) -> Composition:
    """Remove trailing zeros."""
    a = tuple(a)
    end = len(a)
    while end and a[end - 1] == 0:
        end -= 1
    return a[:end]


def pad(a: Sequence[int], n: int) -> Composition:
    """Extend with zeros to length ``n``; raise if a nonzero part would be lost."""
    a = tuple(a)
    if len(a) > n:
        if any(a[n:]):
            raise ValueError(f"{a} does not fit in {n} parts")
        return a[:n]
    return a + (0,) * (n - len(a))


def partial_sums(a: Sequence[int]) -> tuple[int, ...]:
    return tuple(accumulate(a))


def refines(beta: Sequence[int], alpha: Sequence[int]) -> bool:
    """True when the strong composition ``beta`` refines ``alpha``.

    >>> refines((1, 2, 2), (3, 2))
    True
    >>> refines((2, 3), (3, 2))
    False
    """
    if sum(beta) != sum(alpha):
        return False
    return set(partial_sums(alpha)) <= set(partial_sums(beta))


def dominates(b: Sequence[int], a: Sequence[int]) -> bool:
    """True when every prefix sum of ``b`` is at least the matching prefix sum of ``a``."""
    n = max(len(a), len(b))
    pb = partial_sums(pad(b, n))
    pa = partial_sums(pad(a, n))
    return all(x >= y for x, y in zip(pb, pa))


def is_partition(a: Sequence[int]) -> bool:
    return all(p > 0 for p in a) and all(a[i] >= a[i + 1] for i in range(len(a) - 1))


def sort_partition(a: Sequence[int]) -> Composition:
    """Nonzero parts in weakly decreasing order."""
    return tuple(sorted(flat(a), reverse=True))


def conjugate(la: Sequence[int]) -> Composition:
    la = sort_partition(la)
    if not la:
        return ()
    return tuple(sum(1 for p in la if p > c) for c in range(la[0]))


def partitions(n: int, max_part: int | None = None):
    """Partitions of ``n`` in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def hat_chain(mins: Sequence[int]):
    """Apply the row-lowering recursion to a list of run minima.

    ``mins`` lists the minima from the top run down to the bottom run. Each run
    is placed no higher than its own minimum and strictly below the run above.
    Returns the row indices in the same order, or VIRTUAL when some row would
    be nonpositive.
    """
    rows = []
    prev = None
    for m in mins:
        r = m if prev is None else min(m, prev - 1)
        if r <= 0:
            return VIRTUAL
        rows.append(r)
        prev = r
    return rows
