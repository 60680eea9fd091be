"""Coxeter-Knuth involutions and the equivalence classes they generate."""

from __future__ import annotations

from collections import deque
from typing import Sequence

from .permutations import ReducedWord, braid, check_permutation, commutation, iter_reduced_words


def ck_involution(rho: Sequence[int], i: int) -> ReducedWord:
    """Coxeter-Knuth involution at position i, for 1 < i < len(rho).

    Looks at the window (rho_{i+1}, rho_i, rho_{i-1}): a braid if its ends
    agree, otherwise the commutation that keeps the relative order of
    the window's middle value, or the identity.

    >>> ck_involution((5, 3, 2, 3, 4), 3)
    (5, 2, 3, 2, 4)
    """
    rho = tuple(rho)
    ell = len(rho)
    if not 1 < i < ell:
        raise IndexError(f"Coxeter-Knuth index {i} out of range for length {ell}")
    hi, mid, lo = rho[ell - i - 1], rho[ell - i], rho[ell - i + 1]
    if hi == lo:
        return braid(rho, i)
    if lo > hi > mid or lo < hi < mid:
        return commutation(rho, i - 1)
    if hi > lo > mid or hi < lo < mid:
        return commutation(rho, i)
    return rho


def ck_class(rho: Sequence[int]) -> frozenset[ReducedWord]:
    rho = tuple(rho)
    seen = {rho}
    queue = deque([rho])
    while queue:
        u = queue.popleft()
        for i in range(2, len(u)):
            v = ck_involution(u, i)
            if v not in seen:
                seen.add(v)
                queue.append(v)
    return frozenset(seen)


def ck_classes(w: Sequence[int]) -> list[frozenset[ReducedWord]]:
    """Partition of R(w) into Coxeter-Knuth classes, ordered by least word."""
    remaining = set(iter_reduced_words(check_permutation(w)))
    out = []
    for rho in sorted(remaining):
        if rho in remaining:
            cls = ck_class(rho)
            remaining -= cls
            out.append(cls)
    return out


def ck_edges(cls) -> set[tuple[ReducedWord, int, ReducedWord]]:
    """Nontrivial involution edges (u, i, v) with u < v inside a class."""
    edges = set()
    for u in cls:
        for i in range(2, len(u)):
            v = ck_involution(u, i)
            if v != u:
                edges.add((min(u, v), i, max(u, v)))
    return edges
