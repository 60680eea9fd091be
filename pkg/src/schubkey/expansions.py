"""Stanley symmetric functions and Schubert polynomials from reduced words.

Generating functions are assembled from the multiset of descent statistics
over R(w). Counting those multisets one word at a time is fine up to rank 5;
`descent_distribution` and `weak_descent_distribution` get the same
multisets by memoized recursion on the permutation, which keeps rank 6
(about a million reduced words) fast.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from typing import Sequence

from .compositions import VIRTUAL, partitions, pad
from .coxeter_knuth import ck_classes
from .droplift import lift_canonical, yamanouchi_by_scan
from .permutations import (
    Permutation,
    check_permutation,
    count_reduced_words,
    descents,
    iter_reduced_words,
    last_descent,
    length,
    swap_positions,
)
from .polynomial import (
    Polynomial,
    divided_difference,
    fundamental_qsym,
    fundamental_slide,
    linear_combination,
)
from .tableaux import Tableau, key_polynomial, schur
from .wordstats import descent_composition, weak_descent_composition


# -- descent multisets ---------------------------------------------------------------


@lru_cache(maxsize=None)
def _runs_from(u: Permutation, last: int) -> tuple[tuple[tuple[int, ...], int], ...]:
    """Run lengths (leftmost first) of ``last`` followed by each reduced word of u."""
    ds = descents(u)
    if not ds:
        return (((1,), 1),)
    acc: Counter = Counter()
    for i in ds:
        for runs, c in _runs_from(swap_positions(u, i), i):
            if i > last:
                acc[(runs[0] + 1,) + runs[1:]] += c
            else:
                acc[(1,) + runs] += c
    return tuple(acc.items())


def descent_distribution(w: Sequence[int]) -> Counter:
    """Multiset of Des(rho) over rho in R(w)."""
    w = check_permutation(w)
    ds = descents(w)
    if not ds:
        return Counter({(): 1})
    acc: Counter = Counter()
    for i in ds:
        for runs, c in _runs_from(swap_positions(w, i), i):
            acc[tuple(reversed(runs))] += c
    return acc


@lru_cache(maxsize=None)
def _rows_from(u: Permutation, last: int, row: int) -> tuple:
    """Row contents contributed by the letters after ``last``.

    ``row`` is the row of the run holding ``last``. Keys are tuples of length
    len(u) giving the number of later letters per row, or VIRTUAL.
    """
    n = len(u)
    ds = descents(u)
    if not ds:
        return (((0,) * n, 1),)
    acc: Counter = Counter()
    for i in ds:
        v = swap_positions(u, i)
        r = row if i > last else min(i, row - 1)
        if r <= 0:
            acc[VIRTUAL] += count_reduced_words(v)
            continue
        for vec, c in _rows_from(v, i, r):
            if vec is VIRTUAL:
                acc[VIRTUAL] += c
            else:
                vec = list(vec)
                vec[r - 1] += 1
                acc[tuple(vec)] += c
    return tuple(acc.items())


def weak_descent_distribution(w: Sequence[int]) -> Counter:
    """Multiset of des(rho) over rho in R(w), padded to the last descent of w."""
    w = check_permutation(w)
    d = last_descent(w)
    ds = descents(w)
    if not ds:
        return Counter({(): 1})
    acc: Counter = Counter()
    for i in ds:
        for vec, c in _rows_from(swap_positions(w, i), i, i):
            if vec is VIRTUAL:
                acc[VIRTUAL] += c
            else:
                vec = list(vec)
                vec[i - 1] += 1
                acc[pad(vec, d)] += c
    return acc


def descent_distribution_by_words(w: Sequence[int]) -> Counter:
    return Counter(descent_composition(rho) for rho in iter_reduced_words(check_permutation(w)))


def weak_descent_distribution_by_words(w: Sequence[int]) -> Counter:
    w = check_permutation(w)
    d = last_descent(w)
    return Counter(weak_descent_composition(rho, d) for rho in iter_reduced_words(w))


def fundamental_expansion(w: Sequence[int]) -> Counter:
    """Coefficients of the Stanley symmetric function in the fundamental basis."""
    return descent_distribution(w)


def slide_expansion(w: Sequence[int]) -> Counter:
    """Coefficients of the Schubert polynomial in the fundamental slide basis."""
    dist = weak_descent_distribution(w)
    dist.pop(VIRTUAL, None)
    return dist


# -- generating functions -------------------------------------------------------------


def stanley_function(w: Sequence[int], m: int) -> Polynomial:
    """Stanley symmetric function of w restricted to x_1..x_m."""
    return linear_combination((c, fundamental_qsym(a, m)) for a, c in fundamental_expansion(w).items()).with_nvars(m)


def schubert(w: Sequence[int]) -> Polynomial:
    """Schubert polynomial of w as a sum of fundamental slides over its reduced words."""
    w = check_permutation(w)
    d = last_descent(w)
    return linear_combination((c, fundamental_slide(a)) for a, c in slide_expansion(w).items()).with_nvars(d)


@lru_cache(maxsize=None)
def _oracle(w: Permutation) -> Polynomial:
    n = len(w)
    w0 = tuple(range(n, 0, -1))
    if w == w0:
        return Polynomial.monomial(tuple(range(n - 1, -1, -1)))
    i = next(i for i in range(1, n) if w[i - 1] < w[i])
    return divided_difference(_oracle(swap_positions(w, i)), i)


def schubert_oracle(w: Sequence[int]) -> Polynomial:
    """Schubert polynomial by divided differences from the longest element."""
    return _oracle(check_permutation(w))


# -- increasing and Yamanouchi representatives -------------------------------------------


def increasing_tableaux(w: Sequence[int]) -> list[Tableau]:
    """Increasing Young tableaux whose reading word is a reduced word of w.

    Cells are filled in reading order (top row first); a letter must be a
    descent of what is left of w, exceed its left neighbour and be smaller
    than the entry above it.
    """
    w = check_permutation(w)
    ell = length(w)
    n = len(w)
    out = []
    for la in partitions(ell):
        if la and (la[0] > n - 1 or len(la) > n - 1):
            continue
        rows = [[0] * p for p in la]
        cells = [(r, c) for r in range(len(la) - 1, -1, -1) for c in range(la[r])]
        u = list(w)

        def rec(k):
            if k == len(cells):
                out.append(Tableau([tuple(r) for r in rows]))
                return
            r, c = cells[k]
            lo = rows[r][c - 1] + 1 if c else 1
            hi = rows[r + 1][c] - 1 if r + 1 < len(la) and c < la[r + 1] else n - 1
            for i in range(lo, hi + 1):
                if u[i - 1] > u[i]:
                    u[i - 1], u[i] = u[i], u[i - 1]
                    rows[r][c] = i
                    rec(k + 1)
                    u[i - 1], u[i] = u[i], u[i - 1]
            rows[r][c] = 0

        rec(0)
    return sorted(out, key=lambda T: T.reading_word())


def increasing_words(w: Sequence[int]) -> list[tuple[int, ...]]:
    return [T.reading_word() for T in increasing_tableaux(w)]


def yamanouchi_words(w: Sequence[int], method: str = "lift") -> list[tuple[int, ...]]:
    """Yamanouchi words of w, one per Coxeter-Knuth class.

    ``method="lift"`` lifts each increasing Young tableau; ``method="scan"``
    searches each class for the word with dominance-least weak descent
    composition.
    """
    if method == "lift":
        return sorted(lift_canonical(T).reading_word() for T in increasing_tableaux(w))
    if method == "scan":
        return sorted(yamanouchi_by_scan(cls) for cls in ck_classes(w))
    raise ValueError(f"unknown method {method!r}")


def schur_expansion(w: Sequence[int]) -> Counter:
    """Multiplicity of each partition in the Schur expansion of the Stanley function."""
    return Counter(T.shape for T in increasing_tableaux(w))


def demazure_expansion(w: Sequence[int], method: str = "lift") -> Counter:
    """Multiplicity of each weak composition in the key expansion of the Schubert polynomial.

    Compositions are padded to the last descent of w.
    """
    w = check_permutation(w)
    d = last_descent(w)
    return Counter(weak_descent_composition(rho, d) for rho in yamanouchi_words(w, method))


def schur_sum(expansion: Counter, m: int) -> Polynomial:
    return linear_combination((c, schur(la, m)) for la, c in expansion.items())


def key_sum(expansion: Counter) -> Polynomial:
    return linear_combination((c, key_polynomial(a)) for a, c in expansion.items())


def schur_fundamental_expansion(expansion: Counter) -> Counter:
    """Fundamental-basis coefficients of a sum of Schur functions."""
    from .tableaux import enumerate_syt, syt_descent_composition

    acc: Counter = Counter()
    for la, c in expansion.items():
        for T in enumerate_syt(la):
            acc[syt_descent_composition(T)] += c
    return acc


def key_slide_expansion(expansion: Counter) -> Counter:
    """Slide-basis coefficients of a sum of key polynomials."""
    from .tableaux import enumerate_skt, skt_weak_descent_composition

    acc: Counter = Counter()
    for a, c in expansion.items():
        for T in enumerate_skt(a):
            b = skt_weak_descent_composition(T, len(a))
            if b is not VIRTUAL:
                acc[b] += c
    return acc

