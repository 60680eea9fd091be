"""Young and key tableaux, their descent statistics, and the two dual equivalences.

`Tableau` stores left-justified rows from the bottom up, as in French
notation; it is used both for standard Young tableaux and for row
decompositions of reduced words, whose rows need not form a partition.
`KeyTableau` stores rows by absolute row index so that empty rows and
rows at nonpositive height can be represented.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .compositions import VIRTUAL, conjugate, hat_chain, is_partition, pad, sort_partition
from .polynomial import Polynomial, fundamental_qsym, fundamental_slide, linear_combination


@dataclass(frozen=True)
class Tableau:
    rows: tuple[tuple[int, ...], ...]

    def __init__(self, rows: Iterable[Iterable[int]]):
        object.__setattr__(self, "rows", tuple(tuple(r) for r in rows))

    @classmethod
    def from_top(cls, rows):
        """Build from rows listed top row first, the way tableaux are drawn."""
        return cls(list(rows)[::-1])

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(len(r) for r in self.rows)

    @property
    def size(self) -> int:
        return sum(self.shape)

    def row(self, i: int) -> tuple[int, ...]:
        """Row i counted from 1 at the bottom."""
        return self.rows[i - 1]

    def reading_word(self) -> tuple[int, ...]:
        """Rows left to right, taken from the top row down."""
        return tuple(x for r in reversed(self.rows) for x in r)

    def positions(self) -> dict[int, tuple[int, int]]:
        """Entry -> (row, column), both 1-based."""
        return {x: (i + 1, j + 1) for i, r in enumerate(self.rows) for j, x in enumerate(r)}

    def strip(self) -> "Tableau":
        """Drop empty rows at the top."""
        rows = list(self.rows)
        while rows and not rows[-1]:
            rows.pop()
        return Tableau(rows)

    def has_partition_shape(self) -> bool:
        sh = self.strip().shape
        return all(sh) and is_partition(sh)

    def rows_increasing(self) -> bool:
        return all(r[j] < r[j + 1] for r in self.rows for j in range(len(r) - 1))

    def is_increasing(self) -> bool:
        """Partition shape, rows increase rightward and columns increase upward."""
        if not self.has_partition_shape() or not self.rows_increasing():
            return False
        rows = self.strip().rows
        return all(
            rows[i][j] < rows[i + 1][j] for i in range(len(rows) - 1) for j in range(len(rows[i + 1]))
        )

    def is_standard(self) -> bool:
        entries = sorted(self.reading_word())
        return entries == list(range(1, len(entries) + 1)) and self.is_increasing()

    def swap_entries(self, a: int, b: int) -> "Tableau":
        f = {a: b, b: a}
        return Tableau([[f.get(x, x) for x in r] for r in self.rows])

    def __str__(self):
        return "\n".join(" ".join(map(str, r)) for r in reversed(self.rows))


@dataclass(frozen=True)
class KeyTableau:
    """Rows keyed by their row index; only nonempty rows are stored."""

    cells: tuple[tuple[int, tuple[int, ...]], ...]

    def __init__(self, rows: Mapping[int, Iterable[int]] | Iterable[tuple[int, Iterable[int]]]):
        items = rows.items() if isinstance(rows, Mapping) else rows
        cells = sorted((int(i), tuple(r)) for i, r in items if tuple(r))
        if len({i for i, _ in cells}) != len(cells):
            raise ValueError("repeated row index")
        object.__setattr__(self, "cells", tuple(cells))

    @classmethod
    def from_rows(cls, rows: Sequence[Iterable[int]]) -> "KeyTableau":
        """Rows listed from row 1 upward."""
        return cls({i + 1: r for i, r in enumerate(rows)})

    def row(self, i: int) -> tuple[int, ...]:
        return dict(self.cells).get(i, ())

    @property
    def row_indices(self) -> list[int]:
        return [i for i, _ in self.cells]

    @property
    def is_virtual(self) -> bool:
        return any(i <= 0 for i, _ in self.cells)

    @property
    def height(self) -> int:
        return max(self.row_indices, default=0)

    def shape(self, length: int | None = None) -> tuple[int, ...]:
        if self.is_virtual:
            raise ValueError("tableau has rows at nonpositive height")
        n = self.height if length is None else length
        return pad(tuple(len(self.row(i)) for i in range(1, self.height + 1)), n)

    @property
    def size(self) -> int:
        return sum(len(r) for _, r in self.cells)

    def reading_word(self) -> tuple[int, ...]:
        return tuple(x for _, r in reversed(self.cells) for x in r)

    def positions(self) -> dict[int, tuple[int, int]]:
        return {x: (i, j + 1) for i, r in self.cells for j, x in enumerate(r)}

    def as_rows(self) -> dict[int, tuple[int, ...]]:
        return dict(self.cells)

    def map_entries(self, f) -> "KeyTableau":
        return KeyTableau({i: [f(x) for x in r] for i, r in self.cells})

    def __str__(self):
        if not self.cells:
            return ""
        lo = min(0, min(self.row_indices)) if self.is_virtual else 1
        width = len(str(self.height))
        return "\n".join(
            f"{i:>{width}} | " + " ".join(map(str, self.row(i))) for i in range(self.height, lo - 1, -1)
        )


# -- standard Young tableaux -------------------------------------------------------


def enumerate_syt(shape: Sequence[int]) -> list[Tableau]:
    """All standard Young tableaux of partition shape ``shape``, rows bottom up."""
    shape = tuple(shape)
    if shape and not is_partition(shape):
        raise ValueError(f"not a partition: {shape}")
    n = sum(shape)
    out = []
    rows: list[list[int]] = [[] for _ in shape]

    def rec(k):
        if k > n:
            out.append(Tableau(rows))
            return
        for i, r in enumerate(rows):
            if len(r) < shape[i] and (i == 0 or len(rows[i - 1]) > len(r)):
                r.append(k)
                rec(k + 1)
                r.pop()

    rec(1)
    return out


def syt_descents(T: Tableau) -> list[int]:
    """i is a descent when i+1 sits weakly left of i."""
    pos = T.positions()
    return [i for i in range(1, T.size) if pos[i + 1][1] <= pos[i][1]]


def syt_descent_composition(T: Tableau) -> tuple[int, ...]:
    """Lengths of the runs of 1..n cut after each descent.

    >>> syt_descent_composition(Tableau.from_top([[4, 5], [1, 2, 3]]))
    (3, 2)
    """
    cuts = [0] + syt_descents(T) + [T.size]
    return tuple(b - a for a, b in zip(cuts, cuts[1:]) if b > a)


@lru_cache(maxsize=None)
def _schur(shape: tuple, m: int) -> Polynomial:
    return linear_combination((1, fundamental_qsym(syt_descent_composition(T), m)) for T in enumerate_syt(shape))


def schur(shape: Sequence[int], m: int) -> Polynomial:
    """Schur polynomial s_shape in x_1..x_m as a sum of fundamental quasisymmetric polynomials."""
    return _schur(tuple(shape), m)


def dual_equivalence(T: Tableau, i: int) -> Tableau:
    """Elementary dual equivalence d_i on a standard Young tableau, 1 < i < n."""
    n = T.size
    if not 1 < i < n:
        raise IndexError(f"d_{i} needs 1 < i < {n}")
    word = T.reading_word()
    where = {x: k for k, x in enumerate(word)}
    middle = sorted((i - 1, i, i + 1), key=where.__getitem__)[1]
    if middle == i + 1:
        return T.swap_entries(i - 1, i)
    if middle == i - 1:
        return T.swap_entries(i, i + 1)
    return T


# -- standard key tableaux ---------------------------------------------------------


def is_standard_key_tableau(T: KeyTableau) -> bool:
    """Rows decrease rightward, entries are 1..n, and the column condition holds.

    The column condition: when i sits above k in a column with i < k, some
    entry right of k in its row exceeds i.
    """
    if T.is_virtual:
        return False
    entries = sorted(T.reading_word())
    if entries != list(range(1, len(entries) + 1)):
        return False
    rows = T.as_rows()
    for r in rows.values():
        if any(r[j] <= r[j + 1] for j in range(len(r) - 1)):
            return False
    for hi, top in rows.items():
        for lo, bottom in rows.items():
            if lo >= hi:
                continue
            for c in range(min(len(top), len(bottom))):
                i, k = top[c], bottom[c]
                if i < k and not any(j > i for j in bottom[c + 1 :]):
                    return False
    return True


def enumerate_skt(a: Sequence[int]) -> list[KeyTableau]:
    """Standard key tableaux of key shape ``a`` (``a[0]`` is the length of row 1).

    Entries are placed from n down to 1, each in the leftmost free cell of
    some row, which keeps rows decreasing. The column condition can be
    checked as each entry lands, since every entry below it is already larger.
    """
    a = tuple(a)
    n = sum(a)
    fill = [0] * len(a)
    grid = [[0] * p for p in a]
    out = []

    def rec(e):
        if e == 0:
            out.append(KeyTableau({i + 1: grid[i] for i in range(len(a))}))
            return
        for r in range(len(a)):
            c = fill[r]
            if c == a[r]:
                continue
            # below (r, c): a filled cell (r', c) holds k > e; it needs a filled right neighbour
            if any(fill[q] == c + 1 for q in range(r) if a[q] > c):
                continue
            grid[r][c] = e
            fill[r] += 1
            rec(e - 1)
            fill[r] -= 1
            grid[r][c] = 0

    rec(n)
    return out


def skt_descents(T: KeyTableau) -> list[int]:
    """i is a descent when i+1 sits weakly right of i."""
    pos = T.positions()
    return [i for i in range(1, T.size) if pos[i + 1][1] >= pos[i][1]]


def skt_weak_descent_composition(T: KeyTableau, length: int | None = None):
    """Weak descent composition of a standard key tableau, or VIRTUAL.

    The word n, n-1, ..., 1 is cut at descents; each piece sits at the lowest
    row it touches, lowered further so that pieces occupy strictly
    decreasing rows.
    """
    n = T.size
    pos = T.positions()
    desc = set(skt_descents(T))
    runs: list[list[int]] = [[]]
    for v in range(n, 0, -1):
        runs[-1].append(v)
        if v - 1 in desc:
            runs.append([])
    runs = [r for r in runs if r]
    rows = hat_chain([min(pos[v][0] for v in run) for run in runs])
    if rows is VIRTUAL:
        return VIRTUAL
    width = max(rows, default=0) if length is None else length
    out = [0] * max(width, max(rows, default=0))
    for run, r in zip(runs, rows):
        out[r - 1] += len(run)
    return pad(tuple(out), width)


@lru_cache(maxsize=None)
def _key(a: tuple) -> Polynomial:
    terms = []
    for T in enumerate_skt(a):
        d = skt_weak_descent_composition(T, len(a))
        if d is not VIRTUAL:
            terms.append((1, fundamental_slide(d)))
    return linear_combination(terms).with_nvars(len(a))


def key_polynomial(a: Sequence[int]) -> Polynomial:
    """Key (Demazure character) polynomial as a sum of fundamental slides."""
    return _key(tuple(a))


def canonical_skt(a: Sequence[int]) -> KeyTableau:
    """Fill rows from the top down, left to right, with n, n-1, ..., 1."""
    a = tuple(a)
    nxt = sum(a)
    rows = {}
    for i in range(len(a), 0, -1):
        rows[i] = list(range(nxt, nxt - a[i - 1], -1))
        nxt -= a[i - 1]
    return KeyTableau(rows)


def column_reading_word(T: KeyTableau) -> tuple[int, ...]:
    """Columns from left to right, each read from the bottom row up."""
    rows = T.as_rows()
    width = max((len(r) for r in rows.values()), default=0)
    order = sorted(rows)
    return tuple(rows[i][c] for c in range(width) for i in order if c < len(rows[i]))


def _permute(T: KeyTableau, f: dict[int, int]) -> KeyTableau:
    return T.map_entries(lambda x: f.get(x, x))


def weak_dual_equivalence(T: KeyTableau, i: int) -> KeyTableau:
    """Elementary weak dual equivalence on a standard key tableau, 1 < i < n.

    Let u, v, w be the cells of i-1, i, i+1 in column reading order. When u
    and w share a row that v is not in, i-1, i, i+1 are cycled so that i
    joins the row of i-1 or i+1. Otherwise v decides: i+1 in the middle
    swaps i-1 and i, i-1 in the middle swaps i and i+1.
    """
    n = T.size
    if not 1 < i < n:
        raise IndexError(f"weak d_{i} needs 1 < i < {n}")
    word = column_reading_word(T)
    where = {x: k for k, x in enumerate(word)}
    u, v, w = sorted((i - 1, i, i + 1), key=where.__getitem__)
    pos = T.positions()
    if pos[u][0] == pos[w][0] != pos[v][0]:
        found = []
        for cyc in ({i - 1: i, i: i + 1, i + 1: i - 1}, {i - 1: i + 1, i: i - 1, i + 1: i}):
            S = _permute(T, cyc)
            p = S.positions()
            if p[i][0] in (p[i - 1][0], p[i + 1][0]) and is_standard_key_tableau(S):
                found.append(S)
        if len(found) != 1:
            raise AssertionError(f"weak d_{i} has {len(found)} admissible cycles")
        return found[0]
    if v == i + 1:
        return _permute(T, {i - 1: i, i: i - 1})
    if v == i - 1:
        return _permute(T, {i: i + 1, i + 1: i})
    return T


def phi(T: KeyTableau) -> Tableau:
    """Bijection from standard key tableaux to standard Young tableaux.

    Columns keep their entries but fall to the bottom, each entry x becomes
    n + 1 - x, and each column is sorted to increase upward.
    """
    n = T.size
    rows = T.as_rows()
    width = max((len(r) for r in rows.values()), default=0)
    cols = [sorted(n + 1 - r[c] for r in rows.values() if c < len(r)) for c in range(width)]
    la = conjugate([len(c) for c in cols])
    return Tableau([[cols[c][i] for c in range(la[i])] for i in range(len(la))])


def schur_from_ssyt(shape: Sequence[int], m: int) -> Polynomial:
    """Schur polynomial by direct enumeration of semistandard tableaux."""
    shape = sort_partition(shape)
    cells = [(i, j) for i in range(len(shape)) for j in range(shape[i])]
    val: dict[tuple[int, int], int] = {}
    terms: dict[tuple[int, ...], int] = {}

    def rec(k):
        if k == len(cells):
            e = [0] * m
            for x in val.values():
                e[x - 1] += 1
            terms[tuple(e)] = terms.get(tuple(e), 0) + 1
            return
        i, j = cells[k]
        lo = 1
        if j > 0:
            lo = max(lo, val[(i, j - 1)])
        if i > 0:
            lo = max(lo, val[(i - 1, j)] + 1)
        for x in range(lo, m + 1):
            val[(i, j)] = x
            rec(k + 1)
        val.pop((i, j), None)

    rec(0)
    return Polynomial(terms, m)
