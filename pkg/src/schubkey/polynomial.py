"""Sparse multivariate polynomials with integer coefficients.

A polynomial maps exponent tuples to Python ints. Two polynomials compare
equal when they agree after padding to a common number of variables, so
``x1`` in one variable equals ``x1`` in three variables.
"""

from __future__ import annotations

from collections import defaultdict
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Sequence

from .compositions import VIRTUAL, flat, pad, partial_sums, trim

Exponent = tuple[int, ...]


class Polynomial:
    __slots__ = ("nvars", "_terms")

    def __init__(self, terms: Mapping[Sequence[int], int] | None = None, nvars: int | None = None):
        items = list((terms or {}).items())
        width = max((len(trim(e)) for e, c in items if c), default=0)
        if nvars is None:
            nvars = width
        elif nvars < width:
            raise ValueError(f"exponent needs {width} variables, got nvars={nvars}")
        acc: dict[Exponent, int] = defaultdict(int)
        for e, c in items:
            if c:
                acc[pad(e, nvars)] += c
        self.nvars = nvars
        self._terms = {e: c for e, c in acc.items() if c}

    @classmethod
    def zero(cls, nvars: int = 0) -> "Polynomial":
        return cls({}, nvars)

    @classmethod
    def constant(cls, c: int, nvars: int = 0) -> "Polynomial":
        return cls({(0,) * nvars: c}, nvars)

    @classmethod
    def monomial(cls, exponent: Sequence[int], coeff: int = 1) -> "Polynomial":
        return cls({tuple(exponent): coeff}, len(exponent))

    @classmethod
    def variable(cls, i: int, nvars: int | None = None) -> "Polynomial":
        """The variable x_i (1-based)."""
        n = i if nvars is None else nvars
        e = [0] * n
        e[i - 1] = 1
        return cls({tuple(e): 1}, n)

    # -- access ----------------------------------------------------------------

    @property
    def terms(self) -> dict[Exponent, int]:
        return dict(self._terms)

    def items(self) -> list[tuple[Exponent, int]]:
        """Terms sorted with the lexicographically largest exponent first."""
        return sorted(self._terms.items(), reverse=True)

    def __iter__(self) -> Iterator[tuple[Exponent, int]]:
        return iter(self.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def coefficient(self, exponent: Sequence[int]) -> int:
        return self._canonical().get(trim(exponent), 0)

    def degree(self) -> int:
        return max((sum(e) for e in self._terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self._terms}) <= 1

    def with_nvars(self, n: int) -> "Polynomial":
        return Polynomial(self._terms, n)

    def truncate(self, m: int) -> "Polynomial":
        """Set x_{m+1}, x_{m+2}, ... to zero."""
        return Polynomial({e[:m]: c for e, c in self._terms.items() if not any(e[m:])}, m)

    def _canonical(self) -> dict[Exponent, int]:
        return {trim(e): c for e, c in self._terms.items()}

    # -- arithmetic ------------------------------------------------------------

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, int):
            return Polynomial.constant(other, self.nvars)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = max(self.nvars, other.nvars)
        acc = defaultdict(int)
        for e, c in self._terms.items():
            acc[pad(e, n)] += c
        for e, c in other._terms.items():
            acc[pad(e, n)] += c
        return Polynomial(acc, n)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial({e: -c for e, c in self._terms.items()}, self.nvars)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return Polynomial({e: c * other for e, c in self._terms.items()}, self.nvars)
        if not isinstance(other, Polynomial):
            return NotImplemented
        n = max(self.nvars, other.nvars)
        acc = defaultdict(int)
        left = [(pad(e, n), c) for e, c in self._terms.items()]
        right = [(pad(e, n), c) for e, c in other._terms.items()]
        for e1, c1 in left:
            for e2, c2 in right:
                acc[tuple(a + b for a, b in zip(e1, e2))] += c1 * c2
        return Polynomial(acc, n)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out = Polynomial.constant(1, self.nvars)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._canonical() == other._canonical()

    def __hash__(self):
        return hash(frozenset(self._canonical().items()))

    def swap(self, i: int) -> "Polynomial":
        """Exchange x_i and x_{i+1}."""
        n = max(self.nvars, i + 1)
        out = {}
        for e, c in self._terms.items():
            e = list(pad(e, n))
            e[i - 1], e[i] = e[i], e[i - 1]
            out[tuple(e)] = c
        return Polynomial(out, n)

    # -- display ---------------------------------------------------------------

    def __repr__(self):
        return f"Polynomial({str(self)!r}, nvars={self.nvars})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for e, c in self.items():
            mono = " ".join(
                f"x{i + 1}" if k == 1 else f"x{i + 1}^{k}" for i, k in enumerate(e) if k
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c} {mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def to_latex(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for e, c in self.items():
            mono = "".join(
                f"x_{{{i + 1}}}" if k == 1 else f"x_{{{i + 1}}}^{{{k}}}"
                for i, k in enumerate(e)
                if k
            )
            coeff = "" if (c == 1 and mono) else ("-" if c == -1 and mono else str(c))
            parts.append(coeff + mono)
        return " + ".join(parts).replace("+ -", "- ")

    def to_json(self) -> list[dict]:
        return [{"exponents": list(e), "coeff": c} for e, c in self.items()]


def divided_difference(f: Polynomial, i: int) -> Polynomial:
    """(f - s_i f) / (x_i - x_{i+1}), computed monomial by monomial."""
    n = max(f.nvars, i + 1)
    acc = defaultdict(int)
    for e, c in f.terms.items():
        e = list(pad(e, n))
        p, q = e[i - 1], e[i]
        if p == q:
            continue
        lo, hi, sign = (q, p, 1) if p > q else (p, q, -1)
        # x_i^p x_{i+1}^q with p > q divides to sum_{k} x_i^{p-1-k} x_{i+1}^{q+k}
        for k in range(hi - lo):
            e[i - 1], e[i] = hi - 1 - k, lo + k
            if sign < 0:
                e[i - 1], e[i] = e[i], e[i - 1]
            acc[tuple(e)] += sign * c
    return Polynomial(acc, n)


def _refining_exponents(alpha: Sequence[int], m: int, lower: Sequence[int] | None = None):
    """Exponent vectors b of length m whose nonzero parts refine ``alpha``.

    With ``lower`` given, also require prefix sums of b to dominate those of
    ``lower``.
    """
    alpha = flat(alpha)
    bound = partial_sums(pad(lower, m)) if lower is not None else None
    total = sum(alpha)
    b = [0] * m

    def rec(p, part, rem, s):
        # p: next position, part: index into alpha, rem: what is left of alpha[part]
        if part == len(alpha):
            if bound is None or all(s >= bound[q] for q in range(p, m)):
                yield tuple(b)
            return
        if p == m:
            return
        for v in range(rem, -1, -1):
            s2 = s + v
            if bound is not None and s2 < bound[p]:
                break
            b[p] = v
            if v == rem:
                nxt = part + 1
                yield from rec(p + 1, nxt, alpha[nxt] if nxt < len(alpha) else 0, s2)
            else:
                yield from rec(p + 1, part, rem - v, s2)
            b[p] = 0

    if total == 0:
        yield tuple(b)
        return
    yield from rec(0, 0, alpha[0], 0)


@lru_cache(maxsize=None)
def _qsym(alpha: tuple, m: int) -> Polynomial:
    return Polynomial({b: 1 for b in _refining_exponents(alpha, m)}, m)


def fundamental_qsym(alpha: Sequence[int], m: int) -> Polynomial:
    """Fundamental quasisymmetric polynomial F_alpha in x_1..x_m.

    >>> str(fundamental_qsym((2,), 2))
    'x1^2 + x1 x2 + x2^2'
    """
    alpha = tuple(alpha)
    if any(p <= 0 for p in alpha):
        raise ValueError(f"not a strong composition: {alpha}")
    return _qsym(alpha, m)


@lru_cache(maxsize=None)
def _slide(a: tuple) -> Polynomial:
    return Polynomial({b: 1 for b in _refining_exponents(flat(a), len(a), a)}, len(a))


def fundamental_slide(a) -> Polynomial:
    """Fundamental slide polynomial of the weak composition ``a``; zero for VIRTUAL.

    >>> str(fundamental_slide((3, 0, 2)))
    'x1^3 x2^2 + x1^3 x2 x3 + x1^3 x3^2'
    """
    if a is VIRTUAL:
        return Polynomial.zero()
    a = tuple(a)
    if any(p < 0 for p in a):
        raise ValueError(f"not a weak composition: {a}")
    return _slide(trim(a))


def linear_combination(pairs: Iterable[tuple[int, Polynomial]]) -> Polynomial:
    acc = defaultdict(int)
    n = 0
    for c, f in pairs:
        n = max(n, f.nvars)
        for e, d in f.terms.items():
            acc[trim(e)] += c * d
    return Polynomial(acc, n)
