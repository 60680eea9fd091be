"""Parsing and rendering of permutations, words, compositions, tableaux."""

from __future__ import annotations

import re
from typing import Sequence

from .compositions import VIRTUAL
from .permutations import check_permutation
from .tableaux import KeyTableau, Tableau


def format_permutation(w: Sequence[int]) -> str:
    """Digits when the rank is at most 9, otherwise comma separated."""
    if len(w) <= 9:
        return "".join(map(str, w))
    return ",".join(map(str, w))


def parse_permutation(s: str) -> tuple[int, ...]:
    s = s.strip().strip("()[]")
    if not s:
        raise ValueError("empty permutation")
    if "," in s or " " in s:
        parts = [p for p in re.split(r"[,\s]+", s) if p]
    else:
        parts = list(s)
    try:
        w = tuple(int(p) for p in parts)
    except ValueError:
        raise ValueError(f"malformed permutation: {s!r}") from None
    return check_permutation(w)


def format_word(rho: Sequence[int]) -> str:
    return "(" + ",".join(map(str, rho)) + ")"


def parse_word(s: str) -> tuple[int, ...]:
    s = s.strip().strip("()[]").strip()
    if not s:
        return ()
    if "," in s or " " in s:
        parts = [p for p in re.split(r"[,\s]+", s) if p]
    else:
        parts = list(s)
    try:
        rho = tuple(int(p) for p in parts)
    except ValueError:
        raise ValueError(f"malformed word: {s!r}") from None
    if any(a < 1 for a in rho):
        raise ValueError(f"letters must be positive: {s!r}")
    return rho


def format_composition(a) -> str:
    if a is VIRTUAL:
        return "∅"
    return "(" + ",".join(map(str, a)) + ")"


def tableau_to_json(T) -> dict:
    if isinstance(T, KeyTableau):
        return {"shape_kind": "key", "rows": {str(i): list(r) for i, r in T.cells}}
    return {"shape_kind": "young", "rows": {str(i + 1): list(r) for i, r in enumerate(T.rows)}}


def tableau_from_json(d: dict):
    rows = {int(i): r for i, r in d["rows"].items()}
    if d["shape_kind"] == "key":
        return KeyTableau(rows)
    k = max(rows, default=0)
    return Tableau([rows.get(i, []) for i in range(1, k + 1)])


def tableau_to_text(T) -> str:
    if isinstance(T, KeyTableau):
        return str(T)
    if not T.rows:
        return "."
    return "\n".join(" ".join(map(str, r)) if r else "." for r in reversed(T.rows))


def tableau_to_latex(T) -> str:
    """Rows from the top down in the ``\\tableau`` macro; key tableaux get a left rule."""
    if isinstance(T, KeyTableau):
        lines = [" & ".join(map(str, T.row(i))) for i in range(T.height, 0, -1)]
        return "\\vline\\tableau{" + " \\\\ ".join(lines) + " \\\\ \\hline}"
    lines = [" & ".join(map(str, r)) for r in reversed(T.rows)]
    return "\\tableau{" + " \\\\ ".join(lines) + "}"
