"""Edelman-Greene insertion and its weak (key tableau) analogue."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .coxeter_knuth import ck_involution
from .droplift import drop_tableau, lift_canonical
from .permutations import reduced_permutation
from .tableaux import KeyTableau, Tableau, dual_equivalence, weak_dual_equivalence
from .wordstats import weak_descent_tableau


def eg_insert(P: Tableau, x: int) -> tuple[Tableau, int]:
    """Insert ``x`` into the increasing tableau ``P``.

    Returns the new tableau and the (1-based) row that gained a cell. A
    letter bumps the least larger entry z of the row into the next row; the
    row is left unchanged when z = x+1 and x is already present.
    """
    rows = [list(r) for r in P.rows]
    i = 0
    while True:
        if i == len(rows):
            rows.append([x])
            return Tableau(rows), i + 1
        row = rows[i]
        bigger = [k for k, z in enumerate(row) if z > x]
        if not bigger:
            if row and row[-1] == x:
                raise ValueError("insertion produced a repeated letter; word is not reduced")
            row.append(x)
            return Tableau(rows), i + 1
        k = bigger[0]
        z = row[k]
        if not (z == x + 1 and x in row):
            row[k] = x
        x = z
        i += 1


@dataclass
class Insertion:
    insertion: object
    recording: object
    trace: list = field(default_factory=list)


def eg_correspondence(rho: Sequence[int]) -> Insertion:
    """Insert the letters of ``rho`` left to right.

    The recording tableau gets entry t where the t-th letter's insertion
    ended. ``trace`` holds (P, Q) after every step.
    """
    rho = tuple(rho)
    reduced_permutation(rho)
    P, Q = Tableau([]), Tableau([])
    trace = []
    for t, x in enumerate(rho, 1):
        P, r = eg_insert(P, x)
        rows = [list(q) for q in Q.rows]
        if r > len(rows):
            rows.append([])
        rows[r - 1].append(t)
        Q = Tableau(rows)
        trace.append((P, Q))
    return Insertion(P, Q, trace)


def weak_insert(Pt: KeyTableau, x: int) -> KeyTableau:
    """Drop ``Pt`` to its increasing Young tableau, insert ``x``, lift back."""
    P = drop_tableau(Pt.reading_word())
    P2, _ = eg_insert(P, x)
    return weak_descent_tableau(lift_canonical(P2).reading_word())


def _grown_row(old: KeyTableau, new: KeyTableau) -> int:
    idx = set(old.row_indices) | set(new.row_indices)
    diff = {i: len(new.row(i)) - len(old.row(i)) for i in idx}
    grown = [i for i, d in diff.items() if d]
    if len(grown) != 1 or diff[grown[0]] != 1:
        raise AssertionError(f"weak insertion changed rows {diff}")
    return grown[0]


def weak_correspondence(rho: Sequence[int]) -> Insertion:
    """Weak insertion of ``rho`` left to right.

    The recording key tableau gets entry len(rho) + 1 - t in the row that
    grew at step t, so its entries decrease along rows.
    """
    rho = tuple(rho)
    reduced_permutation(rho)
    k = len(rho)
    Pt, Qt = KeyTableau({}), KeyTableau({})
    trace = []
    for t, x in enumerate(rho, 1):
        new = weak_insert(Pt, x)
        r = _grown_row(Pt, new)
        rows = Qt.as_rows()
        rows[r] = rows.get(r, ()) + (k + 1 - t,)
        Pt, Qt = new, KeyTableau(rows)
        trace.append((Pt, Qt))
    return Insertion(Pt, Qt, trace)


def recording_equivariance_check(sigma: Sequence[int], tau: Sequence[int], i: int) -> bool:
    """Check both recording-tableau equivariances for the pair at index i.

    For words of length n: Q(sigma) = d_{n-i+1} Q(tau) exactly when
    sigma is the i-th Coxeter-Knuth move of tau, and likewise the weak
    recording tableaux are related by the weak d_i exactly then.
    """
    sigma, tau = tuple(sigma), tuple(tau)
    n = len(tau)
    is_move = sigma == ck_involution(tau, i)
    Q_s, Q_t = eg_correspondence(sigma).recording, eg_correspondence(tau).recording
    W_s, W_t = weak_correspondence(sigma).recording, weak_correspondence(tau).recording
    strong = (Q_s == dual_equivalence(Q_t, n - i + 1)) == is_move
    weak = (W_s == weak_dual_equivalence(W_t, i)) == is_move
    return strong and weak
