from __future__ import annotations

from hypothesis import given

from schubkey.compositions import VIRTUAL, flat
from schubkey.tableaux import KeyTableau, Tableau
from schubkey.wordstats import (
    descent_composition,
    descent_tableau,
    run_decomposition,
    weak_descent_composition,
    weak_descent_tableau,
)
from support import reduced_words

RHO = (3, 6, 4, 7, 5, 2, 4)
SIGMA = (6, 7, 3, 4, 5, 2, 4)


def test_runs():
    assert run_decomposition(RHO) == ((3, 6), (4, 7), (5,), (2, 4))
    assert run_decomposition(SIGMA) == ((6, 7), (3, 4, 5), (2, 4))
    assert run_decomposition((1, 2, 5)) == ((1, 2, 5),)
    assert run_decomposition(()) == ()


def test_descent_composition():
    assert descent_composition(RHO) == (2, 1, 2, 2)
    assert descent_composition(SIGMA) == (2, 3, 2)
    assert descent_composition((1, 3, 4, 6)) == (4,)


def test_descent_tableau():
    assert descent_tableau(RHO) == Tableau([(2, 4), (5,), (4, 7), (3, 6)])
    assert descent_tableau(SIGMA) == Tableau([(2, 4), (3, 4, 5), (6, 7)])
    assert descent_tableau((3,)) == Tableau([(3,)])


def test_weak_descent_composition():
    assert weak_descent_composition(RHO) is VIRTUAL
    assert weak_descent_composition(SIGMA) == (0, 2, 3, 0, 0, 2)
    assert weak_descent_composition((3, 4, 6)) == (0, 0, 3)
    assert weak_descent_composition(SIGMA, 8) == (0, 2, 3, 0, 0, 2, 0, 0)


def test_weak_descent_tableau():
    T = weak_descent_tableau(RHO)
    assert T == KeyTableau({3: (3, 6), 2: (4, 7), 1: (5,), 0: (2, 4)})
    assert T.is_virtual
    S = weak_descent_tableau(SIGMA)
    assert S == KeyTableau({2: (2, 4), 3: (3, 4, 5), 6: (6, 7)})
    assert not S.is_virtual
    assert weak_descent_tableau((4,)) == KeyTableau({4: (4,)})


@given(reduced_words())
def test_flat_des_is_Des(wr):
    _, rho = wr
    d = weak_descent_composition(rho)
    if d is not VIRTUAL:
        assert flat(d) == descent_composition(rho)


@given(reduced_words())
def test_weak_tableau_rows(wr):
    _, rho = wr
    d = weak_descent_composition(rho)
    T = weak_descent_tableau(rho)
    assert T.is_virtual == (d is VIRTUAL)
    if d is not VIRTUAL:
        assert T.shape(len(d)) == d


@given(reduced_words())
def test_descent_tableau_rows_are_runs(wr):
    _, rho = wr
    runs = run_decomposition(rho)
    T = descent_tableau(rho)
    for i, run in enumerate(reversed(runs), 1):
        assert T.row(i) == run
    assert T.reading_word() == rho
