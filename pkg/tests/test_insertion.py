from __future__ import annotations

from collections import Counter

import pytest
from hypothesis import given

from schubkey.coxeter_knuth import ck_classes, ck_edges, ck_involution
from schubkey.droplift import drop_full, drop_tableau, is_yamanouchi, lift_canonical
from schubkey.expansions import increasing_tableaux, yamanouchi_words
from schubkey.insertion import (
    eg_correspondence,
    eg_insert,
    recording_equivariance_check,
    weak_correspondence,
    weak_insert,
)
from schubkey.permutations import all_permutations, enumerate_reduced_words, last_descent
from schubkey.tableaux import (
    KeyTableau,
    Tableau,
    dual_equivalence,
    enumerate_skt,
    enumerate_syt,
    is_standard_key_tableau,
    phi,
    skt_weak_descent_composition,
    syt_descent_composition,
    weak_dual_equivalence,
)
from schubkey.wordstats import descent_composition, weak_descent_composition, weak_descent_tableau
from support import reduced_words, top

RHO = (3, 6, 4, 7, 5, 2, 4)
K = KeyTableau

EG_INSERTION_STEPS = [
    top((3,)),
    top((3, 6)),
    top((6,), (3, 4)),
    top((6,), (3, 4, 7)),
    top((6, 7), (3, 4, 5)),
    top((6,), (3, 7), (2, 4, 5)),
    top((6, 7), (3, 5), (2, 4, 5)),
]
EG_RECORDING_STEPS = [
    top((1,)),
    top((1, 2)),
    top((3,), (1, 2)),
    top((3,), (1, 2, 4)),
    top((3, 5), (1, 2, 4)),
    top((6,), (3, 5), (1, 2, 4)),
    top((6, 7), (3, 5), (1, 2, 4)),
]
WEAK_INSERTION_STEPS = [
    K({3: (3,)}),
    K({3: (3, 6)}),
    K({6: (6,), 3: (3, 4)}),
    K({6: (6,), 3: (3, 4, 7)}),
    K({6: (6, 7), 3: (3, 4, 5)}),
    K({6: (6, 7), 3: (3, 4, 5), 2: (2,)}),
    K({6: (6, 7), 3: (3, 4, 5), 2: (2, 4)}),
]
WEAK_RECORDING_STEPS = [
    K({3: (7,)}),
    K({3: (7, 6)}),
    K({6: (5,), 3: (7, 6)}),
    K({6: (5,), 3: (7, 6, 4)}),
    K({6: (5, 3), 3: (7, 6, 4)}),
    K({6: (5, 3), 3: (7, 6, 4), 2: (2,)}),
    K({6: (5, 3), 3: (7, 6, 4), 2: (2, 1)}),
]


def test_eg_insert_examples():
    assert eg_insert(top((6,), (3, 7), (2, 4, 5)), 4)[0] == top((6, 7), (3, 5), (2, 4, 5))
    assert eg_insert(top((6, 7), (3, 4, 5)), 2)[0] == top((6,), (3, 7), (2, 4, 5))
    assert eg_insert(Tableau([]), 5) == (top((5,)), 1)
    # x and x+1 in the same row: x+1 is passed on and the row is unchanged
    assert eg_insert(top((2, 3)), 2)[0] == top((3,), (2, 3))


def test_eg_insertion_trace():
    res = eg_correspondence(RHO)
    assert [P for P, _ in res.trace] == EG_INSERTION_STEPS
    assert [Q for _, Q in res.trace] == EG_RECORDING_STEPS
    assert res.insertion == EG_INSERTION_STEPS[-1] and res.recording == EG_RECORDING_STEPS[-1]


def test_weak_insertion_trace():
    res = weak_correspondence(RHO)
    assert [P for P, _ in res.trace] == WEAK_INSERTION_STEPS
    assert [Q for _, Q in res.trace] == WEAK_RECORDING_STEPS


def test_weak_insert_steps():
    assert weak_insert(K({3: (3, 4, 7), 6: (6,)}), 5) == K({3: (3, 4, 5), 6: (6, 7)})
    assert weak_insert(K({}), 3) == K({3: (3,)})
    assert weak_insert(K({2: (2,), 3: (3, 4, 5), 6: (6, 7)}), 4) == K({2: (2, 4), 3: (3, 4, 5), 6: (6, 7)})


def test_empty_word():
    e = eg_correspondence(())
    assert e.insertion == Tableau([]) and e.recording == Tableau([])
    t = weak_correspondence(())
    assert t.insertion == K({}) and t.recording == K({})


@pytest.mark.parametrize("n", range(1, 6))
def test_eg_bijection(n):
    for w in all_permutations(n):
        words = enumerate_reduced_words(w)
        pairs = {}
        for rho in words:
            res = eg_correspondence(rho)
            P, Q = res.insertion, res.recording
            assert P.is_increasing() and Q.is_standard() and P.shape == Q.shape
            # Q numbers letters from the left, so its runs come out reversed
            assert syt_descent_composition(Q) == descent_composition(rho)[::-1]
            assert (P, Q) not in pairs
            pairs[(P, Q)] = rho
        incs = increasing_tableaux(w)
        assert {P for P, _ in pairs} == set(incs)
        assert len(pairs) == sum(len(enumerate_syt(P.shape)) for P in incs)


@pytest.mark.parametrize("n", range(1, 6))
def test_weak_bijection(n):
    for w in all_permutations(n):
        d = last_descent(w)
        pairs = set()
        yams = set(yamanouchi_words(w))
        for rho in enumerate_reduced_words(w):
            res = weak_correspondence(rho)
            P, Q = res.insertion, res.recording
            y = P.reading_word()
            assert y in yams and P == weak_descent_tableau(y)
            assert is_standard_key_tableau(Q)
            assert Q.shape(d) == weak_descent_composition(y, d)
            assert skt_weak_descent_composition(Q, d) == weak_descent_composition(rho, d)
            assert (P, Q) not in pairs
            pairs.add((P, Q))
        assert len(pairs) == sum(len(enumerate_skt(weak_descent_composition(y, d))) for y in yams)


@pytest.mark.parametrize("n", range(1, 6))
def test_classes_are_insertion_fibers(n):
    for w in all_permutations(n):
        for cls in ck_classes(w):
            Ps = {eg_correspondence(r).insertion for r in cls}
            Pts = {weak_correspondence(r).insertion for r in cls}
            assert len(Ps) == 1 and len(Pts) == 1
            (P,) = Ps
            (Pt,) = Pts
            assert P.reading_word() == drop_full(next(iter(cls)))
            assert Pt.reading_word() == lift_canonical(drop_tableau(P.reading_word())).reading_word()
            assert is_yamanouchi(Pt.reading_word())


@pytest.mark.parametrize("n", range(3, 6))
def test_recording_equivariance(n):
    """d_i on words matches the dual equivalences on both recording tableaux."""
    for w in all_permutations(n):
        words = enumerate_reduced_words(w)
        rec = {r: (eg_correspondence(r).recording, weak_correspondence(r).recording) for r in words}
        for rho, (Q, Qt) in rec.items():
            k = len(rho)
            assert phi(Qt).shape == Q.shape
            for i in range(2, k):
                S, St = rec[ck_involution(rho, i)]
                assert S == dual_equivalence(Q, k - i + 1)
                assert St == weak_dual_equivalence(Qt, i)


def test_edges_of_153264_pass_equivariance():
    for cls in ck_classes((1, 5, 3, 2, 6, 4)):
        for u, i, v in ck_edges(cls):
            assert recording_equivariance_check(u, v, i)


@given(reduced_words(max_rank=6))
def test_weak_shapes_grow_one_cell(wr):
    _, rho = wr
    trace = weak_correspondence(rho).trace
    prev = Counter()
    for P, _ in trace:
        cur = Counter({i: len(P.row(i)) for i in P.row_indices})
        grown = [i for i in cur if cur[i] != prev.get(i, 0)]
        assert len(grown) == 1 and cur[grown[0]] == prev.get(grown[0], 0) + 1
        assert all(cur[i] >= prev[i] for i in prev)
        prev = cur


@given(reduced_words(max_rank=7))
def test_weak_recording_des_matches(wr):
    w, rho = wr
    d = last_descent(w)
    Qt = weak_correspondence(rho).recording
    assert skt_weak_descent_composition(Qt, d) == weak_descent_composition(rho, d)


@given(reduced_words(max_rank=7))
def test_recording_check_on_random_words(wr):
    _, rho = wr
    for i in range(2, len(rho)):
        assert recording_equivariance_check(rho, ck_involution(rho, i), i)
