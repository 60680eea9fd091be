"""Acceptance suite: twelve criteria, one PASS/FAIL line each.

Every comparison is exact. Run under pytest, or directly with
``python3 tests/test_acceptance.py`` to get just the criterion lines.
"""

from __future__ import annotations

import contextlib
import io
from collections import Counter

import pytest

from schubkey.cli import main
from schubkey.compositions import VIRTUAL, flat, sort_partition
from schubkey.coxeter_knuth import ck_classes
from schubkey.droplift import (
    drop_graph,
    drop_i,
    is_yamanouchi,
    is_yamanouchi_by_scan,
    lift_canonical,
    lift_graph,
    lift_i,
    lift_path,
)
from schubkey.expansions import (
    demazure_expansion,
    fundamental_expansion,
    increasing_tableaux,
    key_slide_expansion,
    key_sum,
    schubert,
    schubert_oracle,
    schur_expansion,
    schur_fundamental_expansion,
    schur_sum,
    slide_expansion,
    stanley_function,
    yamanouchi_words,
)
from schubkey.insertion import eg_correspondence, weak_correspondence
from schubkey.permutations import all_permutations, enumerate_reduced_words, last_descent, length
from schubkey.polynomial import Polynomial, fundamental_qsym, fundamental_slide
from schubkey.tableaux import (
    KeyTableau,
    dual_equivalence,
    enumerate_skt,
    is_standard_key_tableau,
    key_polynomial,
    phi,
    schur,
    skt_weak_descent_composition,
    syt_descent_composition,
    weak_dual_equivalence,
)
from schubkey.verify import check
from schubkey.wordstats import descent_composition, descent_tableau, weak_descent_composition, weak_descent_tableau
from support import ACCEPTANCE_LINES, top

K = KeyTableau
W6 = (1, 5, 3, 2, 6, 4)
W8 = (1, 3, 6, 2, 5, 8, 4, 7)
RHO = (3, 6, 4, 7, 5, 2, 4)
SIGMA = (6, 7, 3, 4, 5, 2, 4)


def slide_sum(terms):
    return sum((c * fundamental_slide(a) for a, c in terms.items()), Polynomial.zero())


# -- 1 ---------------------------------------------------------------------------------------


def criterion_1():
    words = {
        (2, 3, 2, 5, 4), (2, 3, 5, 2, 4), (2, 3, 5, 4, 2), (2, 5, 3, 2, 4), (2, 5, 3, 4, 2), (3, 2, 3, 5, 4),
        (3, 2, 5, 3, 4), (3, 5, 2, 3, 4), (5, 2, 3, 2, 4), (5, 2, 3, 4, 2), (5, 3, 2, 3, 4),
    }
    assert set(enumerate_reduced_words(W6)) == words
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        assert main(["words", "153264"]) == 0
    printed = {tuple(int(x) for x in line.strip("()").split(",")) for line in buf.getvalue().split()}
    assert printed == words


# -- 2 ---------------------------------------------------------------------------------------


def criterion_2():
    assert descent_composition(RHO) == (2, 1, 2, 2)
    assert descent_composition(SIGMA) == (2, 3, 2)
    assert weak_descent_composition(RHO) is VIRTUAL
    assert weak_descent_composition(SIGMA) == (0, 2, 3, 0, 0, 2)
    assert descent_tableau(RHO) == top((3, 6), (4, 7), (5,), (2, 4))
    assert descent_tableau(SIGMA) == top((6, 7), (3, 4, 5), (2, 4))
    T = weak_descent_tableau(RHO)
    assert T == K({3: (3, 6), 2: (4, 7), 1: (5,), 0: (2, 4)}) and T.is_virtual
    assert weak_descent_tableau(SIGMA) == K({6: (6, 7), 3: (3, 4, 5), 2: (2, 4)})


# -- 3 ---------------------------------------------------------------------------------------

SLIDES_153264 = Counter(
    {
        (0, 3, 1, 0, 1): 1, (2, 2, 0, 0, 1): 1, (1, 3, 0, 0, 1): 1, (0, 3, 2, 0, 0): 1,
        (2, 2, 1, 0, 0): 1, (1, 3, 1, 0, 0): 1, (2, 3, 0, 0, 0): 1,
    }
)


def criterion_3():
    f = schubert(W6)
    assert slide_expansion(W6) == SLIDES_153264
    assert f == slide_sum(SLIDES_153264)
    assert f == key_polynomial((0, 3, 1, 0, 1)) + key_polynomial((0, 3, 2, 0, 0))
    assert f == schubert_oracle(W6)


# -- 4 ---------------------------------------------------------------------------------------


def criterion_4():
    assert schur_expansion(W6) == Counter({(3, 2): 1, (3, 1, 1): 1})
    assert stanley_function(W6, 6) == schur((3, 2), 6) + schur((3, 1, 1), 6)


# -- 5 ---------------------------------------------------------------------------------------

SKT_0302 = {
    K({4: (5, 4), 2: (3, 2, 1)}): (0, 3, 0, 2),
    K({4: (5, 3), 2: (4, 2, 1)}): (2, 2, 0, 1),
    K({4: (5, 1), 2: (4, 3, 2)}): (1, 3, 0, 1),
    K({4: (3, 1), 2: (5, 4, 2)}): VIRTUAL,
    K({4: (2, 1), 2: (5, 4, 3)}): (2, 3, 0, 0),
}


def criterion_5():
    skts = enumerate_skt((0, 3, 0, 2))
    assert len(skts) == 5 and set(skts) == set(SKT_0302)
    assert all(is_standard_key_tableau(T) for T in skts)
    assert {T: skt_weak_descent_composition(T, 4) for T in skts} == SKT_0302
    terms = [d for d in SKT_0302.values() if d is not VIRTUAL]
    assert len(terms) == 4
    assert key_polynomial((0, 3, 0, 2)) == slide_sum(Counter(terms))


# -- 6 ---------------------------------------------------------------------------------------

INCREASING_13625847 = {
    top((6,), (5,), (3, 7), (2, 4, 5)),
    top((6, 7), (3, 5), (2, 4, 5)),
    top((6,), (3, 5, 7), (2, 4, 5)),
    top((6,), (5,), (3,), (2, 4, 5, 7)),
    top((6,), (3, 5), (2, 4, 5, 7)),
}
YAMANOUCHI_13625847 = {
    K({6: (6, 7), 5: (5,), 3: (3, 4, 5), 2: (2,)}),
    K({6: (6, 7), 3: (3, 4, 5), 2: (2, 4)}),
    K({6: (6,), 3: (3, 5, 7), 2: (2, 4, 5)}),
    K({6: (6,), 5: (5,), 3: (3, 4, 5, 7), 2: (2,)}),
    K({6: (6,), 3: (3, 4, 5, 7), 2: (2, 4)}),
}


def criterion_6():
    assert schur_expansion(W8) == Counter(
        {(3, 2, 1, 1): 1, (3, 2, 2): 1, (3, 3, 1): 1, (4, 1, 1, 1): 1, (4, 2, 1): 1}
    )
    keys = Counter(
        {
            (0, 1, 3, 0, 1, 2): 1, (0, 2, 3, 0, 0, 2): 1, (0, 3, 3, 0, 0, 1): 1,
            (0, 1, 4, 0, 1, 1): 1, (0, 2, 4, 0, 0, 1): 1,
        }
    )
    assert demazure_expansion(W8) == keys
    assert set(increasing_tableaux(W8)) == INCREASING_13625847
    assert {weak_descent_tableau(y) for y in yamanouchi_words(W8)} == YAMANOUCHI_13625847


# -- 7 ---------------------------------------------------------------------------------------

T02 = top((3, 6), (4, 7), (5,), (2, 4))
T13 = top((3, 6), (7,), (4, 5), (2, 4))
T11 = top((6,), (3, 4, 7), (5,), (2, 4))
T23 = top((), (3, 6, 7), (4, 5), (2, 4))
T21 = top((6,), (7,), (3, 4, 5), (2, 4))
T32 = top((), (6, 7), (3, 4, 5), (2, 4))
T30 = top((6,), (7,), (3, 5), (2, 4, 5))
T41 = top((), (6, 7), (3, 5), (2, 4, 5))
DROP_DIAMOND = {
    (T02, 2, T13), (T02, 3, T11), (T13, 3, T23), (T11, 2, T21), (T23, 2, T32),
    (T21, 3, T32), (T21, 1, T30), (T32, 1, T41), (T30, 3, T41),
}


def criterion_7():
    nodes, edges = drop_graph(descent_tableau(RHO))
    assert set(edges) == DROP_DIAMOND
    sinks = {T for T in nodes if all(drop_i(T, i) == T for i in range(1, len(T.rows)))}
    assert sinks == {T41}
    assert T41.strip() == eg_correspondence(RHO).insertion


# -- 8 ---------------------------------------------------------------------------------------

A1 = top((6, 9), (3, 7, 8), (2, 3, 5, 9), (1, 2, 4, 5, 6))
B0 = top((6, 9), (3, 7, 8), (2, 3, 4, 5, 9), (1, 2, 4, 6))
B1 = top((6, 9), (3, 7, 8, 9), (2, 3, 5), (1, 2, 4, 5, 6))
B2 = top((6, 7, 9), (3, 8), (2, 3, 5, 9), (1, 2, 4, 5, 6))
C0 = top((6, 9), (3, 7, 8, 9), (2, 3, 4, 5, 6), (1, 2, 4))
C1 = top((6, 7, 9), (3, 8), (2, 3, 4, 5, 9), (1, 2, 4, 6))
C2 = top((6, 7, 8, 9), (3, 8), (2, 3, 5), (1, 2, 4, 5, 6))
D1 = top((6, 7, 8, 9), (3, 8), (2, 3, 4, 5, 6), (1, 2, 4))
LIFT_GRAPH_EDGES = {
    (A1, 1, B0), (A1, 2, B1), (A1, 3, B2), (B1, 1, C0), (B2, 1, C1),
    (B0, 3, C1), (B1, 3, C2), (C2, 1, D1), (C0, 3, D1),
}


def criterion_8():
    nodes, edges = lift_graph(A1)
    assert set(nodes) == {A1, B0, B1, B2, C0, C1, C2, D1}
    assert set(edges) == LIFT_GRAPH_EDGES

    def lift(*idx):
        T = A1
        for i in reversed(idx):
            T = lift_i(T, i)
        return T

    assert lift(1, 2, 1) == lift(1) != lift(1, 2) == lift(2, 1, 2)
    assert lift(1, 3, 2) == D1 == lift_canonical(A1)
    assert lift_path(A1)[-1][2] == D1
    assert is_yamanouchi(D1.reading_word())


# -- 9 ---------------------------------------------------------------------------------------


def criterion_9():
    eg = eg_correspondence(RHO)
    assert [P for P, _ in eg.trace] == [
        top((3,)), top((3, 6)), top((6,), (3, 4)), top((6,), (3, 4, 7)), top((6, 7), (3, 4, 5)),
        top((6,), (3, 7), (2, 4, 5)), top((6, 7), (3, 5), (2, 4, 5)),
    ]
    assert [Q for _, Q in eg.trace] == [
        top((1,)), top((1, 2)), top((3,), (1, 2)), top((3,), (1, 2, 4)), top((3, 5), (1, 2, 4)),
        top((6,), (3, 5), (1, 2, 4)), top((6, 7), (3, 5), (1, 2, 4)),
    ]
    weak = weak_correspondence(RHO)
    assert [P for P, _ in weak.trace] == [
        K({3: (3,)}), K({3: (3, 6)}), K({6: (6,), 3: (3, 4)}), K({6: (6,), 3: (3, 4, 7)}),
        K({6: (6, 7), 3: (3, 4, 5)}), K({6: (6, 7), 3: (3, 4, 5), 2: (2,)}),
        K({6: (6, 7), 3: (3, 4, 5), 2: (2, 4)}),
    ]
    assert [Q for _, Q in weak.trace] == [
        K({3: (7,)}), K({3: (7, 6)}), K({6: (5,), 3: (7, 6)}), K({6: (5,), 3: (7, 6, 4)}),
        K({6: (5, 3), 3: (7, 6, 4)}), K({6: (5, 3), 3: (7, 6, 4), 2: (2,)}),
        K({6: (5, 3), 3: (7, 6, 4), 2: (2, 1)}),
    ]


# -- 10 --------------------------------------------------------------------------------------


def _identities(w):
    # A: coefficientwise in F, and as polynomials in l(w)+1 variables
    schurs = schur_expansion(w)
    assert fundamental_expansion(w) == schur_fundamental_expansion(schurs)
    m = length(w) + 1
    assert stanley_function(w, m) == schur_sum(schurs, m)
    assert check("A", w, poly_limit=99)["status"] == "pass"
    # B
    keys = demazure_expansion(w)
    assert slide_expansion(w) == key_slide_expansion(keys)
    assert schubert(w) == key_sum(keys)


def _classes_and_correspondences(w, skt_shapes):
    d = last_descent(w)
    words = enumerate_reduced_words(w)
    eg, weak = {}, {}
    for rho in words:
        e, t = eg_correspondence(rho), weak_correspondence(rho)
        eg[rho], weak[rho] = (e.insertion, e.recording), (t.insertion, t.recording)
        P, Q = eg[rho]
        Pt, Qt = weak[rho]
        assert P.is_increasing() and Q.is_standard() and P.shape == Q.shape
        assert syt_descent_composition(Q) == descent_composition(rho)[::-1]
        assert is_standard_key_tableau(Qt)
        assert skt_weak_descent_composition(Qt, d) == weak_descent_composition(rho, d)
        skt_shapes.add(Qt.shape(d))
    assert len(set(eg.values())) == len(words) == len(set(weak.values()))
    classes = ck_classes(w)
    eg_fibers, weak_fibers = {}, {}
    for rho in words:
        eg_fibers.setdefault(eg[rho][0], set()).add(rho)
        weak_fibers.setdefault(weak[rho][0], set()).add(rho)
    as_sets = sorted(map(sorted, classes))
    assert sorted(map(sorted, eg_fibers.values())) == as_sets
    assert sorted(map(sorted, weak_fibers.values())) == as_sets
    return words


def _nil_hecke(rho):
    T = descent_tableau(rho)
    k = len(T.rows)
    d = drop_i
    for i in range(1, k):
        assert d(d(T, i), i) == d(T, i)
        for j in range(i + 2, k):
            assert d(d(T, i), j) == d(d(T, j), i)
        if i + 1 < k:
            assert d(d(d(T, i), i + 1), i) == d(d(d(T, i + 1), i), i + 1)


def criterion_10():
    skt_shapes = set()
    for n in range(1, 6):
        for w in all_permutations(n):
            _identities(w)
            for rho in _classes_and_correspondences(w, skt_shapes):
                _nil_hecke(rho)
                assert is_yamanouchi(rho) == is_yamanouchi_by_scan(rho)
    for a in skt_shapes:
        n = sum(a)
        for T in enumerate_skt(a):
            for i in range(2, n):
                assert phi(weak_dual_equivalence(T, i)) == dual_equivalence(phi(T), n - i + 1)


# -- 11 --------------------------------------------------------------------------------------


def criterion_11():
    perms = all_permutations(6)
    assert len(perms) == 720
    for w in perms:
        assert schubert(w) == schubert_oracle(w)


# -- 12 --------------------------------------------------------------------------------------


def criterion_12():
    for a in ((0, 3, 0, 2), (3, 0, 2)):
        for m in (1, 2, 3):
            for poly, target in (
                (fundamental_slide, fundamental_qsym(flat(a), m)),
                (key_polynomial, schur(sort_partition(a), m)),
            ):
                f = poly((0,) * m + a)
                g = poly((0,) * (m - 1) + a)
                assert {(0,) + e for e, _ in g.items()} <= {e for e, _ in f.items()}
                assert f.truncate(m) == target


CRITERIA = {n: globals()[f"criterion_{n}"] for n in range(1, 13)}


@pytest.mark.parametrize("n", sorted(CRITERIA))
def test_criterion(n):
    try:
        CRITERIA[n]()
    except Exception:
        line = f"criterion {n}: FAIL"
        print(line)
        ACCEPTANCE_LINES.append(line)
        raise
    line = f"criterion {n}: PASS"
    print(line)
    ACCEPTANCE_LINES.append(line)


if __name__ == "__main__":
    import sys

    failed = 0
    for n, fn in CRITERIA.items():
        try:
            fn()
            print(f"criterion {n}: PASS")
        except Exception as e:
            failed += 1
            print(f"criterion {n}: FAIL ({type(e).__name__}: {e})")
    sys.exit(1 if failed else 0)
