"""Reduced words, Coxeter-Knuth classes, and the Schur and key expansions of
Stanley symmetric functions and Schubert polynomials."""

from .compositions import VIRTUAL, dominates, flat, pad, refines
from .coxeter_knuth import ck_class, ck_classes, ck_edges, ck_involution
from .droplift import (
    drop_full,
    drop_i,
    drop_pair,
    drop_rows,
    drop_tableau,
    is_yamanouchi,
    lift_canonical,
    lift_i,
    lift_pair,
)
from .expansions import (
    demazure_expansion,
    fundamental_expansion,
    increasing_tableaux,
    schubert,
    schubert_oracle,
    schur_expansion,
    slide_expansion,
    stanley_function,
    yamanouchi_words,
)
from .insertion import eg_correspondence, eg_insert, weak_correspondence, weak_insert
from .permutations import (
    apply_word,
    braid,
    commutation,
    count_reduced_words,
    descents,
    enumerate_reduced_words,
    is_reduced,
    length,
)
from .polynomial import Polynomial, divided_difference, fundamental_qsym, fundamental_slide
from .tableaux import (
    KeyTableau,
    Tableau,
    dual_equivalence,
    enumerate_skt,
    enumerate_syt,
    key_polynomial,
    phi,
    schur,
    weak_dual_equivalence,
)
from .wordstats import descent_composition, descent_tableau, weak_descent_composition, weak_descent_tableau

__all__ = [
    "apply_word",
    "braid",
    "ck_class",
    "ck_classes",
    "ck_edges",
    "ck_involution",
    "commutation",
    "count_reduced_words",
    "demazure_expansion",
    "descent_composition",
    "descent_tableau",
    "descents",
    "divided_difference",
    "dominates",
    "drop_full",
    "drop_i",
    "drop_pair",
    "drop_rows",
    "drop_tableau",
    "dual_equivalence",
    "eg_correspondence",
    "eg_insert",
    "enumerate_reduced_words",
    "enumerate_skt",
    "enumerate_syt",
    "flat",
    "fundamental_expansion",
    "fundamental_qsym",
    "fundamental_slide",
    "increasing_tableaux",
    "is_reduced",
    "is_yamanouchi",
    "key_polynomial",
    "KeyTableau",
    "length",
    "lift_canonical",
    "lift_i",
    "lift_pair",
    "pad",
    "phi",
    "Polynomial",
    "refines",
    "schubert",
    "schubert_oracle",
    "schur",
    "schur_expansion",
    "slide_expansion",
    "stanley_function",
    "Tableau",
    "VIRTUAL",
    "weak_correspondence",
    "weak_descent_composition",
    "weak_descent_tableau",
    "weak_dual_equivalence",
    "weak_insert",
    "yamanouchi_words",
]

__version__ = "0.1.0"
