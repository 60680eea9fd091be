"""Exhaustive checks of the three expansion identities over a symmetric group.

A  Stanley function equals the sum of Schur functions over increasing words.
B  Schubert polynomial equals the sum of key polynomials over Yamanouchi words.
C  Schubert polynomial from reduced words equals the divided difference oracle.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from typing import Iterable

from .formats import format_composition, format_permutation, format_word
from .permutations import all_permutations, iter_reduced_words, length
from .expansions import (
    demazure_expansion,
    fundamental_expansion,
    key_slide_expansion,
    key_sum,
    schubert,
    schubert_oracle,
    schur_expansion,
    schur_fundamental_expansion,
    schur_sum,
    slide_expansion,
    stanley_function,
)

IDENTITIES = ("A", "B", "C")

# Stanley polynomials in l(w)+1 variables are materialized up to this length by
# default; past it the fundamental-basis comparison decides, which is
# equivalent since the F_alpha of a given degree d are independent in d or
# more variables.
POLY_LENGTH_LIMIT = 6


def _counter_diff(lhs, rhs) -> dict:
    keys = sorted(set(lhs) | set(rhs), key=lambda a: (len(a), a))
    return {format_composition(k): [lhs.get(k, 0), rhs.get(k, 0)] for k in keys if lhs.get(k, 0) != rhs.get(k, 0)}


def check(identity: str, w: tuple[int, ...], poly_limit: int = POLY_LENGTH_LIMIT) -> dict:
    rec = {"identity": identity, "rank": len(w), "permutation": format_permutation(w)}
    witness = None
    if identity == "A":
        schurs = schur_expansion(w)
        lhs, rhs = fundamental_expansion(w), schur_fundamental_expansion(schurs)
        if lhs != rhs:
            witness = {"fundamental": _counter_diff(lhs, rhs)}
        elif length(w) <= poly_limit:
            m = length(w) + 1
            diff = stanley_function(w, m) - schur_sum(schurs, m)
            if diff:
                witness = {"difference": diff.to_json()}
    elif identity == "B":
        keys = demazure_expansion(w)
        lhs, rhs = slide_expansion(w), key_slide_expansion(keys)
        if lhs != rhs:
            witness = {"slide": _counter_diff(lhs, rhs)}
        else:
            diff = schubert(w) - key_sum(keys)
            if diff:
                witness = {"difference": diff.to_json()}
    elif identity == "C":
        diff = schubert(w) - schubert_oracle(w)
        if diff:
            witness = {"difference": diff.to_json()}
    else:
        raise ValueError(f"unknown identity {identity!r}")
    rec["status"] = "pass" if witness is None else "fail"
    if witness is not None:
        witness["word"] = format_word(next(iter_reduced_words(w)))
        rec["witness"] = witness
    return rec


def _task(args):
    return check(*args)


def run(
    max_rank: int, identities: Iterable[str] = IDENTITIES, jobs: int = 1, poly_limit: int = POLY_LENGTH_LIMIT
) -> list[dict]:
    """Check every identity for every permutation of rank 1..max_rank."""
    identities = list(identities)
    for ident in identities:
        if ident not in IDENTITIES:
            raise ValueError(f"unknown identity {ident!r}")
    tasks = [(ident, w, poly_limit) for ident in identities for n in range(1, max_rank + 1) for w in all_permutations(n)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_task, tasks, chunksize=16))
    return [_task(t) for t in tasks]
