"""Command line interface.

Exit status is 0 on success, 1 when ``verify`` finds a failing identity and
2 for malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import verify as verify_mod
from .compositions import VIRTUAL
from .coxeter_knuth import ck_classes
from .droplift import drop_graph, drop_i, drop_rows, lift_canonical, lift_graph, lift_path
from .expansions import (
    demazure_expansion,
    fundamental_expansion,
    schubert,
    schur_expansion,
    slide_expansion,
    stanley_function,
    yamanouchi_words,
)
from .formats import (
    format_composition,
    format_permutation,
    format_word,
    parse_permutation,
    parse_word,
    tableau_to_json,
    tableau_to_latex,
    tableau_to_text,
)
from .insertion import eg_correspondence, weak_correspondence
from .permutations import enumerate_reduced_words, is_reduced, last_descent
from .wordstats import descent_tableau, weak_descent_composition


class UsageError(Exception):
    pass


def _word_arg(s: str) -> tuple[int, ...]:
    rho = parse_word(s)
    if not is_reduced(rho):
        raise UsageError(f"{format_word(rho)} is not a reduced word")
    return rho


def _sorted_counter(c):
    return sorted(c.items(), key=lambda kv: (tuple(-x for x in kv[0]) if kv[0] is not VIRTUAL else ()))


def _emit(args, data, text: str, latex: str | None = None):
    if args.format == "json":
        print(json.dumps(data, indent=2))
    elif args.format == "latex":
        print(latex if latex is not None else text)
    else:
        print(text)


def _tab(T, fmt):
    if fmt == "json":
        return tableau_to_json(T)
    if fmt == "latex":
        return tableau_to_latex(T)
    return tableau_to_text(T)


# -- subcommands -----------------------------------------------------------------


def cmd_words(args):
    w = parse_permutation(args.permutation)
    words = enumerate_reduced_words(w)
    data = {"permutation": format_permutation(w), "words": [format_word(r) for r in words]}
    _emit(args, data, "\n".join(map(format_word, words)), "\n".join(f"${format_word(r)}$" for r in words))


def cmd_classes(args):
    w = parse_permutation(args.permutation)
    d = last_descent(w)
    out = []
    for cls in ck_classes(w):
        words = sorted(cls)
        P = drop_rows(descent_tableau(words[0]))
        y = lift_canonical(P).reading_word()
        out.append(
            {
                "schur": list(P.shape),
                "demazure": list(weak_descent_composition(y, d)),
                "increasing": format_word(P.reading_word()),
                "yamanouchi": format_word(y),
                "words": [format_word(r) for r in words],
            }
        )
    lines = []
    for k, c in enumerate(out, 1):
        lines.append(
            f"class {k}: schur {format_composition(c['schur'])}  demazure {format_composition(c['demazure'])}"
            f"  size {len(c['words'])}"
        )
        lines += ["  " + r for r in c["words"]]
    latex = "\n".join(f"s_{{{format_composition(c['schur'])}}} \\quad \\kappa_{{{format_composition(c['demazure'])}}}" for c in out)
    _emit(args, {"permutation": format_permutation(w), "classes": out}, "\n".join(lines), latex)


def cmd_drop(args):
    rho = _word_arg(args.word)
    start = descent_tableau(rho)
    if args.graph:
        nodes, edges = drop_graph(start)
        index = {T: k for k, T in enumerate(nodes)}
        data = {
            "nodes": [tableau_to_json(T) for T in nodes],
            "edges": [{"from": index[u], "drop": i, "to": index[v]} for u, i, v in edges],
        }
        text = "\n\n".join(f"[{k}]\n{tableau_to_text(T)}" for k, T in enumerate(nodes))
        text += "\n\n" + "\n".join(f"[{index[u]}] --drop_{i}--> [{index[v]}]" for u, i, v in edges)
        _emit(args, data, text, "\n".join(tableau_to_latex(T) for T in nodes))
        return
    chain = [(None, start)]
    T = start
    while True:
        for i in range(1, len(T.rows)):
            S = drop_i(T, i)
            if S != T:
                chain.append((i, S))
                T = S
                break
        else:
            break
    data = {"steps": [{"drop": i, "tableau": tableau_to_json(S)} for i, S in chain], "word": format_word(T.reading_word())}
    text = "\n\n".join((f"drop_{i}\n" if i else "start\n") + tableau_to_text(S) for i, S in chain)
    latex = " \\to ".join(tableau_to_latex(S) for _, S in chain)
    _emit(args, data, text, latex)


def cmd_lift(args):
    rho = _word_arg(args.word)
    P = drop_rows(descent_tableau(rho))
    if args.graph:
        nodes, edges = lift_graph(P)
        index = {T: k for k, T in enumerate(nodes)}
        data = {
            "nodes": [tableau_to_json(T) for T in nodes],
            "edges": [{"from": index[u], "lift": i, "to": index[v]} for u, i, v in edges],
        }
        text = "\n\n".join(f"[{k}]\n{tableau_to_text(T)}" for k, T in enumerate(nodes))
        text += "\n\n" + "\n".join(f"[{index[u]}] --lift_{i}--> [{index[v]}]" for u, i, v in edges)
        _emit(args, data, text, "\n".join(tableau_to_latex(T) for T in nodes))
        return
    steps = lift_path(P)
    final = steps[-1][2] if steps else P
    y = final.reading_word()
    data = {
        "start": tableau_to_json(P),
        "steps": [{"lift": [i, j], "tableau": tableau_to_json(S)} for i, j, S in steps],
        "word": format_word(y),
        "composition": format_composition(weak_descent_composition(y)),
    }
    parts = ["start\n" + tableau_to_text(P)]
    parts += [f"lift_[{i},{j}]\n" + tableau_to_text(S) for i, j, S in steps]
    parts.append(f"yamanouchi {format_word(y)}  des {format_composition(weak_descent_composition(y))}")
    latex = " \\to ".join([tableau_to_latex(P)] + [tableau_to_latex(S) for *_, S in steps])
    _emit(args, data, "\n\n".join(parts), latex)


def cmd_insert(args):
    rho = _word_arg(args.word)
    res = weak_correspondence(rho) if args.weak else eg_correspondence(rho)
    fmt = args.format
    data = {"word": format_word(rho), "insertion": tableau_to_json(res.insertion), "recording": tableau_to_json(res.recording)}
    if args.trace:
        data["trace"] = [
            {"letter": x, "insertion": tableau_to_json(P), "recording": tableau_to_json(Q)}
            for x, (P, Q) in zip(rho, res.trace)
        ]
    if fmt == "json":
        print(json.dumps(data, indent=2))
        return
    if fmt == "latex":
        pairs = res.trace if args.trace else [(res.insertion, res.recording)]
        print("\n".join(f"{_tab(P, fmt)} \\quad {_tab(Q, fmt)}" for P, Q in pairs))
        return
    blocks = []
    if args.trace:
        for x, (P, Q) in zip(rho, res.trace):
            blocks.append(f"insert {x}\nP:\n{tableau_to_text(P)}\nQ:\n{tableau_to_text(Q)}")
    else:
        blocks.append(f"P:\n{tableau_to_text(res.insertion)}\nQ:\n{tableau_to_text(res.recording)}")
    print("\n\n".join(blocks))


def _expansion_text(items, name):
    return "\n".join(f"{c} {name}{format_composition(a)}" for a, c in items) or "0"


def cmd_schubert(args):
    w = parse_permutation(args.permutation)
    if args.basis == "monomial":
        f = schubert(w)
        data = {"permutation": format_permutation(w), "basis": "monomial", "terms": f.to_json()}
        _emit(args, data, str(f), f.to_latex())
        return
    exp = slide_expansion(w) if args.basis == "slide" else demazure_expansion(w)
    name = "F" if args.basis == "slide" else "key"
    items = _sorted_counter(exp)
    data = {
        "permutation": format_permutation(w),
        "basis": args.basis,
        "terms": [{"composition": list(a), "coeff": c} for a, c in items],
    }
    sym = "\\mathfrak{F}" if args.basis == "slide" else "\\kappa"
    latex = " + ".join(f"{'' if c == 1 else c}{sym}_{{{format_composition(a)}}}" for a, c in items)
    _emit(args, data, _expansion_text(items, name), latex)


def cmd_stanley(args):
    w = parse_permutation(args.permutation)
    exp = fundamental_expansion(w) if args.basis == "fundamental" else schur_expansion(w)
    name = "F" if args.basis == "fundamental" else "s"
    items = _sorted_counter(exp)
    data = {
        "permutation": format_permutation(w),
        "basis": args.basis,
        "terms": [{"composition": list(a), "coeff": c} for a, c in items],
    }
    text = _expansion_text(items, name)
    sym = "F" if args.basis == "fundamental" else "s"
    latex = " + ".join(f"{'' if c == 1 else c}{sym}_{{{format_composition(a)}}}" for a, c in items)
    if args.vars is not None:
        f = stanley_function(w, args.vars)
        data["polynomial"] = f.to_json()
        text += f"\n\nin {args.vars} variables:\n{f}"
        latex += f"\n{f.to_latex()}"
    _emit(args, data, text, latex)


def cmd_demazure(args):
    w = parse_permutation(args.permutation)
    d = last_descent(w)
    ys = yamanouchi_words(w, args.method)
    rows = [(y, weak_descent_composition(y, d)) for y in ys]
    data = {
        "permutation": format_permutation(w),
        "yamanouchi": [{"word": format_word(y), "composition": list(a)} for y, a in rows],
    }
    text = "\n".join(f"{format_word(y)}  {format_composition(a)}" for y, a in rows)
    _emit(args, data, text, " + ".join(f"\\kappa_{{{format_composition(a)}}}" for _, a in rows))


def cmd_verify(args):
    idents = [s.strip().upper() for s in args.identities.split(",") if s.strip()]
    bad = [s for s in idents if s not in verify_mod.IDENTITIES]
    if bad:
        raise UsageError(f"unknown identities: {','.join(bad)}")
    if args.max_rank < 1:
        raise UsageError("--max-rank must be positive")
    report = verify_mod.run(args.max_rank, idents, jobs=args.jobs, poly_limit=args.poly_limit)
    failed = [r for r in report if r["status"] != "pass"]
    if args.format == "json":
        print(json.dumps(report, indent=2))
    else:
        for r in failed:
            print(f"FAIL {r['identity']} {r['permutation']}: {json.dumps(r.get('witness'))}")
        print(f"{len(report) - len(failed)}/{len(report)} checks passed")
    return 1 if failed else 0


# -- parser ------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "latex"), default=argparse.SUPPRESS)

    p = argparse.ArgumentParser(prog="schubkey", description="Reduced words, tableaux and their generating functions.")
    p.add_argument("--format", choices=("text", "json", "latex"), default="text")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("words", parents=[common], help="list the reduced words of a permutation")
    s.add_argument("permutation")
    s.set_defaults(func=cmd_words)

    s = sub.add_parser("classes", parents=[common], help="Coxeter-Knuth classes with their Schur and key labels")
    s.add_argument("permutation")
    s.set_defaults(func=cmd_classes)

    s = sub.add_parser("drop", parents=[common], help="drop a word to its increasing Young tableau")
    s.add_argument("word")
    s.add_argument("--graph", action="store_true", help="show every drop sequence")
    s.set_defaults(func=cmd_drop)

    s = sub.add_parser("lift", parents=[common], help="lift a word's increasing tableau to its Yamanouchi form")
    s.add_argument("word")
    s.add_argument("--graph", action="store_true", help="show every nontrivial lift")
    s.set_defaults(func=cmd_lift)

    s = sub.add_parser("insert", parents=[common], help="Edelman-Greene or weak insertion")
    s.add_argument("word")
    s.add_argument("--weak", action="store_true")
    s.add_argument("--trace", action="store_true")
    s.add_argument("--json", action="store_const", const="json", dest="format", default=argparse.SUPPRESS)
    s.set_defaults(func=cmd_insert)

    s = sub.add_parser("schubert", parents=[common], help="Schubert polynomial")
    s.add_argument("permutation")
    s.add_argument("--basis", choices=("slide", "demazure", "monomial"), default="slide")
    s.set_defaults(func=cmd_schubert)

    s = sub.add_parser("stanley", parents=[common], help="Stanley symmetric function")
    s.add_argument("permutation")
    s.add_argument("--basis", choices=("fundamental", "schur"), default="fundamental")
    s.add_argument("--vars", type=int, default=None, help="also expand into monomials in this many variables")
    s.set_defaults(func=cmd_stanley)

    s = sub.add_parser("demazure", parents=[common], help="Yamanouchi words and the key expansion")
    s.add_argument("permutation")
    s.add_argument("--method", choices=("lift", "scan"), default="lift")
    s.set_defaults(func=cmd_demazure)

    s = sub.add_parser("verify", parents=[common], help="check the expansion identities exhaustively")
    s.add_argument("--max-rank", type=int, default=5)
    s.add_argument("--identities", default="A,B,C")
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--poly-limit", type=int, default=verify_mod.POLY_LENGTH_LIMIT)
    s.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        code = args.func(args)
    except (UsageError, ValueError) as e:
        print(f"{parser.prog}: error: {e}", file=sys.stderr)
        return 2
    return code or 0


if __name__ == "__main__":
    sys.exit(main())
