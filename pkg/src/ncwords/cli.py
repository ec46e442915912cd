"""Command line front end.

One subcommand per library operation; output is deterministic and
scriptable.  Exit codes: 0 on success, 1 on any validation error
(including usage errors), 2 when a required moment is missing.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from .cooperad import (
    check_coassociativity,
    decompose,
    decompose_noncrossing,
    format_term,
)
from .cumulants import (
    CumulantTable,
    boolean_cumulant,
    classical_cumulant,
    moments_from_free_cumulants,
)
from .probability import (
    MissingMomentError,
    MomentTableError,
    format_rational,
    load_moments,
    parse_rational,
)
from .words import (
    Alphabet,
    enumerate_nc_basis,
    enumerate_word_basis,
    is_noncrossing,
    is_pangrammatic,
    is_reduced,
    parse_word,
    random_basis_word,
    reduce_word,
    render_word,
)
from .surjections import enumerate_canonical_surjections, enumerate_nc_partitions


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="ncwords",
        description="Non-crossing words, their cooperadic decomposition, and cumulants.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("reduce", help="reduce a word to normal form")
    sp.add_argument("word")

    sp = sub.add_parser("check", help="report reduced / non-crossing / pangrammatic flags")
    sp.add_argument("word")

    sp = sub.add_parser("decompose", help="list the decomposition terms of a word")
    sp.add_argument("word")
    sp.add_argument("--nc", action="store_true", help="non-crossing decomposition")

    sp = sub.add_parser("coassoc", help="run coassociativity checks")
    sp.add_argument("--alphabet-size", type=int, required=True)
    sp.add_argument("--max-len", type=int, required=True)
    sp.add_argument("--nc", action="store_true", help="check the non-crossing cooperad")
    sp.add_argument("--samples", type=int, help="randomized mode: number of words")
    sp.add_argument("--seed", type=int, default=0)

    sp = sub.add_parser("ncpartitions", help="list non-crossing partitions of [N]")
    sp.add_argument("n", type=int)
    sp.add_argument("--count-only", action="store_true")

    sp = sub.add_parser("surjections", help="list canonical surjections from [N]")
    sp.add_argument("n", type=int)

    sp = sub.add_parser("cumulants", help="evaluate a cumulant from a moment table")
    sp.add_argument("--moments", required=True, metavar="FILE")
    sp.add_argument("--kind", required=True, choices=["free", "boolean", "classical", "word"])
    sp.add_argument("--word", help="the word, for --kind word")
    sp.add_argument("--args", required=True, help="comma-separated variable names")
    sp.add_argument("--json", action="store_true", dest="as_json")
    sp.add_argument(
        "--up-to",
        type=int,
        help="batch mode: one record per order 1..N for a single variable",
    )

    sp = sub.add_parser("moments", help="moments from a free cumulant table")
    sp.add_argument("--cumulants", required=True, metavar="FILE")
    sp.add_argument("--up-to", type=int, required=True)
    return p


def _parse_args_list(text: str) -> list[str]:
    names = text.split(",")
    if any(not n for n in names):
        raise ValueError(f"malformed --args {text!r}: empty variable name")
    return names


def _cumulant_record(kind: str, args: list[str], value, word: str | None = None) -> str:
    record = {"kind": kind, "N": len(args), "args": args, "value": format_rational(value)}
    if word is not None:
        record["word"] = word
    return json.dumps(record)


def _run_cumulants(ns: argparse.Namespace) -> int:
    E = load_moments(ns.moments)
    args = _parse_args_list(ns.args)
    if ns.up_to is not None:
        if ns.kind == "word":
            raise ValueError("batch mode (--up-to) does not apply to --kind word")
        if ns.up_to < 1:
            raise ValueError("--up-to must be >= 1")
        if len(args) != 1:
            raise ValueError("batch mode takes exactly one variable in --args")
        v = args[0]
        table = CumulantTable(E)
        for n in range(1, ns.up_to + 1):
            tup = [v] * n
            value = _evaluate(ns.kind, E, tup, table=table)
            if ns.as_json:
                print(_cumulant_record(ns.kind, tup, value))
            else:
                print(f"{n} {format_rational(value)}")
        return 0
    if ns.kind == "word":
        if not ns.word:
            raise ValueError("--kind word requires --word")
        w = parse_word(ns.word)
        if len(args) != w.alphabet.size:
            raise ValueError(
                f"--args names {len(args)} variables but {ns.word!r} has "
                f"{w.alphabet.size} letters"
            )
        value = CumulantTable(E).word_cumulant(w, args)
        if ns.as_json:
            print(_cumulant_record("word", args, value, word=ns.word))
        else:
            print(format_rational(value))
        return 0
    if ns.word:
        raise ValueError(f"--word does not apply to --kind {ns.kind}")
    value = _evaluate(ns.kind, E, args)
    if ns.as_json:
        print(_cumulant_record(ns.kind, args, value))
    else:
        print(format_rational(value))
    return 0


def _evaluate(kind: str, E, args: list[str], table: CumulantTable | None = None):
    if kind == "free":
        return (table or CumulantTable(E)).free_cumulant(args)
    if kind == "boolean":
        return boolean_cumulant(E, args)
    if kind == "classical":
        return classical_cumulant(E, args)
    raise ValueError(f"unknown cumulant kind {kind!r}")


def _run_moments(ns: argparse.Namespace) -> int:
    try:
        with open(ns.cumulants, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except json.JSONDecodeError as exc:
        raise MomentTableError(f"cumulant table {ns.cumulants}: invalid JSON ({exc})") from None
    if not isinstance(data, dict) or not isinstance(data.get("cumulants"), list):
        raise MomentTableError(
            f"cumulant table {ns.cumulants}: expected an object with a 'cumulants' list"
        )
    by_order = {}
    for entry in data["cumulants"]:
        if not isinstance(entry, dict) or "order" not in entry or "value" not in entry:
            raise MomentTableError(
                f"cumulant table {ns.cumulants}: each entry needs 'order' and 'value'"
            )
        n = entry["order"]
        if not isinstance(n, int) or n < 1:
            raise MomentTableError(f"cumulant table {ns.cumulants}: bad order {n!r}")
        if n in by_order:
            raise MomentTableError(f"cumulant table {ns.cumulants}: duplicate order {n}")
        by_order[n] = parse_rational(entry["value"])
    if ns.up_to < 0:
        raise ValueError("--up-to must be >= 0")
    missing = [n for n in range(1, ns.up_to + 1) if n not in by_order]
    if missing:
        raise MomentTableError(
            f"cumulant table {ns.cumulants}: missing orders {missing} for --up-to {ns.up_to}"
        )
    kappas = [by_order[n] for n in range(1, ns.up_to + 1)]
    for n, m in enumerate(moments_from_free_cumulants(kappas)):
        print(f"{n} {format_rational(m)}")
    return 0


def _run_coassoc(ns: argparse.Namespace) -> int:
    if ns.alphabet_size < 1:
        raise ValueError("--alphabet-size must be >= 1")
    if ns.max_len < 1:
        raise ValueError("--max-len must be >= 1")
    label = "nc cooperad" if ns.nc else "word cooperad"
    if ns.samples is not None:
        if ns.samples < 1:
            raise ValueError("--samples must be >= 1")
        rng = random.Random(ns.seed)
        for _ in range(ns.samples):
            k = rng.randint(1, ns.alphabet_size)
            max_len = max(k, ns.max_len)
            w = random_basis_word(rng, k, max_len, noncrossing=ns.nc)
            if not check_coassociativity(w, noncrossing=ns.nc):
                print(f"FAIL coassociativity ({label}): word {render_word(w)}")
                return 1
        print(
            f"PASS coassociativity ({label}): {ns.samples} random words, "
            f"alphabet size <= {ns.alphabet_size}, length <= {ns.max_len}, seed {ns.seed}"
        )
        return 0
    total = 0
    for k in range(1, ns.alphabet_size + 1):
        alphabet = Alphabet.numeric(k)
        words = (
            enumerate_nc_basis(alphabet, ns.max_len)
            if ns.nc
            else enumerate_word_basis(alphabet, ns.max_len)
        )
        for w in words:
            if not check_coassociativity(w, noncrossing=ns.nc):
                print(f"FAIL coassociativity ({label}): word {render_word(w)}")
                return 1
            total += 1
    print(
        f"PASS coassociativity ({label}): {total} words, "
        f"alphabet size <= {ns.alphabet_size}, length <= {ns.max_len}"
    )
    return 0


def _dispatch(ns: argparse.Namespace) -> int:
    if ns.command == "reduce":
        w = parse_word(ns.word)
        print(render_word(reduce_word(w), prefer_chars="," not in ns.word))
        return 0
    if ns.command == "check":
        w = parse_word(ns.word)
        flags = [
            ("reduced", is_reduced(w)),
            ("non-crossing", is_noncrossing(w)),
            ("pangrammatic", is_pangrammatic(w)),
        ]
        for name, value in flags:
            print(f"{name}={'true' if value else 'false'}")
        return 0
    if ns.command == "decompose":
        w = parse_word(ns.word)
        prefer_chars = "," not in ns.word
        terms = decompose_noncrossing(w) if ns.nc else decompose(w)
        for term in terms:
            print(format_term(term, prefer_chars))
        return 0
    if ns.command == "coassoc":
        return _run_coassoc(ns)
    if ns.command == "ncpartitions":
        if ns.n < 1:
            raise ValueError("N must be >= 1")
        parts = enumerate_nc_partitions(ns.n)
        if ns.count_only:
            print(len(parts))
        else:
            for part in parts:
                print(part.block_notation())
        return 0
    if ns.command == "surjections":
        if ns.n < 1:
            raise ValueError("N must be >= 1")
        for f in enumerate_canonical_surjections(ns.n):
            print(f.block_notation())
        return 0
    if ns.command == "cumulants":
        return _run_cumulants(ns)
    if ns.command == "moments":
        return _run_moments(ns)
    raise ValueError(f"unknown command {ns.command!r}")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 for --help; fold usage
        # errors into the single validation exit code.
        return 0 if not exc.code else 1
    try:
        return _dispatch(ns)
    except MissingMomentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
