"""Command-line front end.

Every positional input is either inline text or ``@path`` to read a UTF-8
file.  Exit codes: 0 success, 1 verification failure, 2 parse/usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .errors import HurwitzError
from .freegroup import Certificate
from .grammar import (
    format_braid,
    format_factorization,
    format_word,
    parse_braid,
    parse_certificate,
    parse_factorization,
    parse_presentation,
    parse_presentation_word,
    parse_word,
)
from .hurwitz import apply_braid
from .orbit import SearchBudget, orbit_search, stabilizer_check
from .reduction import compile_equivalence, ftl_b, word_info

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_USAGE = 2


class UsageError(HurwitzError):
    pass


def _read(arg: str) -> str:
    if arg.startswith("@"):
        try:
            return Path(arg[1:]).read_text(encoding="utf-8")
        except OSError as exc:
            raise UsageError(f"cannot read {arg[1:]}: {exc.strerror}") from None
    return arg


def _emit(args, record: dict, lines: list[str]) -> None:
    if args.format == "structured":
        print(json.dumps(record, sort_keys=True))
    else:
        print("\n".join(lines))


def cmd_act(args) -> int:
    F = parse_factorization(_read(args.factorization))
    b = parse_braid(_read(args.braid), len(F))
    out = apply_braid(F, b)
    text = format_factorization(out)
    _emit(args, {"command": "act", "result": text}, [text])
    return EXIT_OK


def cmd_ftl(args) -> int:
    p = parse_presentation(_read(args.presentation))
    a = parse_presentation_word(_read(args.word), p)
    F = ftl_b(p, a, embed=not args.no_embed)
    text = format_factorization(F)
    record = {"command": "ftl", "embedded": not args.no_embed, "length": len(F), "result": text}
    _emit(args, record, [text])
    return EXIT_OK


def cmd_compile_witness(args) -> int:
    p = parse_presentation(_read(args.presentation))
    a = parse_presentation_word(_read(args.word_a), p)
    b = parse_presentation_word(_read(args.word_b), p)
    cert_text = _read(args.certificate)
    cert = parse_certificate(cert_text) if cert_text.strip() else Certificate()
    eq = compile_equivalence(p, a, b, cert)
    braid = eq.witness.braid
    ok = eq.verified and eq.verified_embedded
    k = braid.strands
    record = {
        "command": "compile-witness",
        "strands": k,
        "braid": format_braid(braid),
        "braid_length": len(braid),
        "source": format_factorization(eq.source),
        "target": format_factorization(eq.target),
        "verified": eq.verified,
        "verified_embedded": eq.verified_embedded,
    }
    verdict = "yes" if eq.verified else "NO"
    verdict_e = "yes" if eq.verified_embedded else "NO"
    lines = [
        f"strands: {k}",
        f"braid: {format_braid(braid) or '(empty)'}",
        f"source: {record['source']}",
        f"target: {record['target']}",
        f"verified: {verdict} (pre-embedding), {verdict_e} (embedded in F2+F2)",
    ]
    _emit(args, record, lines)
    return EXIT_OK if ok else EXIT_VERIFY


def cmd_orbit(args) -> int:
    F1 = parse_factorization(_read(args.f1))
    F2 = parse_factorization(_read(args.f2))
    budget = SearchBudget(args.budget_nodes, args.budget_braid_len, args.budget_elem_len)
    out = orbit_search(F1, F2, budget, bidirectional=args.bidirectional)
    st = out.stats
    witness = format_braid(out.witness) if out.witness is not None else None
    record = {
        "command": "orbit",
        "status": out.status,
        "witness": witness,
        "stats": {
            "nodes_expanded": st.nodes_expanded,
            "nodes_seen": st.nodes_seen,
            "frontier_peak": st.frontier_peak,
            "dedup_hits": st.dedup_hits,
            "pruned_by_length": st.pruned_by_length,
            "depth_reached": st.depth_reached,
            "reason": st.reason,
        },
    }
    lines = [f"status: {out.status}"]
    if witness is not None:
        lines.append(f"witness: {witness or '(empty)'}")
    lines.append(
        "stats: "
        + " ".join(f"{k}={v}" for k, v in record["stats"].items() if k != "reason")
        + (f" reason={st.reason!r}" if st.reason else "")
    )
    _emit(args, record, lines)
    return EXIT_OK


def cmd_stabcheck(args) -> int:
    F = parse_factorization(_read(args.factorization))
    b = parse_braid(_read(args.braid), len(F))
    result = stabilizer_check(F, b)
    _emit(args, {"command": "stabcheck", "stabilizes": result}, [str(result).lower()])
    return EXIT_OK


def cmd_wordinfo(args) -> int:
    w = parse_word(_read(args.word).strip())
    info = word_info(w)
    fmt = lambda v: None if v is None else format_word(v)  # noqa: E731
    record = {
        "command": "wordinfo",
        "reduced": fmt(info["reduced"]),
        "cyclic_core": fmt(info["core"]),
        "conjugator": fmt(info["conjugator"]),
        "root": fmt(info["root"]),
        "exponent": info["exponent"],
    }
    lines = [
        f"reduced: {record['reduced']}",
        f"cyclic core: {record['cyclic_core']}",
        f"conjugator: {record['conjugator']}",
        f"root: {record['root'] if record['root'] is not None else 'none'}",
        f"exponent: {record['exponent'] if record['exponent'] is not None else 'none'}",
    ]
    _emit(args, record, lines)
    return EXIT_OK


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if v < 1:
        raise argparse.ArgumentTypeError("budgets must be positive")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hurwitzwp",
        description="Hurwitz action, word-problem reductions and witness compilation.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "structured"), default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("act", parents=[common], help="act on a factorization by a braid")
    p.add_argument("factorization")
    p.add_argument("braid")
    p.set_defaults(func=cmd_act)

    p = sub.add_parser("ftl", parents=[common], help="map (presentation, word) to a 1-factorization")
    p.add_argument("presentation")
    p.add_argument("word")
    p.add_argument("--no-embed", action="store_true", help="print the tuple before embedding into F2+F2")
    p.set_defaults(func=cmd_ftl)

    p = sub.add_parser(
        "compile-witness",
        parents=[common],
        help="compile a certificate for a^-1 b into a braid between the two FTL tuples",
    )
    p.add_argument("presentation")
    p.add_argument("word_a")
    p.add_argument("word_b")
    p.add_argument("certificate")
    p.set_defaults(func=cmd_compile_witness)

    p = sub.add_parser("orbit", parents=[common], help="budgeted search for a braid F1 -> F2")
    p.add_argument("f1")
    p.add_argument("f2")
    p.add_argument("--budget-nodes", type=_positive, default=100_000)
    p.add_argument("--budget-braid-len", type=_positive, default=12)
    p.add_argument("--budget-elem-len", type=_positive, default=64)
    p.add_argument("--bidirectional", action="store_true")
    p.set_defaults(func=cmd_orbit)

    p = sub.add_parser("stabcheck", parents=[common], help="does the braid fix the factorization?")
    p.add_argument("factorization")
    p.add_argument("braid")
    p.set_defaults(func=cmd_stabcheck)

    p = sub.add_parser("wordinfo", parents=[common], help="reduced form, cyclic core and root of a word")
    p.add_argument("word")
    p.set_defaults(func=cmd_wordinfo)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except HurwitzError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
