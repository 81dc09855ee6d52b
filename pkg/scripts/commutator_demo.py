"""End-to-end run on < a b | a b a^-1 b^-1 >: ab and ba give Hurwitz-equivalent tuples.

    python3 scripts/commutator_demo.py [--embedded]
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass

from hurwitzwp.grammar import (
    format_braid,
    format_factorization,
    parse_certificate,
    parse_presentation,
    parse_presentation_word,
)
from hurwitzwp.reduction import compile_equivalence, embed_factorization, select_rootless, ftl_b_instance


@dataclass(frozen=True)
class DemoConfig:
    presentation: str = "< a b | a b a^-1 b^-1 >"
    word_a: str = "a b"
    word_b: str = "b a"
    # a^-1 b = b^-1 a^-1 b a, the inverse relator conjugated by b a
    certificate: str = "- r1 by w2 w1"
    embedded: bool = False


def run(cfg: DemoConfig) -> bool:
    p = parse_presentation(cfg.presentation)
    a = parse_presentation_word(cfg.word_a, p)
    b = parse_presentation_word(cfg.word_b, p)
    inst = ftl_b_instance(p, a)
    H = select_rootless(inst.n, inst.V).H
    eq = compile_equivalence(p, a, b, parse_certificate(cfg.certificate))
    src, dst = eq.source, eq.target
    if cfg.embedded:
        src, dst = embed_factorization(src), embed_factorization(dst)
    print(f"presentation  {cfg.presentation}")
    print(f"root-free H   {H}")
    print(f"source ({cfg.word_a}): {format_factorization(src)}")
    print(f"target ({cfg.word_b}): {format_factorization(dst)}")
    print(f"braid ({len(eq.witness.braid)} letters on {eq.witness.braid.strands} strands):")
    print(f"  {format_braid(eq.witness.braid)}")
    print(f"verified before embedding: {eq.verified}")
    print(f"verified after embedding:  {eq.verified_embedded}")
    return eq.verified and eq.verified_embedded


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--embedded", action="store_true", help="print the F2+F2 images")
    args = ap.parse_args()
    return 0 if run(DemoConfig(embedded=args.embedded)) else 1


if __name__ == "__main__":
    raise SystemExit(main())
