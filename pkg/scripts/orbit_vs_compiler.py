"""Compare compiled witnesses with what budgeted orbit search finds.

For random P_X specs and certificates, compile a braid, then search for
the same target forwards and bidirectionally.  Prints one row per case
and a summary.

    python3 scripts/orbit_vs_compiler.py --cases 40 --max-compiled 12
"""

from __future__ import annotations

import argparse
import random
import time
from dataclasses import dataclass

from hurwitzwp.constructions import PXSpec, build_px, compile_witness
from hurwitzwp.freegroup import Certificate, CertificateFactor, Word, identity, invert, reduce
from hurwitzwp.orbit import FOUND, SearchBudget, orbit_search


@dataclass(frozen=True)
class ExperimentConfig:
    cases: int = 40
    seed: int = 0
    max_p: int = 3
    max_q: int = 2
    word_len: int = 3
    max_factors: int = 2
    max_conjugator: int = 2
    max_compiled: int = 12
    budget: SearchBudget = SearchBudget()


def _word(rng, rank, max_len, nontrivial=False):
    while True:
        w = reduce([rng.choice((1, -1)) * rng.randint(1, rank) for _ in range(rng.randint(0, max_len))], rank)
        if not (nontrivial and w.is_identity):
            return w


def random_case(rng, cfg: ExperimentConfig):
    p, q = rng.randint(1, cfg.max_p), rng.randint(1, cfg.max_q)
    head = [_word(rng, 2, cfg.word_len) for _ in range(p - 1)]
    prod = identity(2)
    for r in head:
        prod = prod * r
    spec = PXSpec(
        tuple(head) + (invert(prod),),
        tuple(_word(rng, 2, cfg.word_len) for _ in range(q)),
        _word(rng, 2, cfg.word_len),
        tuple(_word(rng, 3, cfg.word_len, nontrivial=True) for _ in range(q + 2)),
    )
    cert = Certificate(tuple(
        CertificateFactor(rng.randint(1, p), rng.choice((1, -1)), Word.of(
            [rng.choice((1, -1)) * rng.randint(1, q) for _ in range(rng.randint(0, cfg.max_conjugator))], q))
        for _ in range(rng.randint(1, cfg.max_factors))
    ))
    return spec, cert


def _search(src, dst, budget, bidirectional):
    t = time.perf_counter()
    out = orbit_search(src, dst, budget, bidirectional=bidirectional)
    return out, time.perf_counter() - t


def run(cfg: ExperimentConfig) -> None:
    rng = random.Random(cfg.seed)
    print(f"{'k':>3} {'|compiled|':>10} {'fwd':>17} {'|w|':>4} {'nodes':>7} {'bidi':>17} {'|w|':>4} {'nodes':>7}")
    done = found_f = found_b = 0
    while done < cfg.cases:
        spec, cert = random_case(rng, cfg)
        wit = compile_witness(cert, spec)
        if len(wit.braid) > cfg.max_compiled:
            continue
        src = build_px(spec)
        dst = src * wit.braid
        done += 1
        cols = [f"{spec.strands:>3}", f"{len(wit.braid):>10}"]
        for bi in (False, True):
            out, secs = _search(src, dst, cfg.budget, bi)
            ok = out.status == FOUND
            found_f += ok and not bi
            found_b += ok and bi
            wl = len(out.witness) if ok else "-"
            cols += [f"{out.status:>17}", f"{wl:>4}", f"{out.stats.nodes_expanded:>7}"]
        print(" ".join(cols))
    print(f"forward found {found_f}/{done}, bidirectional found {found_b}/{done}")


def main() -> None:
    ap = argparse.ArgumentParser(description="compiled witnesses vs orbit search")
    ap.add_argument("--cases", type=int, default=ExperimentConfig.cases)
    ap.add_argument("--seed", type=int, default=ExperimentConfig.seed)
    ap.add_argument("--max-compiled", type=int, default=ExperimentConfig.max_compiled)
    ap.add_argument("--nodes", type=int, default=SearchBudget.max_nodes)
    args = ap.parse_args()
    cfg = ExperimentConfig(
        cases=args.cases,
        seed=args.seed,
        max_compiled=args.max_compiled,
        budget=SearchBudget(max_nodes=args.nodes),
    )
    run(cfg)


if __name__ == "__main__":
    main()
