"""Lengths of the root-free elements built from random relators.

For cyclically reduced y using both generators the output has length
6|y| + 4; for powers of one generator it is 2|y| + 2.  The script checks
both and that every output is root-free.

    python3 scripts/rootless_lengths.py --samples 500 --max-len 8
"""

from __future__ import annotations

import argparse
import random
from collections import Counter
from dataclasses import dataclass

from hurwitzwp.freegroup import Word, cyclic_reduce, make_rootless, reduce, root_decompose


@dataclass(frozen=True)
class LengthConfig:
    samples: int = 500
    max_len: int = 8
    rank: int = 2
    seed: int = 1


def expected_length(y: Word) -> int:
    core, _ = cyclic_reduce(y)
    if len({abs(a) for a in core.letters}) == 1:
        return 2 * len(core) + 2
    return 6 * len(core) + 4


def run(cfg: LengthConfig) -> int:
    rng = random.Random(cfg.seed)
    hist: Counter = Counter()
    bad = 0
    for _ in range(cfg.samples):
        raw = [rng.choice((1, -1)) * rng.randint(1, cfg.rank) for _ in range(rng.randint(1, cfg.max_len))]
        y = reduce(raw, cfg.rank)
        if y.is_identity:
            continue
        A = make_rootless(y)
        core_len = len(cyclic_reduce(y)[0])
        hist[(core_len, len(A))] += 1
        if len(A) != expected_length(y) or root_decompose(A)[1] != 1:
            bad += 1
            print(f"unexpected: y={y} A={A}")
    print(f"{'|core y|':>8} {'|A|':>5} {'count':>6}")
    for (c, a), n in sorted(hist.items()):
        print(f"{c:>8} {a:>5} {n:>6}")
    print(f"mismatches: {bad}")
    return bad


def main() -> int:
    ap = argparse.ArgumentParser(description="root-free element lengths")
    ap.add_argument("--samples", type=int, default=LengthConfig.samples)
    ap.add_argument("--max-len", type=int, default=LengthConfig.max_len)
    ap.add_argument("--rank", type=int, default=LengthConfig.rank)
    ap.add_argument("--seed", type=int, default=LengthConfig.seed)
    args = ap.parse_args()
    return 1 if run(LengthConfig(args.samples, args.max_len, args.rank, args.seed)) else 0


if __name__ == "__main__":
    raise SystemExit(main())
