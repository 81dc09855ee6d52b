"""Random generators and brute-force oracles shared by the test modules.

Oracles here deliberately avoid the package's own algorithms: reduction is
done by rescanning until nothing cancels, conjugacy by enumerating
conjugators, roots by enumerating candidate powers.
"""

from __future__ import annotations

import itertools
import random

from hurwitzwp.freegroup import Word
from hurwitzwp.hurwitz import BraidWord, Factorization


def naive_reduce(letters) -> tuple[int, ...]:
    s = list(letters)
    changed = True
    while changed:
        changed = False
        for i in range(len(s) - 1):
            if s[i] == -s[i + 1]:
                del s[i : i + 2]
                changed = True
                break
    return tuple(s)


def naive_mul(*words) -> tuple[int, ...]:
    out: list[int] = []
    for w in words:
        out.extend(w)
    return naive_reduce(out)


def naive_inv(w) -> tuple[int, ...]:
    return tuple(-a for a in reversed(w))


def random_letters(rng: random.Random, rank: int, length: int) -> tuple[int, ...]:
    """A freely reduced letter sequence of exactly ``length`` letters."""
    out: list[int] = []
    while len(out) < length:
        a = rng.randint(1, rank) * rng.choice((1, -1))
        if out and out[-1] == -a:
            continue
        out.append(a)
    return tuple(out)


def random_word(rng: random.Random, rank: int, max_len: int, min_len: int = 0) -> Word:
    return Word(random_letters(rng, rank, rng.randint(min_len, max_len)), rank)


def random_nontrivial_word(rng, rank, max_len) -> Word:
    return random_word(rng, rank, max_len, min_len=1)


def all_words(rank: int, max_len: int) -> list[tuple[int, ...]]:
    """Every freely reduced letter tuple of length <= max_len."""
    alphabet = [a for i in range(1, rank + 1) for a in (i, -i)]
    layer = [()]
    out = [()]
    for _ in range(max_len):
        layer = [w + (a,) for w in layer for a in alphabet if not w or w[-1] != -a]
        out.extend(layer)
    return out


def random_factorization(rng, length: int, rank: int, max_len: int) -> Factorization:
    return Factorization(random_word(rng, rank, max_len) for _ in range(length))


def random_braid(rng, strands: int, max_len: int, min_len: int = 0) -> BraidWord:
    n = rng.randint(min_len, max_len)
    return BraidWord(strands, tuple(rng.randint(1, strands - 1) * rng.choice((1, -1)) for _ in range(n)))


def trivial_product_tuple(rng, p: int, rank: int, max_len: int) -> tuple[Word, ...]:
    """U (x) (m(U)^-1) for random U of length p - 1, so the product is 1."""
    U = [random_word(rng, rank, max_len) for _ in range(p - 1)]
    prod: tuple[int, ...] = ()
    for u in U:
        prod = naive_mul(prod, u.letters)
    return tuple(U) + (Word(naive_inv(prod), rank),)


def brute_conjugates(u: tuple[int, ...], conjugators) -> set[tuple[int, ...]]:
    return {naive_mul(naive_inv(t), u, t) for t in conjugators}


def brute_max_exponents(rank: int, max_len: int) -> dict[tuple[int, ...], tuple[tuple[int, ...], int]]:
    """Map each proper power w (|w| <= max_len) to (root, exponent) with exponent maximal.

    Enumerates every candidate root u and exponent k >= 2 directly.  Roots
    that are not cyclically reduced can be almost as long as their powers,
    so candidates run up to max_len - 1 letters.
    """
    best: dict = {}
    for u in all_words(rank, max_len - 1):
        if not u:
            continue
        for k in range(2, max_len + 1):
            w = naive_reduce(u * k)
            if len(w) > max_len:
                break
            if w and (w not in best or best[w][1] < k):
                best[w] = (u, k)
    return best


def naive_is_primitive(w: tuple[int, ...]) -> bool:
    """No u and k >= 2 with u^k == w (as letter strings; w cyclically reduced)."""
    n = len(w)
    for d in range(1, n):
        if n % d == 0 and w[:d] * (n // d) == w:
            return False
    return True


def sigma_product_words(strands, length):
    alphabet = [a for i in range(1, strands) for a in (i, -i)]
    for letters in itertools.product(alphabet, repeat=length):
        yield BraidWord(strands, letters)
