"""Words in finitely generated free groups.

A letter is a nonzero integer: ``k`` stands for the generator x_k and ``-k``
for its inverse.  Words are kept freely reduced at all times, so structural
equality of :class:`Word` objects is equality in the free group.

Conjugation follows the right-action convention ``u^t = t^-1 u t``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    IndexOutOfRangeError,
    InvalidInputError,
    MalformedInputError,
    RankMismatchError,
    UnsupportedRankError,
)

__all__ = [
    "Word",
    "reduce",
    "multiply",
    "invert",
    "conjugate",
    "cyclic_reduce",
    "is_cyclically_reduced",
    "conjugacy_key",
    "is_conjugate",
    "root_decompose",
    "make_rootless",
    "make_rootless_with_provenance",
    "generator",
    "identity",
    "ConjugateFactor",
    "Presentation",
    "Certificate",
    "CertificateFactor",
]


def _free_reduce(letters: Iterable[int]) -> tuple[int, ...]:
    stack: list[int] = []
    for a in letters:
        if stack and stack[-1] == -a:
            stack.pop()
        else:
            stack.append(a)
    return tuple(stack)


@dataclass(frozen=True, slots=True)
class Word:
    """A freely reduced word of a free group of the given rank.

    Build words through :func:`reduce`, :meth:`Word.of` or the group
    operations; the constructor trusts its input.
    """

    letters: tuple[int, ...]
    rank: int

    @classmethod
    def of(cls, letters: Iterable[int], rank: int) -> Word:
        return reduce(letters, rank)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __mul__(self, other: Word) -> Word:
        return multiply(self, other)

    def __pow__(self, k: int) -> Word:
        if k < 0:
            return invert(self) ** (-k)
        out = self.identity()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __invert__(self) -> Word:
        return invert(self)

    def inverse(self) -> Word:
        return invert(self)

    def identity(self) -> Word:
        return Word((), self.rank)

    @property
    def is_identity(self) -> bool:
        return not self.letters

    def conjugate(self, t: Word) -> Word:
        return conjugate(self, t)

    def conjugacy_key(self) -> tuple:
        return conjugacy_key(self)

    def size(self) -> int:
        return len(self.letters)

    def key(self) -> tuple:
        return ("w", self.rank, self.letters)

    def generators_used(self) -> set[int]:
        return {abs(a) for a in self.letters}

    def __str__(self) -> str:
        from .grammar import format_word

        return format_word(self)


def identity(rank: int) -> Word:
    return Word((), rank)


def generator(index: int, rank: int) -> Word:
    return reduce([index], rank)


def reduce(raw: Iterable[int], rank: int) -> Word:
    """Freely reduce a sequence of signed letters into a :class:`Word`."""
    if rank < 1:
        raise MalformedInputError(f"rank must be positive, got {rank}")
    raw = tuple(raw)
    for a in raw:
        if not isinstance(a, int) or a == 0 or abs(a) > rank:
            raise MalformedInputError(f"letter {a!r} is not a generator of F_{rank}")
    return Word(_free_reduce(raw), rank)


def _check_ranks(u: Word, v: Word) -> None:
    if u.rank != v.rank:
        raise RankMismatchError(f"rank mismatch: F_{u.rank} vs F_{v.rank}")


def multiply(u: Word, v: Word) -> Word:
    _check_ranks(u, v)
    a, b = u.letters, v.letters
    # only the seam can cancel
    k = 0
    n = min(len(a), len(b))
    while k < n and a[len(a) - 1 - k] == -b[k]:
        k += 1
    return Word(a[: len(a) - k] + b[k:], u.rank)


def invert(u: Word) -> Word:
    return Word(tuple(-a for a in reversed(u.letters)), u.rank)


def conjugate(u: Word, t: Word) -> Word:
    """Return ``u^t = t^-1 u t``."""
    return multiply(multiply(invert(t), u), t)


def is_cyclically_reduced(u: Word) -> bool:
    return len(u.letters) < 2 or u.letters[0] != -u.letters[-1]


def cyclic_reduce(u: Word) -> tuple[Word, Word]:
    """Split ``u`` as ``p core p^-1`` with ``core`` cyclically reduced.

    Returns ``(core, p)``; equivalently ``core = conjugate(u, p)``.
    """
    a = u.letters
    k = 0
    while 2 * k + 1 < len(a) and a[k] == -a[len(a) - 1 - k]:
        k += 1
    core = Word(a[k : len(a) - k], u.rank)
    return core, Word(a[:k], u.rank)


def conjugacy_key(u: Word) -> tuple:
    """A canonical label of the conjugacy class of ``u``.

    Two words of the same rank are conjugate iff their keys are equal.
    """
    core, _ = cyclic_reduce(u)
    c = core.letters
    if not c:
        return (u.rank, c)
    return (u.rank, min(c[r:] + c[:r] for r in range(len(c))))


def is_conjugate(u: Word, v: Word) -> bool:
    """Decide conjugacy by comparing cyclic cores up to rotation."""
    _check_ranks(u, v)
    cu, _ = cyclic_reduce(u)
    cv, _ = cyclic_reduce(v)
    if len(cu) != len(cv):
        return False
    if not cu.letters:
        return True
    doubled = cu.letters + cu.letters
    target = cv.letters
    n = len(target)
    return any(doubled[i : i + n] == target for i in range(n))


def _smallest_period(s: Sequence[int]) -> int:
    # KMP failure function; period = n - longest proper border
    n = len(s)
    fail = [0] * n
    k = 0
    for i in range(1, n):
        while k and s[i] != s[k]:
            k = fail[k - 1]
        if s[i] == s[k]:
            k += 1
        fail[i] = k
    return n - fail[-1]


def root_decompose(u: Word) -> tuple[Word, int]:
    """Write ``u = root ** exponent`` with the exponent maximal.

    For words that are not cyclically reduced the root of the cyclic core is
    conjugated back, so the identity ``u == root ** exponent`` always holds.
    """
    if u.is_identity:
        raise InvalidInputError("the identity has no well-defined root")
    core, p = cyclic_reduce(u)
    c = core.letters
    period = _smallest_period(c)
    if len(c) % period:
        period = len(c)
    root = Word(c[:period], u.rank)
    if p.letters:
        root = conjugate(root, invert(p))
    return root, len(c) // period


@dataclass(frozen=True)
class ConjugateFactor:
    """One factor ``(y^sign)^conjugator`` of a product of conjugates of ``y``."""

    sign: int
    conjugator: Word

    def evaluate(self, y: Word) -> Word:
        base = y if self.sign > 0 else invert(y)
        return conjugate(base, self.conjugator)


def make_rootless_with_provenance(y: Word) -> tuple[Word, tuple[ConjugateFactor, ...]]:
    """Build a cyclically reduced, root-free ``A`` in the normal closure of ``y``.

    Returns ``A`` together with factors whose product of conjugates of ``y``
    is exactly ``A``.
    """
    if y.is_identity:
        raise InvalidInputError("make_rootless needs a nontrivial element")
    if y.rank < 2:
        raise UnsupportedRankError("root-free elements of the normal closure need rank >= 2")
    rank = y.rank
    core, p = cyclic_reduce(y)
    # core = y^p
    c = core.letters
    gens = {abs(a) for a in c}

    if len(gens) == 1:
        i = abs(c[0])
        other = 1 if i != 1 else 2
        t = generator(other, rank)
        # A = t^-1 x_i^n t x_i^n, i.e. core^t * core
        factors = (
            ConjugateFactor(1, multiply(p, t)),
            ConjugateFactor(1, p),
        )
        a = multiply(conjugate(core, t), core)
    else:
        n = len(c)
        r = next(r for r in range(n) if abs(c[r]) != abs(c[r - 1]))
        rotated = Word(c[r:] + c[:r], rank)
        shift = Word(c[:r], rank)  # rotated = core^shift
        first, last = rotated.letters[0], rotated.letters[-1]
        block = reduce([last, first], rank) ** (n + 1)
        a = multiply(conjugate(rotated, block), rotated)
        ps = multiply(p, shift)
        factors = (
            ConjugateFactor(1, multiply(ps, block)),
            ConjugateFactor(1, ps),
        )
    return a, factors


def make_rootless(y: Word) -> Word:
    return make_rootless_with_provenance(y)[0]


@dataclass(frozen=True)
class Presentation:
    """``< g_1 ... g_n | R_1, ..., R_m >``; relators are words of F_n, x_i naming g_i."""

    generators: tuple[str, ...]
    relators: tuple[Word, ...]

    def __post_init__(self):
        if not self.generators:
            raise MalformedInputError("a presentation needs at least one generator")
        if len(set(self.generators)) != len(self.generators):
            raise MalformedInputError("generator names must be distinct")
        for r in self.relators:
            if r.rank != self.rank:
                raise RankMismatchError(f"relator of F_{r.rank} in a rank-{self.rank} presentation")

    @property
    def rank(self) -> int:
        return len(self.generators)


@dataclass(frozen=True)
class CertificateFactor:
    relator: int  # 1-based index into a relator list
    sign: int
    conjugator: Word


@dataclass(frozen=True)
class Certificate:
    """An element written as a product of conjugates ``(R_j^sign)^y`` of relators.

    Conjugators are words over an auxiliary free group whose generators are
    substituted at evaluation time (the W-generators of a P_X tuple).
    """

    factors: tuple[CertificateFactor, ...] = ()

    def __len__(self) -> int:
        return len(self.factors)

    def check(self, n_relators: int, conjugator_rank: int | None = None) -> None:
        for k, f in enumerate(self.factors, 1):
            if not 1 <= f.relator <= n_relators:
                raise IndexOutOfRangeError(
                    f"factor {k} references r{f.relator}, only {n_relators} relators exist"
                )
            if f.sign not in (1, -1):
                raise MalformedInputError(f"factor {k} has sign {f.sign}")
            if conjugator_rank is not None:
                top = max((abs(a) for a in f.conjugator.letters), default=0)
                if top > conjugator_rank:
                    raise IndexOutOfRangeError(
                        f"factor {k} conjugator uses generator {top}, only {conjugator_rank} exist"
                    )

    def rebased(self, conjugator_rank: int) -> Certificate:
        """Same certificate with conjugators read in F_conjugator_rank."""
        self.check(max((f.relator for f in self.factors), default=0), conjugator_rank)
        return Certificate(
            tuple(
                CertificateFactor(f.relator, f.sign, Word(f.conjugator.letters, conjugator_rank))
                for f in self.factors
            )
        )

    def evaluate(self, relators: Sequence[Word], substitute=None) -> Word:
        """Multiply out the certificate; ``substitute`` maps conjugators into the relators' group."""
        self.check(len(relators))
        out = relators[0].identity()
        for f in self.factors:
            r = relators[f.relator - 1]
            y = f.conjugator if substitute is None else substitute(f.conjugator)
            out = multiply(out, conjugate(r if f.sign > 0 else invert(r), y))
        return out
