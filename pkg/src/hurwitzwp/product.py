"""Direct products of two free groups and homomorphism pushes.

Elements of ``F_r1 (+) F_r2`` are :class:`PairElement` values and share the
element interface of :class:`~hurwitzwp.freegroup.Word` (``*``, ``inverse``,
``identity``, ``conjugate``, ``is_identity``, ``conjugacy_key``), which is all
the Hurwitz action engine needs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Sequence

from .errors import MalformedInputError, RankMismatchError
from .freegroup import Word, conjugacy_key, generator, identity, invert, multiply, reduce


@dataclass(frozen=True, slots=True)
class PairElement:
    left: Word
    right: Word

    def __mul__(self, other: PairElement) -> PairElement:
        return pair_multiply(self, other)

    def inverse(self) -> PairElement:
        return pair_invert(self)

    __invert__ = inverse

    def identity(self) -> PairElement:
        return PairElement(self.left.identity(), self.right.identity())

    @property
    def is_identity(self) -> bool:
        return self.left.is_identity and self.right.is_identity

    def conjugate(self, t: PairElement) -> PairElement:
        return PairElement(self.left.conjugate(t.left), self.right.conjugate(t.right))

    def conjugacy_key(self) -> tuple:
        # conjugacy in a direct product is componentwise
        return (conjugacy_key(self.left), conjugacy_key(self.right))

    def size(self) -> int:
        return max(len(self.left), len(self.right))

    def key(self) -> tuple:
        return ("p", self.left.key(), self.right.key())

    @property
    def ranks(self) -> tuple[int, int]:
        return (self.left.rank, self.right.rank)

    def __str__(self) -> str:
        from .grammar import format_pair

        return format_pair(self)


def pair_identity(r1: int, r2: int) -> PairElement:
    return PairElement(identity(r1), identity(r2))


def pair_multiply(p: PairElement, q: PairElement) -> PairElement:
    if p.ranks != q.ranks:
        raise RankMismatchError(f"pair ranks differ: {p.ranks} vs {q.ranks}")
    return PairElement(multiply(p.left, q.left), multiply(p.right, q.right))


def pair_invert(p: PairElement) -> PairElement:
    return PairElement(invert(p.left), invert(p.right))


def embed_rank(w: Word) -> Word:
    """Push ``w`` into F_2 along ``x_i -> x1^-i x2 x1^i``."""
    out: list[int] = []
    for a in w.letters:
        i = abs(a)
        out += [-1] * i + [2 if a > 0 else -2] + [1] * i
    return reduce(out, 2)


def embed_pair(p: PairElement) -> PairElement:
    return PairElement(embed_rank(p.left), embed_rank(p.right))


@dataclass(frozen=True)
class HomSpec:
    """A homomorphism out of F_source_rank, given by generator images.

    Images may be words, pairs, or any value supporting the element
    interface, so braid-group images supplied by the caller work as well.
    """

    source_rank: int
    images: tuple[Any, ...]

    def __post_init__(self):
        if len(self.images) != self.source_rank:
            raise MalformedInputError(
                f"expected {self.source_rank} generator images, got {len(self.images)}"
            )
        if self.source_rank < 1:
            raise MalformedInputError("source rank must be positive")

    @classmethod
    def identity_map(cls, rank: int) -> HomSpec:
        return cls(rank, tuple(generator(i, rank) for i in range(1, rank + 1)))

    @classmethod
    def trivial(cls, rank: int, target_identity: Any) -> HomSpec:
        return cls(rank, (target_identity,) * rank)

    def __call__(self, w: Word) -> Any:
        if w.rank != self.source_rank:
            raise RankMismatchError(
                f"word of F_{w.rank} outside the source F_{self.source_rank}"
            )
        out = self.images[0].identity()
        for a in w.letters:
            img = self.images[abs(a) - 1]
            out = out * (img if a > 0 else img.inverse())
        return out


@dataclass(frozen=True)
class PairHom:
    """Componentwise homomorphism of a direct product."""

    left: HomSpec
    right: HomSpec

    def __call__(self, p: PairElement) -> PairElement:
        return PairElement(self.left(p.left), self.right(p.right))


def apply_hom(F, h):
    """Apply ``h`` elementwise to a factorization; the product is pushed too."""
    from .hurwitz import Factorization

    elements = tuple(h(f) for f in F.elements)
    return Factorization(elements, h(F.product))


def embedding_hom(rank: int) -> HomSpec:
    return HomSpec(rank, tuple(embed_rank(generator(i, rank)) for i in range(1, rank + 1)))


def pair_embedding_hom(r1: int, r2: int) -> PairHom:
    return PairHom(embedding_hom(r1), embedding_hom(r2))


def oplus_elements(left: Sequence[Word], right: Sequence[Word]) -> tuple[PairElement, ...]:
    if len(left) != len(right):
        raise MalformedInputError("componentwise pairing needs equal lengths")
    return tuple(PairElement(a, b) for a, b in zip(left, right))
