"""The Hurwitz (right) action of braid groups on factorizations.

The engine is generic over the element group: anything with ``*``,
``inverse()``, ``identity()``, ``conjugate(t)`` and equality works, in
particular :class:`~hurwitzwp.freegroup.Word` and
:class:`~hurwitzwp.product.PairElement`.

Letters of a braid word are applied left to right::

    (..., f_i, f_{i+1}, ...) s_i      = (..., f_{i+1}, f_{i+1}^-1 f_i f_{i+1}, ...)
    (..., f_i, f_{i+1}, ...) s_i^-1   = (..., f_i f_{i+1} f_i^-1, f_i, ...)
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Iterable, Sequence

from .errors import IndexOutOfRangeError, MalformedInputError
from .product import PairElement

# Set to True (the test suite does) to recompute and compare the cached
# product every time a factorization is built with a supplied product.
CHECK_PRODUCTS = False


def _product(elements: Sequence[Any], identity: Any) -> Any:
    out = identity
    for f in elements:
        out = out * f
    return out


class Factorization:
    """An immutable tuple of group elements with its cached product m(F)."""

    __slots__ = ("elements", "product")

    def __init__(self, elements: Iterable[Any], product: Any = None):
        elements = tuple(elements)
        if product is None:
            if not elements:
                raise MalformedInputError(
                    "an empty factorization needs an explicit identity product"
                )
            product = _product(elements[1:], elements[0])
        elif CHECK_PRODUCTS:
            expected = _product(elements, product.identity())
            if expected != product:
                raise AssertionError(f"cached product {product} != recomputed {expected}")
        object.__setattr__(self, "elements", elements)
        object.__setattr__(self, "product", product)

    def __setattr__(self, name, value):
        raise AttributeError("Factorization is immutable")

    @classmethod
    def empty(cls, identity: Any) -> Factorization:
        return cls((), identity)

    def __len__(self) -> int:
        return len(self.elements)

    def __getitem__(self, i):
        return self.elements[i]

    def __iter__(self):
        return iter(self.elements)

    def __eq__(self, other) -> bool:
        return isinstance(other, Factorization) and self.elements == other.elements

    def __hash__(self) -> int:
        return hash(self.elements)

    def __repr__(self) -> str:
        return f"Factorization({self.elements!r})"

    def __str__(self) -> str:
        from .grammar import format_factorization

        return format_factorization(self)

    def identity(self) -> Any:
        return self.product.identity()

    def recompute_product(self) -> Any:
        return _product(self.elements, self.identity())

    def replace(self, start: int, new: Sequence[Any]) -> Factorization:
        """Overwrite positions ``start..start+len(new)-1`` (0-based), keeping the product."""
        els = self.elements
        return Factorization(els[:start] + tuple(new) + els[start + len(new) :], self.product)

    def __mul__(self, b: BraidWord) -> Factorization:
        return apply_braid(self, b)

    def left(self) -> Factorization:
        """First coordinates of a factorization over pairs."""
        return Factorization((p.left for p in self.elements), self.product.left)

    def right(self) -> Factorization:
        return Factorization((p.right for p in self.elements), self.product.right)


@dataclass(frozen=True, slots=True)
class BraidWord:
    """A word in the Artin generators of B_strands; ``i`` is s_i, ``-i`` is s_i^-1."""

    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.strands < 1:
            raise MalformedInputError("a braid needs at least one strand")
        for a in self.letters:
            if not isinstance(a, int) or a == 0 or abs(a) > self.strands - 1:
                raise MalformedInputError(f"s_{a} is not a generator of B_{self.strands}")

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __mul__(self, other: BraidWord) -> BraidWord:
        if self.strands != other.strands:
            raise MalformedInputError(
                f"cannot concatenate braids on {self.strands} and {other.strands} strands"
            )
        return BraidWord(self.strands, self.letters + other.letters)

    def inverse(self) -> BraidWord:
        return BraidWord(self.strands, tuple(-a for a in reversed(self.letters)))

    __invert__ = inverse

    def __pow__(self, k: int) -> BraidWord:
        base = self if k >= 0 else self.inverse()
        return BraidWord(self.strands, base.letters * abs(k))

    def shifted(self, offset: int, strands: int) -> BraidWord:
        """Image under s_i -> s_{i+offset} in B_strands."""
        return BraidWord(strands, tuple(a + offset if a > 0 else a - offset for a in self.letters))

    @classmethod
    def concat(cls, strands: int, parts: Iterable[BraidWord]) -> BraidWord:
        out: list[int] = []
        for p in parts:
            if p.strands != strands:
                raise MalformedInputError("strand count mismatch in concatenation")
            out.extend(p.letters)
        return cls(strands, tuple(out))

    def __str__(self) -> str:
        from .grammar import format_braid

        return format_braid(self)


def sigma(i: int, strands: int, sign: int = 1) -> BraidWord:
    return BraidWord(strands, (i if sign > 0 else -i,))


def apply_generator(F: Factorization, i: int, sign: int = 1) -> Factorization:
    """Act by s_i (``sign > 0``) or s_i^-1 on the 1-based positions i, i+1."""
    if not 1 <= i <= len(F) - 1:
        raise IndexOutOfRangeError(f"s_{i} does not act on a tuple of length {len(F)}")
    a, b = F.elements[i - 1], F.elements[i]
    if sign > 0:
        new = (b, b.inverse() * a * b)
    else:
        new = (a * b * a.inverse(), a)
    return F.replace(i - 1, new)


def apply_braid(F: Factorization, b: BraidWord) -> Factorization:
    if b.strands != len(F):
        raise MalformedInputError(
            f"braid on {b.strands} strands cannot act on a tuple of length {len(F)}"
        )
    els = list(F.elements)
    for a in b.letters:
        i = abs(a) - 1
        x, y = els[i], els[i + 1]
        if a > 0:
            els[i], els[i + 1] = y, y.inverse() * x * y
        else:
            els[i], els[i + 1] = x * y * x.inverse(), x
    return Factorization(els, F.product)


def aij_word(i: int, j: int, strands: int, sign: int = 1) -> BraidWord:
    """The pure braid A_ij = s_i^-1 ... s_{j-2}^-1 s_{j-1}^2 s_{j-2} ... s_i (or its inverse)."""
    if not 1 <= i < j <= strands:
        raise IndexOutOfRangeError(f"A_{i}{j} is not defined in B_{strands}")
    down = tuple(-k for k in range(i, j - 1))
    mid = (j - 1, j - 1) if sign > 0 else (-(j - 1), -(j - 1))
    up = tuple(range(j - 2, i - 1, -1))
    return BraidWord(strands, down + mid + up)


def apply_Aij(F: Factorization, i: int, j: int, sign: int = 1) -> Factorization:
    """Act by A_ij^{+-1} through its closed form rather than by composing letters.

    With F = X (x) a (x) Y (x) b (x) Z (a at position i, b at position j)::

        F A_ij    = X (x) a^b (x) Y^{a^-1 a^b} (x) b^{a^b} (x) Z
        F A_ij^-1 = X (x) a' (x) Y^{a^-1 a'} (x) b^{a^-1} (x) Z,   a' = a^{(b^{a^-1})^-1}
    """
    if not 1 <= i < j <= len(F):
        raise IndexOutOfRangeError(f"A_{i}{j} does not act on a tuple of length {len(F)}")
    els = F.elements
    a, b = els[i - 1], els[j - 1]
    a_inv = a.inverse()
    if sign > 0:
        new_a = a.conjugate(b)
        new_b = b.conjugate(new_a)
    else:
        new_b = b.conjugate(a_inv)
        new_a = a.conjugate(new_b.inverse())
    t = a_inv * new_a
    middle = tuple(y.conjugate(t) for y in els[i:j - 1])
    return Factorization(els[: i - 1] + (new_a,) + middle + (new_b,) + els[j:], F.product)


def concat(F: Factorization, K: Factorization) -> Factorization:
    """F (x) K: concatenation, with m(F (x) K) = m(F) m(K)."""
    if type(F.product) is not type(K.product):
        raise MalformedInputError("cannot concatenate factorizations over different groups")
    return Factorization(F.elements + K.elements, F.product * K.product)


def conjugate_tuple(X: Factorization, Y: Factorization, inverse: bool = False) -> Factorization:
    """X^Y: every element conjugated by m(Y) (by m(Y)^-1 when ``inverse``)."""
    t = Y.product.inverse() if inverse else Y.product
    return Factorization((g.conjugate(t) for g in X.elements), X.product.conjugate(t))


def conjugate_by(X: Factorization, t: Any) -> Factorization:
    return Factorization((g.conjugate(t) for g in X.elements), X.product.conjugate(t))


def oplus(V: Factorization, W: Factorization) -> Factorization:
    """Pair two equal-length factorizations elementwise into the direct product."""
    if len(V) != len(W):
        raise MalformedInputError(f"cannot pair tuples of lengths {len(V)} and {len(W)}")
    return Factorization(
        (PairElement(v, w) for v, w in zip(V.elements, W.elements)),
        PairElement(V.product, W.product),
    )


def conjugacy_multiset(F: Factorization) -> list:
    """Sorted conjugacy-class labels of the entries; invariant under every braid."""
    return sorted(f.conjugacy_key() for f in F.elements)
