"""Padded direct-product tuples P_X(R, W, H) and braids acting on them.

For ``p = len(R)`` and ``q = len(W)`` the tuple has ``k = p + q + 2`` entries::

    ((R_1,1), ..., (R_p,1), (W_1,X_1), ..., (W_q,X_q), (H^-1,X_{q+1}), (H,X_{q+2}))

Every braid here fixes the second coordinates, so acting on P_X(R, W, H)
only changes the first coordinates.  ``braid_b(t)`` conjugates all of R by
W_t (needs ``m(R) = 1``) and ``braid_c(j)`` conjugates the final pair by R_j.
Chaining them along a certificate gives an explicit braid between
P_X(R, W, H) and P_X(R, W, H^Y).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import IndexOutOfRangeError, MalformedInputError, PreconditionError
from .freegroup import Certificate, Word, conjugate, identity, invert, multiply
from .hurwitz import BraidWord, Factorization
from .product import HomSpec, PairElement


@dataclass(frozen=True)
class PXSpec:
    R: tuple[Word, ...]
    W: tuple[Word, ...]
    H: Word
    X: tuple[Word, ...]

    def __post_init__(self):
        object.__setattr__(self, "R", tuple(self.R))
        object.__setattr__(self, "W", tuple(self.W))
        object.__setattr__(self, "X", tuple(self.X))
        if len(self.X) != len(self.W) + 2:
            raise MalformedInputError(
                f"X must have len(W) + 2 = {len(self.W) + 2} entries, got {len(self.X)}"
            )
        ranks = {w.rank for w in self.R + self.W + (self.H,)}
        if len(ranks) != 1:
            raise MalformedInputError("R, W and H must live in the same free group")
        if len({x.rank for x in self.X}) != 1:
            raise MalformedInputError("X entries must live in the same free group")
        if any(x.is_identity for x in self.X):
            raise MalformedInputError("every X entry must be nontrivial")

    @property
    def p(self) -> int:
        return len(self.R)

    @property
    def q(self) -> int:
        return len(self.W)

    @property
    def strands(self) -> int:
        return self.p + self.q + 2

    @property
    def left_rank(self) -> int:
        return self.H.rank

    @property
    def right_rank(self) -> int:
        return self.X[0].rank

    def relator_product(self) -> Word:
        out = identity(self.left_rank)
        for r in self.R:
            out = multiply(out, r)
        return out

    def with_H(self, H: Word) -> PXSpec:
        return PXSpec(self.R, self.W, H, self.X)

    def with_R(self, R: Sequence[Word]) -> PXSpec:
        return PXSpec(tuple(R), self.W, self.H, self.X)

    def w_substitution(self) -> HomSpec:
        """Map the t-th generator of F_q to W_t."""
        return HomSpec(self.q, self.W)


def build_px(spec: PXSpec) -> Factorization:
    one = identity(spec.right_rank)
    lefts = spec.R + spec.W + (invert(spec.H), spec.H)
    rights = (one,) * spec.p + spec.X
    return Factorization(PairElement(a, b) for a, b in zip(lefts, rights))


def padded_right_tuple(spec: PXSpec) -> Factorization:
    """(1, ..., 1, X_1, ..., X_{q+2}) with p leading identities."""
    one = identity(spec.right_rank)
    return Factorization((one,) * spec.p + spec.X)


def slide_braid(source: int, target: int, strands: int) -> BraidWord:
    """Move the entry at ``source`` to ``target`` unchanged (1-based positions).

    Moving left, each passed entry is conjugated by the mover; moving right,
    by the mover's inverse.
    """
    if not (1 <= source <= strands and 1 <= target <= strands):
        raise IndexOutOfRangeError(f"positions {source}->{target} outside 1..{strands}")
    if target < source:
        return BraidWord(strands, tuple(range(source - 1, target - 1, -1)))
    return BraidWord(strands, tuple(-i for i in range(source, target)))


def carry_braid(source: int, target: int, strands: int) -> BraidWord:
    """Move the entry at ``source`` right to ``target`` leaving passed entries unchanged.

    The mover ends conjugated by the product of what it passed.
    """
    if not (1 <= source <= target <= strands):
        raise IndexOutOfRangeError(f"cannot carry {source}->{target} on {strands} strands")
    return BraidWord(strands, tuple(range(source, target)))


def _check_dims(p: int, q: int) -> int:
    if p < 0 or q < 0:
        raise MalformedInputError("dimensions must be non-negative")
    return p + q + 2


def braid_b_stages(p: int, q: int, t: int) -> list[BraidWord]:
    """The four stages of :func:`braid_b`, for inspecting intermediate tuples.

    Starting from R (x) W_<t (x) W_t (x) rest:

    1. W_t slides next to R:         R (x) W_t (x) W_<t^{W_t} (x) rest
    2. W_t slides to the front:      W_t (x) R^{W_t} (x) W_<t^{W_t} (x) rest
    3. W_t is carried over R^{W_t}:  R^{W_t} (x) W_t (x) W_<t^{W_t} (x) rest  (uses m(R) = 1)
    4. W_t slides back to its slot:  R^{W_t} (x) W_<t (x) W_t (x) rest
    """
    k = _check_dims(p, q)
    if not 1 <= t <= q:
        raise IndexOutOfRangeError(f"W-index {t} outside 1..{q}")
    pos = p + t
    return [
        slide_braid(pos, p + 1, k),
        slide_braid(p + 1, 1, k),
        carry_braid(1, p + 1, k),
        slide_braid(p + 1, pos, k),
    ]


def braid_b(p: int, q: int, t: int, R: Sequence[Word] | None = None) -> BraidWord:
    """Braid taking P_X(R, W, H) to P_X(R^{W_t}, W, H) whenever m(R) = 1.

    It fixes the padded second-coordinate tuple.  Pass ``R`` to have the
    m(R) = 1 precondition checked.
    """
    if R is not None:
        _require_trivial_product(R)
    return BraidWord.concat(p + q + 2, braid_b_stages(p, q, t))


def braid_c_stages(p: int, q: int, j: int) -> list[BraidWord]:
    """The three stages of :func:`braid_c`.

    With R = A (x) R_j (x) B and H' = (H^-1, H):

    1. R_j slides right up to H':   A (x) B'^{R_j^-1} (x) R_j (x) H'     (B' = rest of R, then W)
    2. R_j circles H':              A (x) B'^{R_j^-1} (x) R_j (x) H'^{R_j}  (uses m(H') = 1)
    3. R_j slides back:             A (x) R_j (x) B' (x) H'^{R_j}
    """
    k = _check_dims(p, q)
    if not 1 <= j <= p:
        raise IndexOutOfRangeError(f"R-index {j} outside 1..{p}")
    end = p + q
    return [
        slide_braid(j, end, k),
        carry_braid(end, end + 2, k) * slide_braid(end + 2, end, k),
        slide_braid(end, j, k),
    ]


def braid_c(p: int, q: int, j: int) -> BraidWord:
    """Braid taking P_X(R, W, H) to P_X(R, W, H^{R_j}); fixes the padded tuple."""
    return BraidWord.concat(p + q + 2, braid_c_stages(p, q, j))


def braid_b_length(p: int, t: int) -> int:
    return 2 * p + 2 * t - 2


def braid_c_length(p: int, q: int, j: int) -> int:
    return 2 * (p + q - j) + 4


def _require_trivial_product(R: Sequence[Word]) -> None:
    if not R:
        return
    out = R[0].identity()
    for r in R:
        out = multiply(out, r)
    if not out.is_identity:
        raise PreconditionError("the relator tuple must multiply to the identity")


def compile_conjugation(x: Word, p: int, q: int) -> BraidWord:
    """Braid realizing R -> R^x, for x written over the W-generators (rank q)."""
    top = max((abs(a) for a in x.letters), default=0)
    if top > q:
        raise IndexOutOfRangeError(f"conjugator uses W_{top} but there are {q} W-entries")
    k = p + q + 2
    out: list[int] = []
    for a in x.letters:
        b = braid_b(p, q, abs(a))
        out.extend(b.letters if a > 0 else b.inverse().letters)
    return BraidWord(k, tuple(out))


@dataclass(frozen=True)
class CompiledWitness:
    braid: BraidWord
    source_h: Word
    target_h: Word


def certificate_value(cert: Certificate, spec: PXSpec) -> Word:
    """Y = prod (R_j^sign)^{y}, with conjugators read through W_t."""
    if not cert.factors:
        return identity(spec.left_rank)
    cert.check(spec.p, spec.q)
    if not spec.q:
        return cert.evaluate(spec.R, lambda y: identity(spec.left_rank))
    return cert.rebased(spec.q).evaluate(spec.R, spec.w_substitution())


def compile_witness(cert: Certificate, spec: PXSpec) -> CompiledWitness:
    """Turn a certificate for Y into a braid from P_X(R,W,H) to P_X(R,W,H^Y).

    Each factor (j, sign, y) contributes  conj(y) . c_j^sign . conj(y)^-1 :
    R is moved to R^y, H is conjugated by the current j-th slot (R_j^y)^sign,
    and R is moved back.
    """
    _require_trivial_product(spec.R)
    cert.check(spec.p, spec.q)
    if spec.q:
        cert = cert.rebased(spec.q)
    k = spec.strands
    parts: list[BraidWord] = []
    for f in cert.factors:
        y = compile_conjugation(f.conjugator, spec.p, spec.q)
        c = braid_c(spec.p, spec.q, f.relator)
        parts += [y, c if f.sign > 0 else c.inverse(), y.inverse()]
    braid = BraidWord.concat(k, parts)
    target = conjugate(spec.H, certificate_value(cert, spec))
    return CompiledWitness(braid, spec.H, target)


def compiled_length(cert: Certificate, p: int, q: int) -> int:
    total = 0
    for f in cert.factors:
        total += 2 * sum(braid_b_length(p, abs(a)) for a in f.conjugator.letters)
        total += braid_c_length(p, q, f.relator)
    return total


def verify_witness(spec: PXSpec, witness: CompiledWitness) -> bool:
    return build_px(spec.with_H(witness.source_h)) * witness.braid == build_px(
        spec.with_H(witness.target_h)
    )
