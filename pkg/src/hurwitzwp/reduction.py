"""From word problems to 1-factorizations of F_2 (+) F_2.

``ftl_s1(n, V, a)`` packs (V, a) into a P_X tuple over F_n (+) F_{n+1} and
embeds it; ``ftl_s2`` replaces ``a`` by ``H^a`` for a fixed root-free H in
the normal closure of V; ``ftl_b`` does the same for a finite presentation
after rewriting its generators positionally to x_1..x_n.

All braid computations happen before embedding.  The embedding is a
homomorphism, so any braid relating two un-embedded tuples relates their
images as well.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .constructions import CompiledWitness, PXSpec, build_px, compile_witness
from .errors import InvalidInputError, MalformedInputError, RankMismatchError
from .freegroup import (
    Certificate,
    CertificateFactor,
    Presentation,
    Word,
    conjugate,
    cyclic_reduce,
    generator,
    identity,
    invert,
    make_rootless_with_provenance,
    multiply,
    root_decompose,
)
from .hurwitz import Factorization
from .product import HomSpec, apply_hom, pair_embedding_hom


@dataclass(frozen=True)
class FTLInstance:
    n: int
    V: tuple[Word, ...]
    a: Word

    def __post_init__(self):
        object.__setattr__(self, "V", tuple(self.V))
        if self.n < 1:
            raise MalformedInputError("the free group needs rank >= 1")
        for w in self.V + (self.a,):
            if w.rank != self.n:
                raise RankMismatchError(f"word of F_{w.rank} in an F_{self.n} instance")


@dataclass(frozen=True)
class RootlessChoice:
    """The fixed root-free H with a certificate writing it over V."""

    H: Word
    provenance: Certificate

    def expand(self, V: tuple[Word, ...]) -> Word:
        return self.provenance.evaluate(V)


def _product(words, rank: int) -> Word:
    out = identity(rank)
    for w in words:
        out = multiply(out, w)
    return out


def padded_relators(n: int, V: tuple[Word, ...]) -> tuple[Word, ...]:
    """(v_1, ..., v_m, (v_1 ... v_m)^-1); multiplies to 1."""
    return tuple(V) + (invert(_product(V, n)),)


def generator_tuple(n: int) -> tuple[Word, ...]:
    """(z_1, ..., z_n, (z_1 ... z_n)^-1) in F_n."""
    z = tuple(generator(i, n) for i in range(1, n + 1))
    return z + (invert(_product(z, n)),)


def marker_tuple(n: int) -> tuple[Word, ...]:
    """(X_1, ..., X_n, (X_1 ... X_n)^-1, X_{n+1}^-1, X_{n+1}) in F_{n+1}."""
    r = n + 1
    xs = tuple(generator(i, r) for i in range(1, n + 1))
    last = generator(r, r)
    return xs + (invert(_product(xs, r)), invert(last), last)


def ftl_s1_spec(inst: FTLInstance) -> PXSpec:
    n = inst.n
    return PXSpec(padded_relators(n, inst.V), generator_tuple(n), inst.a, marker_tuple(n))


def embed_factorization(F: Factorization) -> Factorization:
    """Push a factorization over F_r1 (+) F_r2 into F_2 (+) F_2."""
    r1, r2 = F.product.ranks
    return apply_hom(F, pair_embedding_hom(r1, r2))


def ftl_s1(inst: FTLInstance, embed: bool = True) -> Factorization:
    F = build_px(ftl_s1_spec(inst))
    return embed_factorization(F) if embed else F


def _validate_s2(n: int, V: tuple[Word, ...]) -> None:
    if n < 2:
        raise InvalidInputError("the second reduction needs a free group of rank >= 2")
    if all(v.is_identity for v in V):
        raise InvalidInputError("the second reduction needs a nontrivial relator")


@lru_cache(maxsize=256)
def select_rootless(n: int, V: tuple[Word, ...]) -> RootlessChoice:
    """Deterministically fix a root-free H in the normal closure of V.

    Uses the first nontrivial v_i; depends on (n, V) only.
    """
    _validate_s2(n, V)
    i = next(k for k, v in enumerate(V, 1) if not v.is_identity)
    H, factors = make_rootless_with_provenance(V[i - 1])
    cert = Certificate(tuple(CertificateFactor(i, f.sign, f.conjugator) for f in factors))
    return RootlessChoice(H, cert)


def ftl_s2_spec(inst: FTLInstance) -> PXSpec:
    choice = select_rootless(inst.n, inst.V)
    return ftl_s1_spec(FTLInstance(inst.n, inst.V, conjugate(choice.H, inst.a)))


def ftl_s2(inst: FTLInstance, embed: bool = True) -> Factorization:
    _validate_s2(inst.n, inst.V)
    choice = select_rootless(inst.n, inst.V)
    return ftl_s1(FTLInstance(inst.n, inst.V, conjugate(choice.H, inst.a)), embed)


def _fresh_name(taken: tuple[str, ...]) -> str:
    name, k = "t", 0
    while name in taken:
        k += 1
        name = f"t{k}"
    return name


def normalize_presentation(p: Presentation) -> Presentation:
    """Add a generator t and the relator t when there are < 2 generators or no nontrivial relator.

    The group is unchanged up to isomorphism and words keep their meaning.
    """
    if p.rank >= 2 and any(not r.is_identity for r in p.relators):
        return p
    r = p.rank + 1
    gens = p.generators + (_fresh_name(p.generators),)
    rels = tuple(Word(w.letters, r) for w in p.relators) + (generator(r, r),)
    return Presentation(gens, rels)


def _lift(w: Word, rank: int) -> Word:
    if w.rank > rank:
        raise RankMismatchError(f"word of F_{w.rank} in a rank-{rank} presentation")
    return Word(w.letters, rank)


def ftl_b_instance(p: Presentation, a: Word) -> FTLInstance:
    q = normalize_presentation(p)
    if not q.relators:
        raise InvalidInputError("presentation has no relators after normalization")
    return FTLInstance(q.rank, q.relators, _lift(a, q.rank))


def ftl_b(p: Presentation, a: Word, embed: bool = True) -> Factorization:
    return ftl_s2(ftl_b_instance(p, a), embed)


def transfer_hom(n: int, a: Word) -> HomSpec:
    """X_i -> z_i (i <= n), X_{n+1} -> a: sends the marker tuple to W (x) a^-1 (x) a."""
    return HomSpec(n + 1, tuple(generator(i, n) for i in range(1, n + 1)) + (a,))


@dataclass(frozen=True)
class EquivalenceWitness:
    """Braid relating the FTL_B tuples of two words, checked before and after embedding."""

    witness: CompiledWitness
    source: Factorization
    target: Factorization
    verified: bool
    verified_embedded: bool


def _conjugator_certificate(cert: Certificate, n: int, m: int) -> Certificate:
    """Read a certificate over the presentation relators against the padded tuple Vf.

    Relator j of V stays slot j of Vf; conjugators over the generators z_i are
    words over W_1..W_n.
    """
    cert.check(m, n)
    return cert.rebased(n + 1) if cert.factors else cert


def compile_equivalence(
    p: Presentation, a: Word, b: Word, cert: Certificate
) -> EquivalenceWitness:
    """Compile a certificate for ``a^-1 b`` (over the relators) into a braid
    mapping ftl_b(p, a) to ftl_b(p, b).

    The braid acts on the un-embedded tuples; the result is re-checked after
    embedding.
    """
    inst_a = ftl_b_instance(p, a)
    inst_b = ftl_b_instance(p, b)
    spec_a = ftl_s2_spec(inst_a)
    spec_b = ftl_s2_spec(inst_b)
    full = _conjugator_certificate(cert, inst_a.n, len(inst_a.V))
    witness = compile_witness(full, spec_a)
    src, dst = build_px(spec_a), build_px(spec_b)
    reached = src * witness.braid
    ok = reached == dst
    ok_embedded = embed_factorization(src) * witness.braid == embed_factorization(dst)
    return EquivalenceWitness(witness, src, dst, ok, ok_embedded)


def word_info(w: Word) -> dict:
    core, prefix = cyclic_reduce(w)
    info = {"reduced": w, "core": core, "conjugator": prefix}
    if w.is_identity:
        info.update(root=None, exponent=None)
    else:
        root, k = root_decompose(w)
        info.update(root=root, exponent=k)
    return info


__all__ = [
    "FTLInstance",
    "RootlessChoice",
    "EquivalenceWitness",
    "padded_relators",
    "generator_tuple",
    "marker_tuple",
    "ftl_s1_spec",
    "ftl_s1",
    "ftl_s2_spec",
    "ftl_s2",
    "select_rootless",
    "normalize_presentation",
    "ftl_b_instance",
    "ftl_b",
    "embed_factorization",
    "transfer_hom",
    "compile_equivalence",
    "word_info",
]
