"""Hurwitz equivalence of factorizations and the word problem.

Free-group arithmetic, the Hurwitz braid action, padded direct-product
tuples with explicit stabilizer braids, a certificate-to-braid compiler,
the word-problem reduction pipeline and a budgeted orbit search.
"""

from .constructions import (
    CompiledWitness,
    PXSpec,
    braid_b,
    braid_c,
    build_px,
    compile_conjugation,
    compile_witness,
    slide_braid,
)
from .freegroup import (
    Certificate,
    CertificateFactor,
    Presentation,
    Word,
    conjugate,
    cyclic_reduce,
    invert,
    is_conjugate,
    make_rootless,
    multiply,
    reduce,
    root_decompose,
)
from .hurwitz import (
    BraidWord,
    Factorization,
    apply_Aij,
    apply_braid,
    apply_generator,
    concat,
    conjugate_tuple,
    oplus,
)
from .orbit import SearchBudget, SearchOutcome, canonical_key, orbit_search, stabilizer_check
from .product import HomSpec, PairElement, apply_hom, embed_rank, pair_invert, pair_multiply
from .reduction import FTLInstance, compile_equivalence, ftl_b, ftl_s1, ftl_s2

__version__ = "0.1.0"

__all__ = [
    "CompiledWitness",
    "PXSpec",
    "braid_b",
    "braid_c",
    "build_px",
    "compile_conjugation",
    "compile_witness",
    "slide_braid",
    "Certificate",
    "CertificateFactor",
    "Presentation",
    "Word",
    "conjugate",
    "cyclic_reduce",
    "invert",
    "is_conjugate",
    "make_rootless",
    "multiply",
    "reduce",
    "root_decompose",
    "BraidWord",
    "Factorization",
    "apply_Aij",
    "apply_braid",
    "apply_generator",
    "concat",
    "conjugate_tuple",
    "oplus",
    "SearchBudget",
    "SearchOutcome",
    "canonical_key",
    "orbit_search",
    "stabilizer_check",
    "HomSpec",
    "PairElement",
    "apply_hom",
    "embed_rank",
    "pair_invert",
    "pair_multiply",
    "FTLInstance",
    "compile_equivalence",
    "ftl_b",
    "ftl_s1",
    "ftl_s2",
]
