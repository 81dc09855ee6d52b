import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from helpers import all_words, brute_max_exponents, naive_inv, naive_is_primitive, naive_mul, naive_reduce
from hurwitzwp.errors import InvalidInputError, MalformedInputError, RankMismatchError, UnsupportedRankError
from hurwitzwp.freegroup import (
    Certificate,
    CertificateFactor,
    Word,
    conjugacy_key,
    conjugate,
    cyclic_reduce,
    generator,
    identity,
    invert,
    is_conjugate,
    is_cyclically_reduced,
    make_rootless,
    make_rootless_with_provenance,
    multiply,
    reduce,
    root_decompose,
)
from hurwitzwp.grammar import parse_word
from strategies import nontrivial_words, words

x1, x2 = generator(1, 2), generator(2, 2)


def w(text, rank=2):
    return parse_word(text, rank)


class TestReduce:
    def test_inverse_pair_cancels(self):
        assert reduce([1, -1], 2).is_identity

    def test_inner_cancellation(self):
        assert reduce([1, 2, -2, 1], 2).letters == (1, 1)

    def test_already_reduced(self):
        assert reduce([-2, 1, 1, 2], 2).letters == (-2, 1, 1, 2)

    def test_letter_beyond_rank(self):
        with pytest.raises(MalformedInputError):
            reduce([3], 2)

    def test_zero_letter(self):
        with pytest.raises(MalformedInputError):
            reduce([0], 2)

    def test_word_of_reduces(self):
        assert Word.of((1, 2, -2, -1), 2).is_identity

    @given(st.lists(st.sampled_from([1, -1, 2, -2, 3, -3]), max_size=20))
    def test_matches_rescanning_oracle(self, raw):
        assert reduce(raw, 3).letters == naive_reduce(raw)

    @given(words(3, 10))
    def test_idempotent(self, u):
        assert reduce(u.letters, 3) == u


class TestGroupOps:
    def test_conjugate_by_identity(self):
        assert conjugate(x1, identity(2)) == x1

    def test_conjugate_by_generator(self):
        assert conjugate(x1, x2).letters == (-2, 1, 2)

    def test_multiply_with_cancellation(self):
        assert multiply(w("x1 x2"), w("x2^-1 x1")) == w("x1^2")

    def test_rank_mismatch(self):
        with pytest.raises(RankMismatchError):
            multiply(x1, generator(1, 3))

    def test_operators(self):
        assert x1 * x2 == multiply(x1, x2)
        assert ~x1 == invert(x1)
        assert (x1 * x2) ** -2 == invert(x1 * x2) * invert(x1 * x2)
        assert x1 ** 0 == identity(2)

    @given(words(2, 8), words(2, 8), words(2, 8))
    def test_associative(self, a, b, c):
        assert (a * b) * c == a * (b * c)

    @given(words(2, 8), words(2, 8))
    def test_multiply_matches_oracle(self, a, b):
        assert multiply(a, b).letters == naive_mul(a.letters, b.letters)

    @given(words(2, 8))
    def test_inverse(self, a):
        assert (a * invert(a)).is_identity
        assert invert(a).letters == naive_inv(a.letters)

    @given(words(2, 6), words(2, 6), words(2, 6))
    def test_conjugation_is_right_action(self, u, s, t):
        assert conjugate(conjugate(u, s), t) == conjugate(u, s * t)


class TestCyclicReduce:
    def test_single_strip(self):
        core, p = cyclic_reduce(w("x2^-1 x1 x2"))
        assert core == x1 and p == w("x2^-1")

    def test_already_cyclic(self):
        assert cyclic_reduce(w("x1 x2")) == (w("x1 x2"), identity(2))

    def test_empty(self):
        assert cyclic_reduce(identity(2)) == (identity(2), identity(2))

    @given(words(2, 12))
    def test_decomposition(self, u):
        core, p = cyclic_reduce(u)
        assert is_cyclically_reduced(core)
        assert conjugate(u, p) == core
        assert len(core) + 2 * len(p) == len(u)


class TestConjugacy:
    def test_explicit_conjugator(self):
        assert is_conjugate(x1, w("x2^-1 x1 x2"))

    def test_distinct_generators(self):
        assert not is_conjugate(x1, x2)

    def test_rotation(self):
        # frozen: brute force over conjugators of length <= 2
        conj = {naive_mul(naive_inv(t), (1, 2), t) for t in all_words(2, 2)}
        assert (2, 1) in conj
        assert is_conjugate(w("x1 x2"), w("x2 x1"))

    def test_inverse_not_conjugate(self):
        assert not is_conjugate(x1, invert(x1))

    @given(words(2, 6), words(2, 4))
    def test_conjugates_detected(self, u, t):
        assert is_conjugate(u, conjugate(u, t))
        assert conjugacy_key(u) == conjugacy_key(conjugate(u, t))

    def test_against_brute_force_length_4(self):
        # small exhaustive slice; the acceptance suite covers length <= 6
        ws = all_words(2, 4)
        classes = {}
        conjugators = all_words(2, 4)
        for u in ws:
            for t in conjugators:
                v = naive_mul(naive_inv(t), u, t)
                if len(v) <= 4:
                    classes.setdefault(u, set()).add(v)
        for u in ws:
            for v in ws:
                expect = v in classes[u]
                assert is_conjugate(Word(u, 2), Word(v, 2)) == expect, (u, v)


class TestRoots:
    def test_generator_power(self):
        assert root_decompose(w("x1^3")) == (x1, 3)

    def test_primitive(self):
        assert root_decompose(w("x1 x2")) == (w("x1 x2"), 1)

    def test_square(self):
        # frozen from brute_max_exponents(2, 4)
        table = brute_max_exponents(2, 4)
        assert table[(1, 2, 1, 2)] == ((1, 2), 2)
        assert root_decompose(w("x1 x2 x1 x2")) == (w("x1 x2"), 2)

    def test_identity_raises(self):
        with pytest.raises(InvalidInputError):
            root_decompose(identity(2))

    def test_non_cyclically_reduced(self):
        u = w("x2 x1^4 x2^-1")
        root, k = root_decompose(u)
        assert k == 4 and root == w("x2 x1 x2^-1")

    @given(nontrivial_words(2, 10))
    def test_power_identity(self, u):
        root, k = root_decompose(u)
        assert root ** k == u
        if k > 1:
            assert root_decompose(root)[1] == 1


class TestMakeRootless:
    def test_case_single_generator(self):
        assert make_rootless(w("x1^3")) == w("x2^-1 x1^3 x2 x1^3")

    def test_case_mixed_generators(self):
        A = make_rootless(w("x1 x2"))
        block = w("x2 x1 x2 x1 x2 x1")
        assert A.letters == naive_mul(naive_inv(block.letters), (1, 2), block.letters, (1, 2))
        assert len(A) == 16

    def test_identity_raises(self):
        with pytest.raises(InvalidInputError):
            make_rootless(identity(2))

    def test_rank_one_raises(self):
        with pytest.raises(UnsupportedRankError):
            make_rootless(generator(1, 1))

    @given(nontrivial_words(2, 8))
    def test_output_rootless_and_in_normal_closure(self, y):
        A, factors = make_rootless_with_provenance(y)
        assert is_cyclically_reduced(A)
        assert naive_is_primitive(A.letters)
        assert root_decompose(A)[1] == 1
        prod = identity(2)
        for f in factors:
            prod = prod * f.evaluate(y)
        assert prod == A

    @given(nontrivial_words(3, 6))
    def test_rank_three(self, y):
        A = make_rootless(y)
        assert A.rank == 3 and root_decompose(A)[1] == 1

    def test_length_bound_cyclically_reduced(self):
        rng = random.Random(7)
        for _ in range(200):
            n = rng.randint(2, 6)
            letters = []
            while len(letters) < n:
                a = rng.choice([1, -1, 2, -2])
                if letters and letters[-1] == -a:
                    continue
                letters.append(a)
            y = Word(tuple(letters), 2)
            if not is_cyclically_reduced(y) or len({abs(a) for a in letters}) == 1:
                continue
            assert len(make_rootless(y)) <= 6 * len(y) + 4


def _centralizes(u, v):
    return u * v == v * u


def test_commuting_words_are_powers_of_common_element():
    # exhaustive for |u|, |v| <= 4: commuting nontrivial words share a root
    ws = [Word(t, 2) for t in all_words(2, 4) if t]
    for u in ws:
        ru = root_decompose(u)[0]
        for v in ws:
            if _centralizes(u, v):
                rv = root_decompose(v)[0]
                assert rv == ru or rv == invert(ru), (u, v)


class TestCertificate:
    def test_evaluate(self):
        r = w("x1 x2 x1^-1 x2^-1")
        cert = Certificate((CertificateFactor(1, -1, w("x2 x1")),))
        assert cert.evaluate((r,)) == conjugate(invert(r), w("x2 x1"))

    def test_index_error(self):
        from hurwitzwp.errors import IndexOutOfRangeError

        cert = Certificate((CertificateFactor(2, 1, identity(1)),))
        with pytest.raises(IndexOutOfRangeError):
            cert.check(1)

    def test_rebased(self):
        cert = Certificate((CertificateFactor(1, 1, generator(1, 1)),)).rebased(3)
        assert cert.factors[0].conjugator.rank == 3
