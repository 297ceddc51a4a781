"""Split criterion, canonical decomposition, certificates."""

from __future__ import annotations

import itertools
import random

import pytest

import groupcodes as gc
from groupcodes.decompose import (CERT_CONSTANT_WEIGHT, CERT_MDS, CERT_PERFECT,
                                  CERT_PRIME)
from groupcodes.errors import PreconditionError, ResourceLimitError
from groupcodes.catalog import binary_repetition, repetition_code


def exhaustive_split_search(C):
    """Oracle: scan every proper bipartition with plain set projections."""
    n = C.length
    for size in range(1, n):
        for rest in itertools.combinations(range(1, n), size - 1):
            J = (0,) + rest
            K = tuple(i for i in range(n) if i not in set(J))
            pj = len({tuple(w[i] for i in J) for w in C.words})
            pk = len({tuple(w[i] for i in K) for w in C.words})
            if pj * pk == C.size:
                return J
    return None


def test_split_test_z4_rows(z4_code):
    assert not gc.split_test(z4_code, (0,))   # 4 * 4 = 16 != 8
    assert not gc.split_test(z4_code, (1,))   # 2 * 8 = 16 != 8
    assert not gc.split_test(z4_code, (2,))   # 4 * 4 = 16 != 8


def test_split_test_on_manufactured_sum(code_d, rep3):
    total = gc.direct_sum(code_d, rep3)
    assert gc.split_test(total, (0, 1, 2))
    assert gc.split_test(total, (3, 4, 5))  # complement symmetric
    assert not gc.split_test(total, (0, 3))


def test_split_test_invalid_subsets(code_d):
    with pytest.raises(PreconditionError):
        gc.split_test(code_d, ())
    with pytest.raises(PreconditionError):
        gc.split_test(code_d, (0, 1, 2))
    with pytest.raises(PreconditionError):
        gc.split_test(code_d, (5,))


def test_is_decomposable_z4_absent(z4_code):
    assert gc.is_decomposable(z4_code, use_certificates=False) is None


def test_is_decomposable_full_plane(z2):
    assert gc.is_decomposable(gc.full_space(z2, 2), use_certificates=False) == (0,)


def test_is_decomposable_interleaved(code_d):
    C = gc.interleave(code_d, 2)
    assert gc.is_decomposable(C, use_certificates=False) == (0, 2, 4)


def test_is_decomposable_canonical_choice(code_d, z2):
    total = gc.direct_sum(code_d, gc.full_space(z2, 1))
    # witnesses containing coordinate 0 start at size 3; (0,1,2) is least
    assert gc.is_decomposable(total, use_certificates=False) == (0, 1, 2)


def test_is_decomposable_matches_oracle(corpus):
    for C in corpus:
        if C.length < 2 or C.length > 9:
            continue
        assert gc.is_decomposable(C, use_certificates=False) == exhaustive_split_search(C)


def test_is_decomposable_cap_carries_certificate():
    wide = binary_repetition(25)
    with pytest.raises(ResourceLimitError) as err:
        gc.is_decomposable(wide)
    assert err.value.certificate == CERT_MDS


def test_decompose_square_sum(code_d):
    dec = gc.decompose(gc.direct_sum(code_d, code_d))
    assert dec.partition.blocks == ((0, 1, 2), (3, 4, 5))
    assert dec.isotypes == ((0, 2),)
    assert dec.isotype_members == ((0, 1),)
    assert all(set(c.words) == set(code_d.words) for c in dec.components)


def test_decompose_indecomposable_single_block(z4_code):
    dec = gc.decompose(z4_code)
    assert dec.partition.blocks == ((0, 1, 2),)
    assert dec.indecomposable
    assert dec.isotypes == ((0, 1),)


def test_decompose_full_space_splits_to_letters(z2):
    dec = gc.decompose(gc.full_space(z2, 3))
    assert dec.partition.blocks == ((0,), (1,), (2,))
    assert dec.isotypes == ((0, 3),)


def test_decompose_peels_constant_coordinates(z4):
    C = gc.Code.from_words(z4, 3, [(2, 0, 0), (2, 1, 1), (2, 2, 2)])
    dec = gc.decompose(C)
    assert dec.partition.blocks == ((0,), (1, 2))
    assert dec.components[0].words == ((2,),)
    assert dec.certificates[1] == CERT_PRIME  # 3 words, nondegenerate block


def test_decompose_reconstruction_witness(corpus):
    for C in corpus:
        if C.length > 9:
            continue
        dec = gc.decompose(C)
        rebuilt = gc.apply_to_code(dec.witness, C)
        target = gc.direct_sum_all(list(dec.components))
        assert rebuilt.words == target.words
        sizes = 1
        for comp in dec.components:
            sizes *= comp.size
        assert sizes == C.size
        assert sum(len(b) for b in dec.partition.blocks) == C.length
        for comp in dec.components:
            assert gc.is_decomposable(comp, use_certificates=False) is None


def test_decompose_plain_code_with_scramble(z2):
    rng = random.Random(17)
    pair = gc.Code.from_words(z2, 2, [(0, 1), (1, 0)])
    total = gc.direct_sum(binary_repetition(3), pair)
    # scramble with an arbitrary isometry (configs need not fix identity)
    perm = list(range(5))
    rng.shuffle(perm)
    maps = []
    for _ in range(5):
        m = [0, 1]
        rng.shuffle(m)
        maps.append(tuple(m))
    iso = gc.Isometry(gc.Configuration(tuple(maps)), gc.Equivalence(tuple(perm)))
    scrambled = gc.apply_to_code(iso, total)
    dec = gc.decompose(scrambled)
    assert len(dec.components) == 2
    kinds = sorted((c.length, c.size) for c in dec.components)
    assert kinds == [(2, 2), (3, 2)]
    for comp in dec.components:
        original = binary_repetition(3) if comp.length == 3 else pair
        assert gc.code_equivalent(comp, original) is not None


def test_certificate_priority_and_examples(rep3, code_d, hamming, z2):
    assert gc.indecomposability_certificate(hamming) == CERT_PERFECT
    assert gc.indecomposability_certificate(rep3) == CERT_MDS
    assert gc.applicable_certificates(rep3)[:2] == (CERT_MDS, CERT_PERFECT)
    # D is MDS (4 = 2^(3-2+1)), so the priority order reports it before
    # its constant-weight certificate
    assert gc.indecomposability_certificate(code_d) == CERT_MDS
    assert CERT_CONSTANT_WEIGHT in gc.applicable_certificates(code_d)
    prime = gc.Code.from_words(z2, 2, [(0, 0), (1, 1), (0, 1)])
    assert gc.indecomposability_certificate(prime) == CERT_PRIME


def test_constant_weight_certificate_needs_nondegenerate(z2):
    degenerate = gc.GroupCode.from_words(z2, 2, [(0, 0), (1, 0)])
    assert CERT_CONSTANT_WEIGHT not in gc.applicable_certificates(degenerate)
    assert gc.indecomposability_certificate(degenerate) is None


def test_trivial_codes_earn_no_certificates(z2):
    assert gc.applicable_certificates(gc.full_space(z2, 2)) == ()


def test_certificate_soundness(corpus):
    for C in corpus:
        if C.length > 12:
            continue
        if gc.indecomposability_certificate(C) is not None:
            assert gc.is_decomposable(C, use_certificates=False) is None


def test_scramble_roundtrip_group_codes(z3):
    rng = random.Random(23)
    pool = [repetition_code(z3, 2), repetition_code(z3, 3), gc.full_space(z3, 1)]
    parts = [pool[0], pool[0], pool[2]]
    total = gc.direct_sum_all(parts)
    auts = gc.automorphisms(z3)
    for _ in range(5):
        perm = list(range(total.length))
        rng.shuffle(perm)
        maps = tuple(rng.choice(auts).mapping for _ in range(total.length))
        iso = gc.Isometry(gc.Configuration(maps), gc.Equivalence(tuple(perm)))
        scrambled = gc.GroupCode.from_words(z3, total.length,
                                            gc.apply_to_code(iso, total).words)
        dec = gc.decompose(scrambled)
        got = sorted((dec.components[rep].length, dec.components[rep].size, alpha)
                     for rep, alpha in dec.isotypes)
        assert got == [(1, 3, 1), (2, 3, 2)]
        rep2 = [dec.components[r] for r, a in dec.isotypes if a == 2][0]
        assert isinstance(rep2, gc.GroupCode)
        assert gc.gc_isomorphic(rep2, pool[0]) is not None


def test_decompose_length_cap():
    with pytest.raises(ResourceLimitError):
        gc.decompose(binary_repetition(25))
    dec = gc.decompose(binary_repetition(25), max_bits=25)
    assert dec.indecomposable
