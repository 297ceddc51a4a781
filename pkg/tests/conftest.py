"""Shared fixtures: the small groups and the reference codes."""

from __future__ import annotations

import random

import pytest

import groupcodes as gc
from groupcodes.catalog import (binary_repetition, even_weight_code, hamming_7_4_code,
                                repetition_code, sum_zero_code, z4_example_code)


@pytest.fixture(scope="session")
def z2():
    return gc.cyclic_group(2)


@pytest.fixture(scope="session")
def z3():
    return gc.cyclic_group(3)


@pytest.fixture(scope="session")
def z4():
    return gc.cyclic_group(4)


@pytest.fixture(scope="session")
def v4():
    return gc.klein_four_group()


@pytest.fixture(scope="session")
def z4_code():
    return z4_example_code()


@pytest.fixture(scope="session")
def code_d():
    """The length-3 even-weight code over Z/2: {000, 110, 011, 101}."""
    return even_weight_code(3)


@pytest.fixture(scope="session")
def rep3():
    return binary_repetition(3)


@pytest.fixture(scope="session")
def hamming():
    return hamming_7_4_code()


@pytest.fixture(scope="session")
def corpus(z2, z3, z4, z4_code, code_d, rep3, hamming):
    """Mixed bag of small codes used by cross-cutting property tests."""
    rng = random.Random(20240811)
    codes = [
        z4_code, code_d, rep3, hamming,
        binary_repetition(5),
        repetition_code(z3, 3), repetition_code(z4, 2),
        sum_zero_code(z3, 3), sum_zero_code(z4, 3),
        gc.full_space(z2, 2), gc.full_space(z2, 3), gc.full_space(z3, 2),
        gc.full_space(z4, 1),
        gc.Code.from_words(z2, 2, [(0, 1), (1, 0)]),
        gc.Code.from_words(z2, 3, [(0, 0, 0)]),
        gc.Code.from_words(z4, 2, [(0, 0), (1, 1), (2, 3)]),
        gc.direct_sum(code_d, rep3),
    ]
    for _ in range(10):
        q = rng.choice([2, 3, 4])
        n = rng.randrange(2, 5)
        space = sorted(gc.all_words(q, n))
        count = rng.randrange(2, min(9, len(space)))
        codes.append(gc.Code.from_words(gc.cyclic_group(q), n, rng.sample(space, count)))
    for _ in range(6):
        G = rng.choice([z2, z3, z4])
        n = rng.randrange(2, 6)
        gens = [tuple(rng.randrange(G.order) for _ in range(n))
                for _ in range(rng.choice([1, 2]))]
        sub = gc.generate_group_code(G, n, gens)
        if sub.size <= 256:
            codes.append(sub)
    return codes
