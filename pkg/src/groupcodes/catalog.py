"""Small named codes used by demos, the self-test corpus, and tests."""

from __future__ import annotations

import itertools

from .codes import Code, GroupCode, full_space
from .errors import PreconditionError
from .groups import FiniteGroup, cyclic_group, klein_four_group


def repetition_code(G: FiniteGroup, n: int) -> GroupCode:
    """Diagonal subgroup {(a, ..., a)} of G^n; distance n, cardinality |G|."""
    return GroupCode.from_words(G, n, [(a,) * n for a in G.elements()])


def sum_zero_code(G: FiniteGroup, n: int) -> GroupCode:
    """Words whose componentwise product is the identity (abelian G only).

    Kernel of the product homomorphism G^n -> G, so a subgroup of order
    |G|^(n-1) with minimum distance 2.
    """
    if not G.is_abelian():
        raise PreconditionError("sum-zero codes need an abelian alphabet")
    words = []
    for w in itertools.product(G.elements(), repeat=n):
        acc = G.identity
        for s in w:
            acc = G.table[acc][s]
        if acc == G.identity:
            words.append(w)
    return GroupCode.from_words(G, n, words)


def even_weight_code(n: int) -> GroupCode:
    """Binary words of even weight; for n=3 this is {000, 110, 011, 101}."""
    return sum_zero_code(cyclic_group(2), n)


def z4_example_code() -> GroupCode:
    """The 8-word length-3 code over Z/4 generated by (2,0,0) and (1,2,1).

    Its three coordinate projections have sizes 4, 2, 4, every split
    product is 16 != 8, so it is indecomposable despite d = 1.
    """
    return GroupCode.generate(cyclic_group(4), 3, [(2, 0, 0), (1, 2, 1)])


def hamming_7_4_code() -> GroupCode:
    """The binary [7,4,3] Hamming code, from its three parity constraints."""
    checks = ((0, 2, 4, 6), (1, 2, 5, 6), (3, 4, 5, 6))
    words = [w for w in itertools.product(range(2), repeat=7)
             if all(sum(w[i] for i in chk) % 2 == 0 for chk in checks)]
    return GroupCode.from_words(cyclic_group(2), 7, words)


def binary_repetition(n: int) -> GroupCode:
    return repetition_code(cyclic_group(2), n)


__all__ = [
    "repetition_code", "sum_zero_code", "even_weight_code", "z4_example_code",
    "hamming_7_4_code", "binary_repetition", "full_space",
    "cyclic_group", "klein_four_group", "Code", "GroupCode",
]
