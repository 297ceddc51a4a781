"""Decomposability testing and canonical decomposition into indecomposables.

A code splits along a coordinate bipartition (J, K) exactly when
|C| = |pi_J(C)| * |pi_K(C)|. The search enumerates candidate subsets J
containing coordinate 0 in (size, lex) order, so the returned witness and
the recursive decomposition are canonical and reproducible. Constant
coordinates always split off, so they are peeled first to shrink the
exponential subset search.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .classify import constant_weight_group, is_degenerate, is_mds, is_perfect, is_trivial
from .codes import Code, GroupCode, direct_sum_all, projection
from .errors import PreconditionError, ResourceLimitError
from .isometry import Configuration, Equivalence, Isometry, apply_to_code
from .isomorphy import DEFAULT_MAX_NODES, code_equivalent, gc_isomorphic

DEFAULT_PARTITION_BITS = 24

CERT_MDS = "mds-nontrivial"
CERT_PERFECT = "perfect-nontrivial"
CERT_CONSTANT_WEIGHT = "constant-weight-nondegenerate"
CERT_PRIME = "prime-cardinality-nondegenerate"
CERTIFICATE_PRIORITY = (CERT_MDS, CERT_PERFECT, CERT_CONSTANT_WEIGHT, CERT_PRIME)


def _is_prime(m: int) -> bool:
    if m < 2:
        return False
    d = 2
    while d * d <= m:
        if m % d == 0:
            return False
        d += 1
    return True


def applicable_certificates(C: Code) -> tuple[str, ...]:
    """Every indecomposability certificate that applies, in priority order."""
    tags: list[str] = []
    trivial = is_trivial(C)
    if not trivial and is_mds(C):
        tags.append(CERT_MDS)
    if not trivial and is_perfect(C):
        tags.append(CERT_PERFECT)
    degenerate, _ = is_degenerate(C)
    if (isinstance(C, GroupCode) and not degenerate
            and constant_weight_group(C) is not None):
        tags.append(CERT_CONSTANT_WEIGHT)
    if not degenerate and _is_prime(C.size):
        tags.append(CERT_PRIME)
    return tuple(tags)


def indecomposability_certificate(C: Code) -> str | None:
    """First applicable certificate tag, or None.

    A present tag certifies indecomposability without any partition
    search (sound by the classification theorems; cross-checked against
    exhaustive search in the test corpus).
    """
    tags = applicable_certificates(C)
    return tags[0] if tags else None


class _ProjCounter:
    """Memoized projection cardinalities keyed by coordinate bitmask.

    Subsets are packed into integers column by column when the packed
    values fit in int64; otherwise falls back to tuple sets.
    """

    def __init__(self, C: Code) -> None:
        self.C = C
        self.q = C.alphabet.order
        self.n = C.length
        self.cache: dict[int, int] = {}
        self.packable = self.q ** self.n < 2**62
        self.arr = C.word_array if self.packable else None

    def card(self, coords: tuple[int, ...]) -> int:
        mask = 0
        for i in coords:
            mask |= 1 << i
        hit = self.cache.get(mask)
        if hit is not None:
            return hit
        if self.packable and len(self.C.words) > 16:
            weights = np.array([self.q ** t for t in range(len(coords))], dtype=np.int64)
            packed = self.arr[:, list(coords)] @ weights
            value = int(np.unique(packed).size)
        else:
            value = len({tuple(w[i] for i in coords) for w in self.C.words})
        self.cache[mask] = value
        return value


def _validate_subset(C: Code, J: tuple[int, ...]) -> tuple[int, ...]:
    js = tuple(sorted({int(i) for i in J}))
    if not js or len(js) >= C.length:
        raise PreconditionError(f"split subset must be a proper non-empty part of 0..{C.length - 1}")
    if js[0] < 0 or js[-1] >= C.length:
        raise PreconditionError(f"split subset {js} outside 0..{C.length - 1}")
    return js


def split_test(C: Code, J: tuple[int, ...]) -> bool:
    """Exact product criterion |C| = |pi_J(C)| * |pi_K(C)| for K = complement."""
    js = _validate_subset(C, J)
    ks = tuple(i for i in range(C.length) if i not in set(js))
    counter = _ProjCounter(C)
    return counter.card(js) * counter.card(ks) == C.size


def _canonical_split(C: Code, counter: _ProjCounter) -> tuple[int, ...] | None:
    """Smallest, lexicographically least witnessing J containing coordinate 0."""
    n, size = C.length, C.size
    for s in range(1, n):
        for rest in itertools.combinations(range(1, n), s - 1):
            J = (0,) + rest
            K = tuple(i for i in range(1, n) if i not in set(rest))
            if counter.card(J) * counter.card(K) == size:
                return J
    return None


def is_decomposable(C: Code, *, max_bits: int = DEFAULT_PARTITION_BITS,
                    use_certificates: bool = True) -> tuple[int, ...] | None:
    """Canonical witnessing subset if C splits, else None.

    Length-1 codes never split. A present indecomposability certificate
    short-circuits the 2^(n-1) subset search when enabled.
    """
    if C.length <= 1:
        return None
    if C.length > max_bits:
        raise ResourceLimitError(
            f"partition search capped at {max_bits} coordinates, code has {C.length}",
            certificate=indecomposability_certificate(C))
    if use_certificates and indecomposability_certificate(C) is not None:
        return None
    return _canonical_split(C, _ProjCounter(C))


@dataclass(frozen=True)
class Partition:
    """Disjoint coordinate blocks covering 0..n-1, ordered by first element."""

    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        seen: set[int] = set()
        for b in self.blocks:
            if not b or list(b) != sorted(set(b)):
                raise PreconditionError(f"bad block {b}")
            if seen & set(b):
                raise PreconditionError(f"block {b} overlaps another block")
            seen |= set(b)
        firsts = [b[0] for b in self.blocks]
        if firsts != sorted(firsts):
            raise PreconditionError("blocks must be ordered by first element")

    @property
    def n(self) -> int:
        return sum(len(b) for b in self.blocks)


@dataclass(frozen=True)
class Decomposition:
    """Result of the recursive split: components, isotypes, and a witness.

    The witness is the block-concatenation coordinate permutation (pull
    form, identity configuration); applied to the code it yields exactly
    the direct sum of the components in block order.
    """

    partition: Partition
    components: tuple[Code, ...]
    isotypes: tuple[tuple[int, int], ...]            # (representative index, multiplicity)
    isotype_members: tuple[tuple[int, ...], ...]
    witness: Isometry
    certificates: tuple[str | None, ...]

    @property
    def indecomposable(self) -> bool:
        return len(self.components) == 1


def decompose(C: Code, *, max_bits: int = DEFAULT_PARTITION_BITS,
              use_certificates: bool = True,
              max_nodes: int = DEFAULT_MAX_NODES) -> Decomposition:
    """Recursive canonical decomposition into indecomposable components."""
    if C.length > max_bits:
        raise ResourceLimitError(
            f"partition search capped at {max_bits} coordinates, code has {C.length}",
            certificate=indecomposability_certificate(C))
    blocks: list[tuple[int, ...]] = []

    def rec(indices: tuple[int, ...], code: Code) -> None:
        if len(indices) == 1:
            blocks.append(indices)
            return
        constant_pos = [p for p in range(code.length)
                        if len({w[p] for w in code.words}) == 1]
        if constant_pos:
            for p in constant_pos:
                blocks.append((indices[p],))
            keep = [p for p in range(code.length) if p not in set(constant_pos)]
            if keep:
                rec(tuple(indices[p] for p in keep), projection(code, keep))
            return
        J = is_decomposable(code, max_bits=max_bits, use_certificates=use_certificates)
        if J is None:
            blocks.append(indices)
            return
        K = tuple(p for p in range(code.length) if p not in set(J))
        rec(tuple(indices[p] for p in J), projection(code, J))
        rec(tuple(indices[p] for p in K), projection(code, K))

    rec(tuple(range(C.length)), C)
    blocks.sort(key=lambda b: b[0])
    partition = Partition(tuple(blocks))
    components = tuple(projection(C, b) for b in blocks)
    certificates = tuple(indecomposability_certificate(comp) for comp in components)

    group_mode = isinstance(C, GroupCode)
    rep_indices: list[int] = []
    members: list[list[int]] = []
    for ci, comp in enumerate(components):
        for k, r in enumerate(rep_indices):
            if _same_isotype(components[r], comp, group_mode, max_nodes):
                members[k].append(ci)
                break
        else:
            rep_indices.append(ci)
            members.append([ci])
    isotypes = tuple((r, len(m)) for r, m in zip(rep_indices, members))

    perm = tuple(i for b in blocks for i in b)
    q = C.alphabet.order
    ident = tuple(range(q))
    witness = Isometry(Configuration((ident,) * C.length), Equivalence(perm))
    rebuilt = apply_to_code(witness, C)
    target = direct_sum_all(list(components))
    assert rebuilt.words == target.words, "witness does not reassemble the direct sum"
    return Decomposition(partition=partition, components=components,
                         isotypes=isotypes,
                         isotype_members=tuple(tuple(m) for m in members),
                         witness=witness, certificates=certificates)


def _same_isotype(a: Code, b: Code, group_mode: bool, max_nodes: int) -> bool:
    if a.length != b.length or a.size != b.size:
        return False
    if group_mode:
        assert isinstance(a, GroupCode) and isinstance(b, GroupCode)
        return gc_isomorphic(a, b, max_nodes=max_nodes) is not None
    return code_equivalent(a, b, max_nodes=max_nodes) is not None
