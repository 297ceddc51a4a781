"""Finite groups as explicit multiplication tables.

Elements are dense integer indices 0..q-1 so that every search reduces to
array indexing; human-readable names live only in the ``label`` field.
Groups are validated eagerly at construction and immutable afterwards.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import NotAGroupError, PreconditionError, ResourceLimitError

DEFAULT_AUTOMORPHISM_ORDER_CAP = 16


@dataclass(frozen=True)
class FiniteGroup:
    """A finite group given by its Cayley table over elements 0..order-1."""

    order: int
    table: tuple[tuple[int, ...], ...]
    identity: int
    inverse: tuple[int, ...]
    label: str = ""

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.inverse[a]

    def elements(self) -> range:
        return range(self.order)

    def element_order(self, a: int) -> int:
        k, x = 1, a
        while x != self.identity:
            x = self.table[x][a]
            k += 1
        return k

    def is_abelian(self) -> bool:
        q = self.order
        return all(self.table[a][b] == self.table[b][a]
                   for a in range(q) for b in range(a + 1, q))

    def matches(self, other: "FiniteGroup") -> bool:
        """Structural equality: same order and same table (labels ignored)."""
        return self.order == other.order and self.table == other.table

    def __repr__(self) -> str:  # keep reprs short; tables can be large
        name = self.label or "group"
        return f"FiniteGroup({name}, order={self.order})"


@dataclass(frozen=True)
class GroupAutomorphism:
    """A bijection of element indices commuting with the group product."""

    mapping: tuple[int, ...]

    def __call__(self, a: int) -> int:
        return self.mapping[a]

    def compose(self, other: "GroupAutomorphism") -> "GroupAutomorphism":
        # (self . other)(a) = self(other(a))
        return GroupAutomorphism(tuple(self.mapping[x] for x in other.mapping))

    def inverse(self) -> "GroupAutomorphism":
        inv = [0] * len(self.mapping)
        for a, b in enumerate(self.mapping):
            inv[b] = a
        return GroupAutomorphism(tuple(inv))


def _validate_table(table: Sequence[Sequence[int]]) -> tuple[tuple[int, ...], ...]:
    q = len(table)
    if q == 0:
        raise NotAGroupError("non-empty", (), "empty table")
    rows = []
    for i, row in enumerate(table):
        if len(row) != q:
            raise NotAGroupError("square-table", (i,), f"row {i} has length {len(row)}, expected {q}")
        r = tuple(int(x) for x in row)
        for j, x in enumerate(r):
            if not 0 <= x < q:
                raise NotAGroupError("entry-range", (i, j), f"entry {x} outside 0..{q - 1}")
        rows.append(r)
    tab = tuple(rows)
    full = frozenset(range(q))
    for i in range(q):
        if frozenset(tab[i]) != full:
            raise NotAGroupError("latin-square", (i,), f"row {i} is not a permutation of 0..{q - 1}")
    for j in range(q):
        if frozenset(tab[i][j] for i in range(q)) != full:
            raise NotAGroupError("latin-square", (j,), f"column {j} is not a permutation of 0..{q - 1}")
    return tab


def group_from_table(table: Sequence[Sequence[int]], label: str = "") -> FiniteGroup:
    """Validate a raw Cayley table, infer identity and inverses, and wrap it.

    Raises NotAGroupError naming the failed axiom and a witness triple.
    """
    tab = _validate_table(table)
    q = len(tab)
    identity = None
    for e in range(q):
        if all(tab[e][a] == a and tab[a][e] == a for a in range(q)):
            identity = e
            break
    if identity is None:
        raise NotAGroupError("identity", (), "no two-sided identity element")
    for a in range(q):
        for b in range(q):
            for c in range(q):
                if tab[tab[a][b]][c] != tab[a][tab[b][c]]:
                    raise NotAGroupError("associativity", (a, b, c))
    inverse = [0] * q
    for a in range(q):
        found = [b for b in range(q) if tab[a][b] == identity]
        if not found or tab[found[0]][a] != identity:
            raise NotAGroupError("inverse", (a,))
        inverse[a] = found[0]
    return FiniteGroup(order=q, table=tab, identity=identity,
                       inverse=tuple(inverse), label=label or f"order-{q} group")


def cyclic_group(m: int) -> FiniteGroup:
    """The integers modulo m under addition."""
    if m < 1:
        raise PreconditionError(f"cyclic group order must be positive, got {m}")
    table = [[(a + b) % m for b in range(m)] for a in range(m)]
    return group_from_table(table, label=f"Z/{m}")


def product_group(factors: Sequence[FiniteGroup]) -> FiniteGroup:
    """Direct product with mixed-radix element encoding, first factor most significant."""
    if not factors:
        raise PreconditionError("product of an empty family of groups")
    orders = [g.order for g in factors]
    q = 1
    for o in orders:
        q *= o
    table = [[0] * q for _ in range(q)]
    for a in range(q):
        da = decode_mixed_radix(a, orders)
        for b in range(q):
            db = decode_mixed_radix(b, orders)
            table[a][b] = encode_mixed_radix(
                [g.mul(x, y) for g, x, y in zip(factors, da, db)], orders)
    label = " x ".join(g.label or "?" for g in factors)
    return group_from_table(table, label=label)


def encode_mixed_radix(digits: Sequence[int], orders: Sequence[int]) -> int:
    value = 0
    for d, o in zip(digits, orders):
        value = value * o + d
    return value


def decode_mixed_radix(value: int, orders: Sequence[int]) -> tuple[int, ...]:
    digits = []
    for o in reversed(orders):
        value, d = divmod(value, o)
        digits.append(d)
    return tuple(reversed(digits))


def klein_four_group() -> FiniteGroup:
    g = product_group([cyclic_group(2), cyclic_group(2)])
    return FiniteGroup(order=g.order, table=g.table, identity=g.identity,
                       inverse=g.inverse, label="V4")


def subgroup_closure(G: FiniteGroup, seed: Iterable[int]) -> frozenset[int]:
    """Smallest subgroup of G containing the seed elements.

    Right-multiplication closure from the identity suffices: a finite set
    closed under the product and containing the identity is a subgroup.
    """
    gens = list(seed)
    known = {G.identity}
    frontier = [G.identity]
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = G.table[x][g]
            if y not in known:
                known.add(y)
                frontier.append(y)
    return frozenset(known)


def generating_sequence(G: FiniteGroup) -> tuple[int, ...]:
    """A small generating sequence, chosen greedily for maximal growth.

    Deterministic: ties break toward the smallest element index.
    """
    gens: list[int] = []
    current = frozenset({G.identity})
    while len(current) < G.order:
        best_elem, best_size = None, -1
        for a in range(G.order):
            if a in current:
                continue
            size = len(subgroup_closure(G, list(gens) + [a]))
            if size > best_size:
                best_elem, best_size = a, size
        assert best_elem is not None
        gens.append(best_elem)
        current = subgroup_closure(G, gens)
    return tuple(gens)


def _extend_hom(G: FiniteGroup, pairs: Sequence[tuple[int, int]]) -> dict[int, int] | None:
    """Close a partial generator assignment into a homomorphism on <gens>.

    Returns the mapping on the generated subgroup, or None on conflict.
    """
    mapping = {G.identity: G.identity}
    for g, h in pairs:
        if mapping.get(g, h) != h:
            return None
        mapping[g] = h
    frontier = list(mapping)
    while frontier:
        x = frontier.pop()
        for g, h in pairs:
            y = G.table[x][g]
            img = G.table[mapping[x]][h]
            if y in mapping:
                if mapping[y] != img:
                    return None
            else:
                mapping[y] = img
                frontier.append(y)
    return mapping


def automorphisms(G: FiniteGroup, max_order: int = DEFAULT_AUTOMORPHISM_ORDER_CAP) -> list[GroupAutomorphism]:
    """All automorphisms of G, by backtracking on generator images.

    Candidate images are pruned by element order; each partial assignment is
    closed into a homomorphism and rejected on the first inconsistency.
    """
    if G.order > max_order:
        raise ResourceLimitError(
            f"automorphism search capped at order {max_order}, group has order {G.order}")
    gens = generating_sequence(G)
    if not gens:  # trivial group
        return [GroupAutomorphism((0,))]
    orders = [G.element_order(g) for g in gens]
    candidates = [[a for a in range(G.order) if G.element_order(a) == o] for o in orders]
    found: list[GroupAutomorphism] = []

    def rec(idx: int, pairs: list[tuple[int, int]]) -> None:
        if idx == len(gens):
            mapping = _extend_hom(G, pairs)
            if mapping is not None and len(mapping) == G.order \
                    and len(set(mapping.values())) == G.order:
                found.append(GroupAutomorphism(tuple(mapping[a] for a in range(G.order))))
            return
        for h in candidates[idx]:
            pairs.append((gens[idx], h))
            if _extend_hom(G, pairs) is not None:
                rec(idx + 1, pairs)
            pairs.pop()

    rec(0, [])
    found.sort(key=lambda a: a.mapping)
    return found


def euler_totient(m: int) -> int:
    """Count of 1 <= k <= m coprime to m (reference value for Aut(Z/m))."""
    return sum(1 for k in range(1, m + 1) if math.gcd(k, m) == 1)
