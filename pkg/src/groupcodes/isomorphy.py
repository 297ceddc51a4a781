"""Group-code isomorphism testing and automorphism-group computation.

A group-code isomorphism C -> D is an ambient isometry f∘σ̄ of G^n mapping
C onto D whose restriction to C is a group isomorphism. The search runs
coordinate by coordinate: pick σ(j) among unused input coordinates with a
matching projection cardinality, then pick f_j. Because independent pairs
of codewords realize every pair of projection values, the homomorphism
requirement factors per coordinate: f_j restricted to pi_{σ(j)}(C) must be
a subgroup isomorphism onto pi_j(D). Off that projection, any bijective
extension works, and distinct extensions are distinct ambient maps, which
is exactly what the automorphism counting has to honor.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from typing import TYPE_CHECKING, Sequence

from .codes import (Code, GroupCode, Word, direct_sum_all, hamming_distance,
                    word_mul)
from .errors import (IncompatibleError, PreconditionError, ResourceLimitError,
                     TheoremViolationError)
from .groups import FiniteGroup
from .isometry import Configuration, Equivalence, Isometry, compose, identity_isometry

if TYPE_CHECKING:  # structure checks take a Decomposition without importing at runtime
    from .decompose import Decomposition

DEFAULT_MAX_NODES = 10**6
DEFAULT_EXPLICIT_CAP = 10**4
CLOSURE_VERIFY_CAP = 10**6


@dataclass(frozen=True)
class GroupCodeIso:
    """A certified isomorphism witness between two group codes."""

    iso: Isometry
    source: GroupCode
    target: GroupCode

    def verify(self, pair_check: bool | None = None) -> bool:
        """Re-check the witness extensionally.

        Homomorphy on the source is checked per coordinate (exact for maps
        in f∘σ̄ form); ``pair_check`` additionally multiplies out all
        codeword pairs and defaults to on for sources up to 512 words.
        """
        C, D, phi = self.source, self.target, self.iso
        G = C.alphabet
        if {phi.apply(w) for w in C.words} != D.word_set:
            return False
        e = G.identity
        if any(f[e] != e for f in phi.config.maps):
            return False
        sigma = phi.equiv.perm
        for j in range(C.length):
            f = phi.config.maps[j]
            h = sorted({w[sigma[j]] for w in C.words})
            for a in h:
                for b in h:
                    if f[G.table[a][b]] != G.table[f[a]][f[b]]:
                        return False
        if pair_check is None:
            pair_check = C.size <= 512
        if pair_check:
            for x in C.words:
                for y in C.words:
                    if phi.apply(word_mul(G, x, y)) != word_mul(G, phi.apply(x), phi.apply(y)):
                        return False
        return True


def code_generating_words(C: GroupCode) -> tuple[Word, ...]:
    """Small generating set of the subgroup C, greedy over sorted words."""
    G = C.alphabet
    e = C.identity_word()
    gens: list[Word] = []
    closure = {e}
    for w in C.words:
        if w in closure:
            continue
        gens.append(w)
        frontier = list(closure)
        while frontier:
            x = frontier.pop()
            for g in gens:
                y = word_mul(G, x, g)
                if y not in closure:
                    closure.add(y)
                    frontier.append(y)
        if len(closure) == C.size:
            break
    return tuple(gens)


def _subset_generators(G: FiniteGroup, H: tuple[int, ...]) -> tuple[int, ...]:
    """Generating sequence of the subgroup with element set H."""
    gens: list[int] = []
    closure = {G.identity}
    for a in H:
        if a in closure:
            continue
        gens.append(a)
        frontier = list(closure)
        while frontier:
            x = frontier.pop()
            for g in gens:
                y = G.table[x][g]
                if y not in closure:
                    closure.add(y)
                    frontier.append(y)
        if len(closure) == len(H):
            break
    return tuple(gens)


def _subgroup_isomorphisms(G: FiniteGroup, H: tuple[int, ...], K: tuple[int, ...]) -> list[dict[int, int]]:
    """All group isomorphisms from subgroup H onto subgroup K (as dicts)."""
    if len(H) != len(K):
        return []
    gens = _subset_generators(G, H)
    kset = set(K)
    out: list[dict[int, int]] = []

    def close(pairs: list[tuple[int, int]]) -> dict[int, int] | None:
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
                elif img not in kset:
                    return None
                else:
                    mapping[y] = img
                    frontier.append(y)
        return mapping

    def rec(idx: int, pairs: list[tuple[int, int]]) -> None:
        if idx == len(gens):
            m = close(pairs)
            if m is not None and len(m) == len(H) and len(set(m.values())) == len(K):
                out.append(m)
            return
        want = G.element_order(gens[idx])
        for h in K:
            if G.element_order(h) != want:
                continue
            pairs.append((gens[idx], h))
            if close(pairs) is not None:
                rec(idx + 1, pairs)
            pairs.pop()

    if not gens:  # trivial subgroup
        return [{G.identity: G.identity}] if set(K) == {G.identity} else []
    rec(0, [])
    out.sort(key=lambda m: tuple(m[a] for a in H))
    return out


def _all_bijections(H: tuple[int, ...], K: tuple[int, ...]) -> list[dict[int, int]]:
    import itertools
    if len(H) != len(K):
        return []
    return [dict(zip(H, img)) for img in sorted(itertools.permutations(K))]


class _IsoSearch:
    """Coordinate-interleaved backtracking over (σ, f) normal forms."""

    def __init__(self, C: Code, D: Code, *, group_mode: bool,
                 max_nodes: int = DEFAULT_MAX_NODES) -> None:
        self.C, self.D = C, D
        self.G = C.alphabet
        self.q = self.G.order
        self.n = C.length
        self.group_mode = group_mode
        self.max_nodes = max_nodes
        self.nodes = 0
        self.proj_in = [tuple(sorted({w[i] for w in C.words})) for i in range(self.n)]
        self.proj_out = [tuple(sorted({w[j] for w in D.words})) for j in range(self.n)]
        if group_mode:
            self.probes = list(code_generating_words(C))  # images must land in D
        else:
            self.probes = list(C.words)
        # output-prefix data of D, per depth
        self.prefix_sets = [frozenset(w[:k] for w in D.words) for k in range(self.n + 1)]
        self.prefix_counts = [Counter(w[:k] for w in D.words) for k in range(self.n + 1)]
        self._map_cache: dict[tuple[int, int], list[dict[int, int]]] = {}

    def _candidate_maps(self, i: int, j: int) -> list[dict[int, int]]:
        key = (i, j)
        if key not in self._map_cache:
            if self.group_mode:
                maps = _subgroup_isomorphisms(self.G, self.proj_in[i], self.proj_out[j])
            else:
                maps = _all_bijections(self.proj_in[i], self.proj_out[j])
            self._map_cache[key] = maps
        return self._map_cache[key]

    def run(self, *, find_all: bool) -> list[tuple[tuple[int, ...], tuple[dict[int, int], ...]]]:
        """Return search leaves (σ, per-coordinate restrictions); one leaf
        per distinct restriction assignment, extensions not expanded."""
        leaves: list[tuple[tuple[int, ...], tuple[dict[int, int], ...]]] = []
        sigma: list[int] = []
        restr: list[dict[int, int]] = []
        used = [False] * self.n
        images: list[tuple[Word, ...]] = [tuple(() for _ in self.probes)]

        def rec(j: int) -> bool:
            self.nodes += 1
            if self.nodes > self.max_nodes:
                raise ResourceLimitError(
                    f"isomorphism search exceeded {self.max_nodes} nodes",
                    partial_generators=tuple(leaves))
            if j == self.n:
                current = images[-1]
                if self.group_mode:
                    ok = all(img in self.D.word_set for img in current)
                else:
                    ok = set(current) == self.D.word_set and len(set(current)) == self.C.size
                if ok:
                    leaves.append((tuple(sigma), tuple(dict(r) for r in restr)))
                    return not find_all
                return False
            for i in range(self.n):
                if used[i] or len(self.proj_in[i]) != len(self.proj_out[j]):
                    continue
                for fmap in self._candidate_maps(i, j):
                    nxt = tuple(img + (fmap[p[i]],) for img, p in zip(images[-1], self.probes))
                    if self.group_mode:
                        ps = self.prefix_sets[j + 1]
                        if any(img not in ps for img in nxt):
                            continue
                    else:
                        if Counter(nxt) != self.prefix_counts[j + 1]:
                            continue
                    used[i] = True
                    sigma.append(i)
                    restr.append(fmap)
                    images.append(nxt)
                    done = rec(j + 1)
                    images.pop()
                    restr.pop()
                    sigma.pop()
                    used[i] = False
                    if done:
                        return True
            return False

        rec(0)
        return leaves

    # leaf expansion -------------------------------------------------

    def _complement(self, values: tuple[int, ...]) -> tuple[int, ...]:
        present = set(values)
        return tuple(x for x in range(self.q) if x not in present)

    def witness_from_leaf(self, leaf: tuple[tuple[int, ...], tuple[dict[int, int], ...]]) -> Isometry:
        """Canonical extension: complements map onto each other in sorted order."""
        sigma, restr = leaf
        maps = []
        for j in range(self.n):
            f = [0] * self.q
            for a, b in restr[j].items():
                f[a] = b
            dom = self._complement(self.proj_in[sigma[j]])
            rng = self._complement(self.proj_out[j])
            for a, b in zip(dom, rng):
                f[a] = b
            maps.append(tuple(f))
        return Isometry(Configuration(tuple(maps)), Equivalence(sigma))

    def extension_count(self, leaf: tuple[tuple[int, ...], tuple[dict[int, int], ...]]) -> int:
        sigma, _ = leaf
        count = 1
        for j in range(self.n):
            count *= math.factorial(self.q - len(self.proj_in[sigma[j]]))
        return count

    def expand_leaf(self, leaf: tuple[tuple[int, ...], tuple[dict[int, int], ...]]) -> list[Isometry]:
        """All ambient isometries over one leaf: every bijective extension."""
        import itertools
        sigma, restr = leaf
        per_coord: list[list[tuple[int, ...]]] = []
        for j in range(self.n):
            base = [0] * self.q
            for a, b in restr[j].items():
                base[a] = b
            dom = self._complement(self.proj_in[sigma[j]])
            rng = self._complement(self.proj_out[j])
            variants = []
            for img in sorted(itertools.permutations(rng)):
                f = list(base)
                for a, b in zip(dom, img):
                    f[a] = b
                variants.append(tuple(f))
            per_coord.append(variants)
        out = []
        for combo in itertools.product(*per_coord):
            out.append(Isometry(Configuration(combo), Equivalence(sigma)))
        return out


def _weight_distribution(C: GroupCode) -> Counter:
    e = C.identity_word()
    return Counter(hamming_distance(w, e) for w in C.words)


def gc_isomorphic(C: GroupCode, D: GroupCode, *, max_nodes: int = DEFAULT_MAX_NODES) -> GroupCodeIso | None:
    """Find a group-code isomorphism witness C -> D, or None.

    Invariant prechecks (length, cardinality, weight distribution,
    projection-cardinality multiset) run first; they only ever filter,
    the search is the decider.
    """
    if not C.alphabet.matches(D.alphabet):
        raise IncompatibleError("isomorphism requires the identical alphabet group")
    if C.length != D.length or C.size != D.size:
        return None
    if C.words == D.words:
        return GroupCodeIso(identity_isometry(C.alphabet.order, C.length), C, D)
    if _weight_distribution(C) != _weight_distribution(D):
        return None
    proj_c = sorted(len({w[i] for w in C.words}) for i in range(C.length))
    proj_d = sorted(len({w[j] for w in D.words}) for j in range(D.length))
    if proj_c != proj_d:
        return None
    search = _IsoSearch(C, D, group_mode=True, max_nodes=max_nodes)
    leaves = search.run(find_all=False)
    if not leaves:
        return None
    witness = GroupCodeIso(search.witness_from_leaf(leaves[0]), C, D)
    assert witness.verify(), "search produced an invalid witness"
    return witness


def code_equivalent(C: Code, D: Code, *, max_nodes: int = DEFAULT_MAX_NODES) -> Isometry | None:
    """Plain-code equivalence: an ambient isometry with phi(C) = D, or None."""
    if not C.alphabet.matches(D.alphabet):
        raise IncompatibleError("equivalence requires a common alphabet")
    if C.length != D.length or C.size != D.size:
        return None
    if C.words == D.words:
        return identity_isometry(C.alphabet.order, C.length)
    proj_c = sorted(len({w[i] for w in C.words}) for i in range(C.length))
    proj_d = sorted(len({w[j] for w in D.words}) for j in range(D.length))
    if proj_c != proj_d:
        return None
    search = _IsoSearch(C, D, group_mode=False, max_nodes=max_nodes)
    leaves = search.run(find_all=False)
    if not leaves:
        return None
    return search.witness_from_leaf(leaves[0])


@dataclass(frozen=True)
class AutGroupReport:
    """Automorphism group of a group code.

    ``elements`` is populated when the order fits the explicit cap;
    otherwise only generators and the exact order are reported.
    ``structure`` rows are (isotype index, |Aut| of the component, alpha).
    """

    order: int
    generators: tuple[GroupCodeIso, ...]
    elements: tuple[Isometry, ...] | None
    structure: tuple[tuple[int, int, int], ...] | None
    complete: bool = True


def _mul_closure(gens: Sequence[Isometry], *, cap: int | None = None) -> set[Isometry]:
    """Close a set of isometries under composition (finite, so a group)."""
    if not gens:
        return set()
    closed: set[Isometry] = set(gens)
    frontier = list(gens)
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = compose(x, g)
            if y not in closed:
                closed.add(y)
                frontier.append(y)
                if cap is not None and len(closed) > cap:
                    raise ResourceLimitError(f"closure exceeded {cap} elements")
    return closed


def _greedy_generators(elements: Sequence[Isometry]) -> tuple[Isometry, ...]:
    n = elements[0].n if elements else 0
    q = len(elements[0].config.maps[0]) if elements else 1
    gens: list[Isometry] = []
    closed: set[Isometry] = {identity_isometry(q, n)} if elements else set()
    for el in elements:
        if el in closed:
            continue
        gens.append(el)
        closed = _mul_closure(gens) | {identity_isometry(q, n)}
    return tuple(gens)


def aut_group(C: GroupCode, decomposition: "Decomposition | None" = None, *,
              max_nodes: int = DEFAULT_MAX_NODES,
              explicit_cap: int = DEFAULT_EXPLICIT_CAP) -> AutGroupReport:
    """All group-code automorphisms of C, with exact order.

    Counts ambient isometries: every bijective extension of the
    per-coordinate maps off the coordinate projections is its own
    automorphism. With a decomposition supplied, the predicted order
    prod |Aut(D_j)|^alpha_j * alpha_j! is asserted against the computed one.
    """
    q, n = C.alphabet.order, C.length
    if q == 1:
        ident = identity_isometry(1, n)
        return AutGroupReport(order=1, generators=(),
                              elements=(ident,), structure=None)
    search = _IsoSearch(C, C, group_mode=True, max_nodes=max_nodes)
    try:
        leaves = search.run(find_all=True)
    except ResourceLimitError as err:
        witnesses = tuple(
            GroupCodeIso(search.witness_from_leaf(leaf), C, C)
            for leaf in err.partial_generators)
        raise ResourceLimitError(
            str(err), partial_generators=witnesses, incomplete=True) from None
    order = sum(search.extension_count(leaf) for leaf in leaves)

    elements: tuple[Isometry, ...] | None
    if order <= explicit_cap:
        flat: list[Isometry] = []
        for leaf in leaves:
            flat.extend(search.expand_leaf(leaf))
        flat.sort(key=lambda iso: (iso.equiv.perm, iso.config.maps))
        elements = tuple(flat)
        gen_isos = _greedy_generators(flat)
    else:
        elements = None
        gen_isos = _large_order_generators(search, leaves)
    generators = tuple(GroupCodeIso(g, C, C) for g in gen_isos)

    structure: tuple[tuple[int, int, int], ...] | None = None
    if decomposition is not None:
        rows = []
        predicted = 1
        for idx, (rep_idx, alpha) in enumerate(decomposition.isotypes):
            comp = decomposition.components[rep_idx]
            if not isinstance(comp, GroupCode):
                raise PreconditionError("structure prediction needs group-code components")
            comp_order = aut_group(comp, max_nodes=max_nodes,
                                   explicit_cap=explicit_cap).order
            rows.append((idx, comp_order, alpha))
            predicted *= comp_order**alpha * math.factorial(alpha)
        if predicted != order:
            raise TheoremViolationError(
                f"automorphism order {order} does not match the structure "
                f"prediction {predicted}; decomposition or search is buggy")
        structure = tuple(rows)
    return AutGroupReport(order=order, generators=generators,
                          elements=elements, structure=structure)


def _large_order_generators(search: _IsoSearch, leaves) -> tuple[Isometry, ...]:
    """Generators when the group is too large to materialize.

    The extension-only automorphisms (σ = id, restrictions = id) form a
    normal subgroup N = prod_j Sym(complement of pi_j(C)); canonical leaf
    witnesses form a transversal of it. Greedily reduced transversal
    representatives plus two-element generator sets of each symmetric
    factor generate the whole group.
    """
    q, n = search.q, search.n

    def signature(iso: Isometry):
        sigma = iso.equiv.perm
        return (sigma, tuple(
            tuple(iso.config.maps[j][a] for a in search.proj_in[sigma[j]])
            for j in range(n)))

    def signature_closure(gens: list[Isometry]) -> set:
        start = identity_isometry(q, n)
        closed = {signature(start)}
        frontier = [start]
        while frontier:
            x = frontier.pop()
            for g in gens:
                y = compose(x, g)
                s = signature(y)
                if s not in closed:
                    closed.add(s)
                    frontier.append(y)
        return closed

    quotient_gens: list[Isometry] = []
    seen = signature_closure(quotient_gens)
    for leaf in leaves:
        w = search.witness_from_leaf(leaf)
        if signature(w) in seen:
            continue
        quotient_gens.append(w)
        seen = signature_closure(quotient_gens)
    ident = tuple(range(q))
    normal_gens: list[Isometry] = []
    for j in range(n):
        comp = tuple(x for x in range(q) if x not in set(search.proj_in[j]))
        if len(comp) >= 2:
            for cycle in _symmetric_generators(comp):
                maps = [ident] * n
                f = list(range(q))
                for a, b in cycle.items():
                    f[a] = b
                maps[j] = tuple(f)
                normal_gens.append(
                    Isometry(Configuration(tuple(maps)), Equivalence(tuple(range(n)))))
    return tuple(quotient_gens + normal_gens)


def _symmetric_generators(points: tuple[int, ...]) -> list[dict[int, int]]:
    """Transposition plus full cycle generating Sym(points)."""
    gens = [{points[0]: points[1], points[1]: points[0]}]
    if len(points) > 2:
        gens.append({points[i]: points[(i + 1) % len(points)] for i in range(len(points))})
    return gens


def verify_block_preservation(components: Sequence[GroupCode],
                              phi: "Isometry | GroupCodeIso", *,
                              max_nodes: int = DEFAULT_MAX_NODES) -> bool:
    """Check an automorphism of a direct sum respects the block structure.

    True iff phi maps every embedded summand image onto an embedded
    summand image of an isomorphic component and fixes each isotype block
    setwise. Raises if phi is not an automorphism of the sum.
    """
    if isinstance(phi, GroupCodeIso):
        phi = phi.iso
    total = direct_sum_all(list(components))
    assert isinstance(total, GroupCode)
    image = {phi.apply(w) for w in total.words}
    candidate = GroupCodeIso(phi, total, total)
    if image != total.word_set or not candidate.verify(pair_check=False):
        raise PreconditionError("phi is not a group-code automorphism of the sum")

    spans: list[tuple[int, int]] = []
    start = 0
    for comp in components:
        spans.append((start, start + comp.length))
        start += comp.length
    e = total.identity_word()

    def embedded(k: int) -> frozenset[Word]:
        lo, hi = spans[k]
        return frozenset(e[:lo] + w + e[hi:] for w in components[k].words)

    embedded_sets = [embedded(k) for k in range(len(components))]
    mapping: dict[int, int] = {}
    for j, emb in enumerate(embedded_sets):
        img = frozenset(phi.apply(w) for w in emb)
        hits = [k for k, target in enumerate(embedded_sets) if target == img]
        if len(hits) != 1:
            return False
        mapping[j] = hits[0]
    if sorted(mapping.values()) != list(range(len(components))):
        return False
    # isotype classes must be fixed setwise, and images must be isomorphic
    classes: list[list[int]] = []
    for j in range(len(components)):
        for cls in classes:
            if gc_isomorphic(components[cls[0]], components[j], max_nodes=max_nodes) is not None:
                cls.append(j)
                break
        else:
            classes.append([j])
    class_of = {j: ci for ci, cls in enumerate(classes) for j in cls}
    for j, k in mapping.items():
        if class_of[j] != class_of[k]:
            return False
    return True
