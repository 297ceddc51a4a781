"""Words, codes, group codes, the Hamming metric, and parameter reports.

Words are plain tuples of element indices. Coordinates are 0-based
throughout the Python API; the JSON layer converts to 1-based.
Codes store their words sorted lexicographically and deduplicated, so set
comparisons, hashing, and serialization are deterministic.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .errors import ClosureError, IncompatibleError, InvalidWordError, PreconditionError
from .groups import FiniteGroup

Word = tuple[int, ...]


def hamming_distance(x: Word, y: Word) -> int:
    """Number of coordinates where two equal-length words differ."""
    if len(x) != len(y):
        raise IncompatibleError(f"words of length {len(x)} and {len(y)}")
    return sum(a != b for a, b in zip(x, y))


def weight(x: Word, x0: Word) -> int:
    """Weight of x relative to the base word x0: their Hamming distance."""
    return hamming_distance(x, x0)


def _check_word(w: Sequence[int], n: int, q: int) -> Word:
    t = tuple(int(s) for s in w)
    if len(t) != n:
        raise InvalidWordError(f"word length {len(t)}, expected {n}")
    for s in t:
        if not 0 <= s < q:
            raise InvalidWordError(f"symbol {s} outside alphabet 0..{q - 1}")
    return t


@dataclass(frozen=True)
class Code:
    """A non-empty set of equal-length words over a finite alphabet.

    The alphabet is always carried as a FiniteGroup; plain codes simply
    ignore the group structure.
    """

    alphabet: FiniteGroup
    length: int
    words: tuple[Word, ...]

    @classmethod
    def from_words(cls, alphabet: FiniteGroup, length: int, words: Iterable[Sequence[int]]) -> "Code":
        checked = sorted({_check_word(w, length, alphabet.order) for w in words})
        if not checked:
            raise PreconditionError("a code must be a non-empty word set")
        if length < 1:
            raise PreconditionError(f"code length must be positive, got {length}")
        return cls._build(alphabet, length, tuple(checked))

    @classmethod
    def _build(cls, alphabet: FiniteGroup, length: int, words: tuple[Word, ...]) -> "Code":
        # internal fast path: words already canonical and validated
        return cls(alphabet=alphabet, length=length, words=words)

    @cached_property
    def word_set(self) -> frozenset[Word]:
        return frozenset(self.words)

    @cached_property
    def word_array(self) -> np.ndarray:
        return np.array(self.words, dtype=np.int64).reshape(len(self.words), self.length)

    @property
    def size(self) -> int:
        return len(self.words)

    def __contains__(self, w: Word) -> bool:
        return w in self.word_set

    def is_group_code(self) -> bool:
        return isinstance(self, GroupCode)

    def identity_word(self) -> Word:
        return (self.alphabet.identity,) * self.length

    def __repr__(self) -> str:
        kind = type(self).__name__
        return f"{kind}(n={self.length}, size={self.size}, alphabet={self.alphabet.label})"


@dataclass(frozen=True, repr=False)
class GroupCode(Code):
    """A subgroup of G^n, stored like a Code but validated for closure."""

    @classmethod
    def from_words(cls, alphabet: FiniteGroup, length: int, words: Iterable[Sequence[int]]) -> "GroupCode":
        code = Code.from_words(alphabet, length, words)
        _check_subgroup(alphabet, code.length, code.words)
        return cls._build(alphabet, code.length, code.words)

    @classmethod
    def generate(cls, alphabet: FiniteGroup, length: int, generators: Iterable[Sequence[int]]) -> "GroupCode":
        return generate_group_code(alphabet, length, generators)


def _check_subgroup(G: FiniteGroup, n: int, words: tuple[Word, ...]) -> None:
    ws = frozenset(words)
    e = (G.identity,) * n
    if e not in ws:
        raise ClosureError("group code does not contain the identity word", witness=(e,))
    # fast sound check: greedily pick generators from the set and close them;
    # the closure is a subgroup, so it equals the set iff the set is one
    gens: list[Word] = []
    closure = {e}
    for w in words:
        if w in closure:
            continue
        gens.append(w)
        frontier = list(closure)
        while frontier:
            x = frontier.pop()
            for g in gens:
                y = tuple(G.table[a][b] for a, b in zip(x, g))
                if y not in closure:
                    closure.add(y)
                    frontier.append(y)
        if len(closure) > len(ws):
            break
    if len(closure) == len(ws):
        return
    # failure path: locate a user-meaningful witness inside the given set
    for x in words:
        xinv = tuple(G.inverse[s] for s in x)
        if xinv not in ws:
            raise ClosureError(f"inverse of {x} missing", witness=(x,))
    for x in words:
        for y in words:
            xy = tuple(G.table[a][b] for a, b in zip(x, y))
            if xy not in ws:
                raise ClosureError(f"product of {x} and {y} escapes the set", witness=(x, y))
    raise ClosureError("word set is not closed under the group operations", witness=())


def word_mul(G: FiniteGroup, x: Word, y: Word) -> Word:
    return tuple(G.table[a][b] for a, b in zip(x, y))


def word_inv(G: FiniteGroup, x: Word) -> Word:
    return tuple(G.inverse[a] for a in x)


def generate_group_code(G: FiniteGroup, length: int, generators: Iterable[Sequence[int]]) -> GroupCode:
    """Smallest subgroup of G^n containing the generator words."""
    gens = [_check_word(w, length, G.order) for w in generators]
    e = (G.identity,) * length
    known = {e}
    frontier = [e]
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = word_mul(G, x, g)
            if y not in known:
                known.add(y)
                frontier.append(y)
    return GroupCode._build(G, length, tuple(sorted(known)))


def min_distance(C: Code) -> int:
    """Minimum pairwise Hamming distance; n+1 for a singleton code.

    Always the pairwise scan, so it stays an independent cross-check for
    the weight-based shortcut available on group codes.
    """
    m = C.size
    if m < 2:
        return C.length + 1
    if m > 64:
        arr = C.word_array
        best = C.length
        for i in range(m - 1):
            d = int((arr[i + 1:] != arr[i]).sum(axis=1).min())
            if d < best:
                best = d
                if best == 1:
                    break
        return best
    best = C.length
    for x, y in itertools.combinations(C.words, 2):
        d = hamming_distance(x, y)
        if d < best:
            best = d
    return best


def min_weight_nonidentity(C: GroupCode) -> int:
    """Least weight of a non-identity codeword; equals min_distance on group codes."""
    e = C.identity_word()
    best = C.length + 1
    for w in C.words:
        if w == e:
            continue
        d = hamming_distance(w, e)
        if d < best:
            best = d
    return best


def projection(C: Code, coords: Sequence[int]) -> Code:
    """Restrict every word to the given strictly increasing coordinate subset."""
    ys = tuple(int(i) for i in coords)
    if not ys:
        raise PreconditionError("projection onto an empty coordinate set")
    if any(not 0 <= i < C.length for i in ys):
        raise PreconditionError(f"projection coordinates {ys} outside 0..{C.length - 1}")
    if any(a >= b for a, b in zip(ys, ys[1:])):
        raise PreconditionError(f"projection coordinates must be strictly increasing, got {ys}")
    words = tuple(sorted({tuple(w[i] for i in ys) for w in C.words}))
    if isinstance(C, GroupCode):
        # homomorphic image of a subgroup: closure holds by construction
        return GroupCode._build(C.alphabet, len(ys), words)
    return Code._build(C.alphabet, len(ys), words)


def direct_sum(C: Code, D: Code) -> Code:
    """Concatenation code {(x, y) : x in C, y in D} over a common alphabet."""
    if not C.alphabet.matches(D.alphabet):
        raise IncompatibleError(
            f"direct sum over different alphabets ({C.alphabet.label} vs {D.alphabet.label})")
    words = tuple(sorted(x + y for x in C.words for y in D.words))
    if isinstance(C, GroupCode) and isinstance(D, GroupCode):
        return GroupCode._build(C.alphabet, C.length + D.length, words)
    return Code._build(C.alphabet, C.length + D.length, words)


def direct_sum_all(parts: Sequence[Code]) -> Code:
    if not parts:
        raise PreconditionError("direct sum of an empty family")
    acc = parts[0]
    for p in parts[1:]:
        acc = direct_sum(acc, p)
    return acc


@dataclass(frozen=True)
class ParameterReport:
    """[n, k, d]_q data plus cardinality and correction capacity.

    ``dimension_exact`` is set only when the cardinality is an exact power
    of q; classification logic elsewhere works on the integers size and q,
    never on the float.
    """

    length: int
    alphabet_size: int
    size: int
    dimension: float
    dimension_exact: int | None
    min_distance: int
    correction_capacity: int


def _exact_log(size: int, q: int) -> int | None:
    if q == 1:
        return 0 if size == 1 else None
    k, p = 0, 1
    while p < size:
        p *= q
        k += 1
    return k if p == size else None


def parameters(C: Code) -> ParameterReport:
    """Compute the parameter report; the Singleton inequality is asserted."""
    q, n = C.alphabet.order, C.length
    size = C.size
    d = min_distance(C)
    exact = _exact_log(size, q)
    dim = float(exact) if exact is not None else math.log(size, q)
    e = (d - 1) // 2
    assert size <= q ** (n - d + 1), "Singleton bound violated; metric code is corrupt"
    return ParameterReport(length=n, alphabet_size=q, size=size, dimension=dim,
                           dimension_exact=exact, min_distance=d, correction_capacity=e)


def all_words(q: int, n: int) -> Iterable[Word]:
    """Every word of A^n in lexicographic order."""
    return itertools.product(range(q), repeat=n)


def full_space(G: FiniteGroup, n: int) -> GroupCode:
    return GroupCode._build(G, n, tuple(all_words(G.order, n)))
