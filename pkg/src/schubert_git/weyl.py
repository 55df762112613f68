"""Weyl group elements, reduced words, Bruhat order, and minimal coset
representatives W^J, all over exact integer matrices.

Elements compare equal exactly when their actions on the root lattice
agree; words are only ever bookkeeping for one reduced expression.  The
memo tables hanging off a RootSystem only cache pure results, so
concurrent use can at worst duplicate work, never observe wrong state.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from .rootsys import ROOT, RootSystem, RootSystemError, WeightVec

Word = Tuple[int, ...]
Matrix = Tuple[Tuple[int, ...], ...]

GUARD_ENV_VAR = "SCHUBERT_GIT_COSET_GUARD"
DEFAULT_COSET_GUARD = 10**6


class CosetGuardError(RuntimeError):
    """Raised when a W^J enumeration would exceed the configured guard."""


class NotInCosetError(ValueError):
    """Raised when an operation requires w in W^J but w is not."""


class WeylElement:
    """A Weyl group element: action matrix on root-basis coordinates plus
    a reduced word and the length.

    Equality and hashing are by the action matrix, never by words.  The
    ``word`` attribute is the canonical reduced word (smallest left descent
    stripped first), so it is independent of how the element was built.
    """

    __slots__ = ("system", "matrix", "length", "_hint", "_word")

    def __init__(self, system: RootSystem, matrix: Matrix, hint: Word, length: int):
        self.system = system
        self.matrix = matrix
        self.length = length
        self._hint = hint  # some reduced word, creation-order dependent
        self._word: Optional[Word] = None

    @property
    def word(self) -> Word:
        if self._word is None:
            self._word = _canonical_word(self.system, self.matrix)
        return self._word

    def __eq__(self, other):
        return (
            isinstance(other, WeylElement)
            and self.system is other.system
            and self.matrix == other.matrix
        )

    def __hash__(self):
        return hash(self.matrix)

    def __repr__(self):
        return f"W[{' '.join(map(str, self.word)) or 'id'}]"

    def word_str(self) -> str:
        """Serialized form used in reports, e.g. ``"2 1 3 2"`` (``"e"`` for id)."""
        return " ".join(map(str, self.word)) if self.word else "e"

    # -- group structure ----------------------------------------------

    def inverse(self) -> "WeylElement":
        return from_word(self.system, tuple(reversed(self._hint)))

    def apply_root_coords(self, coords: Sequence[Fraction]) -> Tuple[Fraction, ...]:
        return tuple(
            sum(row[j] * coords[j] for j in range(len(coords))) for row in self.matrix
        )

    def apply(self, mu: WeightVec) -> WeightVec:
        """w(mu), returned in the basis mu came in."""
        image = WeightVec(self.apply_root_coords(self.system.root_coords(mu)), ROOT)
        return image if mu.basis == ROOT else self.system.to_weight_basis(image)

    def left_descents(self) -> Tuple[int, ...]:
        """All q with l(s_q w) < l(w), read off the sign of w^{-1}(alpha_q)."""
        inv = self.inverse().matrix
        n = self.system.rank
        return tuple(
            q + 1 for q in range(n) if sum(inv[i][q] for i in range(n)) < 0
        )

    def right_descents(self) -> Tuple[int, ...]:
        n = self.system.rank
        return tuple(
            j + 1 for j in range(n) if sum(self.matrix[i][j] for i in range(n)) < 0
        )

    def in_coset(self, J: Iterable[int]) -> bool:
        """True when w(alpha_j) > 0 for every j in J, i.e. w is minimal in wW_J."""
        n = self.system.rank
        return all(
            sum(self.matrix[i][j - 1] for i in range(n)) > 0 for j in J
        )


def _identity_matrix(n: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def _length_of_matrix(system: RootSystem, matrix: Matrix) -> int:
    count = 0
    n = system.rank
    for beta in system.positive_roots:
        if sum(sum(matrix[i][j] * beta[j] for j in range(n)) for i in range(n)) < 0:
            count += 1
    return count


def _left_mul_matrix(system: RootSystem, q: int, matrix: Matrix) -> Matrix:
    """Matrix of s_q * w; only row q-1 changes."""
    n = system.rank
    row = tuple(
        matrix[q - 1][k]
        - sum(system.cartan[q - 1][l] * matrix[l][k] for l in range(n))
        for k in range(n)
    )
    out = list(matrix)
    out[q - 1] = row
    return tuple(out)


def _right_mul_matrix(system: RootSystem, matrix: Matrix, q: int) -> Matrix:
    """Matrix of w * s_q; column j picks up -C[q][j] times column q."""
    n = system.rank
    cart_row = system.cartan[q - 1]
    return tuple(
        tuple(matrix[k][j] - cart_row[j] * matrix[k][q - 1] for j in range(n))
        for k in range(n)
    )


def _canonical_word(system: RootSystem, matrix: Matrix) -> Word:
    """Reduced word by greedy left-descent stripping (smallest descent first)."""
    n = system.rank
    ident = _identity_matrix(n)
    inv = _invert_by_stripping_seed(system, matrix)
    word: List[int] = []
    while inv != ident:
        for q in range(n):
            if sum(inv[i][q] for i in range(n)) < 0:
                word.append(q + 1)
                inv = _right_mul_matrix(system, inv, q + 1)
                break
        else:
            raise RuntimeError("matrix is not a Weyl group element")
    return tuple(word)


def _invert_by_stripping_seed(system: RootSystem, matrix: Matrix) -> Matrix:
    """Inverse of a Weyl-group action matrix via right-descent stripping."""
    n = system.rank
    ident = _identity_matrix(n)
    work = matrix
    inv = ident
    while work != ident:
        for j in range(n):
            if sum(work[i][j] for i in range(n)) < 0:
                # work(alpha_j) < 0: peel a right descent; M * S_j1 ... S_jk = I
                work = _right_mul_matrix(system, work, j + 1)
                inv = _right_mul_matrix(system, inv, j + 1)
                break
        else:
            raise RuntimeError("matrix is not a Weyl group element")
    return inv


def _intern(system: RootSystem, matrix: Matrix, word_hint: Optional[Word] = None) -> WeylElement:
    cached = system._element_cache.get(matrix)
    if cached is not None:
        return cached
    length = _length_of_matrix(system, matrix)
    if word_hint is None or len(word_hint) != length:
        word_hint = _canonical_word(system, matrix)
        assert len(word_hint) == length
    el = WeylElement(system, matrix, word_hint, length)
    system._element_cache[matrix] = el
    return el


def identity(system: RootSystem) -> WeylElement:
    return _intern(system, _identity_matrix(system.rank), ())


def simple_reflection(system: RootSystem, q: int) -> WeylElement:
    if not 1 <= q <= system.rank:
        raise RootSystemError(f"simple reflection index {q} out of range")
    return left_mul(system, q, identity(system))


def left_mul(system: RootSystem, q: int, w: WeylElement) -> WeylElement:
    key = (q, w.matrix)
    cached = system._left_mul_cache.get(key)
    if cached is not None:
        return cached
    matrix = _left_mul_matrix(system, q, w.matrix)
    el = _intern(system, matrix, (q,) + w._hint)
    system._left_mul_cache[key] = el
    return el


def from_word(system: RootSystem, word: Iterable[int]) -> WeylElement:
    """Element of a word of simple indices (the word need not be reduced)."""
    el = identity(system)
    for q in reversed(tuple(word)):
        el = left_mul(system, q, el)
    return el


def is_reduced(system: RootSystem, word: Sequence[int]) -> bool:
    return from_word(system, word).length == len(word)


def multiply(u: WeylElement, w: WeylElement) -> WeylElement:
    if u.system is not w.system:
        raise RootSystemError("elements of different root systems")
    n = u.system.rank
    matrix = tuple(
        tuple(sum(u.matrix[i][k] * w.matrix[k][j] for k in range(n)) for j in range(n))
        for i in range(n)
    )
    return _intern(u.system, matrix, u._hint + w._hint)


def inverse(w: WeylElement) -> WeylElement:
    return w.inverse()


def left_descents(w: WeylElement) -> Tuple[int, ...]:
    return w.left_descents()


def apply(w: WeylElement, mu: WeightVec) -> WeightVec:
    return w.apply(mu)


def bruhat_leq(u: WeylElement, w: WeylElement) -> bool:
    """Bruhat order via the lifting property, memoized on the root system."""
    if u.system is not w.system:
        raise RootSystemError("elements of different root systems")
    system = u.system
    if u.length > w.length:
        return False
    if u.length == 0 or u.matrix == w.matrix:
        return True
    if u.length == w.length:
        return False
    key = (u.matrix, w.matrix)
    memo = system._bruhat_memo
    hit = memo.get(key)
    if hit is not None:
        return hit
    q = w._hint[0]
    sw = left_mul(system, q, w)
    su = left_mul(system, q, u)
    if su.length < u.length:
        res = bruhat_leq(su, sw)
    else:
        res = bruhat_leq(u, sw)
    memo[key] = res
    return res


@dataclass(frozen=True)
class CosetSystem:
    """The poset of minimal coset representatives W^J, graded by length."""

    system: RootSystem
    J: FrozenSet[int]
    elements: Tuple[WeylElement, ...]
    _index: Dict[Matrix, int] = field(repr=False, hash=False, compare=False, default_factory=dict)

    def __post_init__(self):
        for i, w in enumerate(self.elements):
            self._index[w.matrix] = i

    def __len__(self):
        return len(self.elements)

    def __contains__(self, w: WeylElement) -> bool:
        return w.matrix in self._index

    @property
    def longest(self) -> WeylElement:
        return self.elements[-1]

    def require(self, w: WeylElement) -> None:
        if w not in self:
            raise NotInCosetError(f"{w!r} is not a minimal representative for J={sorted(self.J)}")

    def lower_interval(self, w: WeylElement) -> List[WeylElement]:
        """All v in W^J with v <= w in Bruhat order."""
        self.require(w)
        return [v for v in self.elements if v.length <= w.length and bruhat_leq(v, w)]

    def cover_relations(self) -> List[Tuple[WeylElement, WeylElement]]:
        """(v, w) pairs with v < w and l(w) = l(v) + 1; W^J is graded so these
        are exactly the covers of the induced order."""
        covers = []
        by_length: Dict[int, List[WeylElement]] = {}
        for w in self.elements:
            by_length.setdefault(w.length, []).append(w)
        for ell, ws in by_length.items():
            for w in ws:
                for v in by_length.get(ell - 1, ()):
                    if bruhat_leq(v, w):
                        covers.append((v, w))
        return covers

    def minimal_elements(self, subset: Iterable[WeylElement]) -> List[WeylElement]:
        """Bruhat-minimal members of a subset of this coset (an antichain)."""
        pool = sorted(set(subset), key=lambda w: (w.length, w.word))
        out: List[WeylElement] = []
        for w in pool:
            if not any(bruhat_leq(v, w) for v in out):
                out.append(w)
        return out


def _coset_guard(guard: Optional[int]) -> int:
    if guard is not None:
        return guard
    raw = os.environ.get(GUARD_ENV_VAR)
    return int(raw) if raw else DEFAULT_COSET_GUARD


def enumerate_WJ(system: RootSystem, J: Iterable[int], guard: Optional[int] = None) -> CosetSystem:
    """Breadth-first enumeration of W^J by length, left-multiplying by simple
    reflections and keeping length-increasing products that stay in W^J."""
    Jset = frozenset(J)
    for j in Jset:
        if not 1 <= j <= system.rank:
            raise RootSystemError(f"parabolic index {j} out of range")
    cached = system._coset_cache.get(Jset)
    if cached is not None:
        return cached
    limit = _coset_guard(guard)
    ident = identity(system)
    seen = {ident.matrix}
    elements = [ident]
    layer = [ident]
    while layer:
        nxt = []
        for w in layer:
            for q in range(1, system.rank + 1):
                w2 = left_mul(system, q, w)
                if w2.length != w.length + 1 or w2.matrix in seen:
                    continue
                if not w2.in_coset(Jset):
                    continue
                seen.add(w2.matrix)
                nxt.append(w2)
                if len(seen) > limit:
                    raise CosetGuardError(
                        f"|W^J| exceeds guard {limit} for J={sorted(Jset)} in {system!r}"
                    )
        nxt.sort(key=lambda w: w.word)
        elements.extend(nxt)
        layer = nxt
    cs = CosetSystem(system, Jset, tuple(elements))
    system._coset_cache[Jset] = cs
    return cs


def maximal_coset(system: RootSystem, r: int, guard: Optional[int] = None) -> CosetSystem:
    """W^{S minus {alpha_r}}, the coset system of a maximal parabolic."""
    if not 1 <= r <= system.rank:
        raise RootSystemError(f"index {r} out of range")
    J = frozenset(range(1, system.rank + 1)) - {r}
    return enumerate_WJ(system, J, guard)


def lower_interval(w: WeylElement, cs: CosetSystem) -> List[WeylElement]:
    return cs.lower_interval(w)


def schubert_divisor_moves(w: WeylElement, J: Iterable[int]) -> List[Tuple[int, WeylElement]]:
    """All (q, s_q w) with w^{-1}(alpha_q) < 0; each s_q w stays in W^J with
    length l(w) - 1."""
    Jset = frozenset(J)
    if not w.in_coset(Jset):
        raise NotInCosetError(f"{w!r} not in W^J for J={sorted(Jset)}")
    moves = []
    for q in w.left_descents():
        w2 = left_mul(w.system, q, w)
        assert w2.length == w.length - 1
        assert w2.in_coset(Jset)
        moves.append((q, w2))
    return moves


def one_line_notation_A(w: WeylElement, n: int) -> Tuple[int, ...]:
    """One-line notation (w(1), ..., w(n)) for type A_{n-1} elements."""
    if w.system.type_label != "A" or w.system.rank != n - 1:
        raise RootSystemError(f"one-line notation needs ambient A_{n - 1}")
    perm = list(range(1, n + 1))
    for q in w.word:
        perm[q - 1], perm[q] = perm[q], perm[q - 1]
    return tuple(perm)


def grassmannian_factorization(w: WeylElement, n: int, r: int) -> Tuple[int, Tuple[int, ...]]:
    """Factor w in W^{S minus {alpha_r}} (type A_{n-1}, w != id) as the chain of
    descending blocks (s_{a_i}..s_i)(s_{a_{i+1}}..s_{i+1})...(s_{a_r}..s_r).

    Returns (i, (a_i, ..., a_r)); the a_j are strictly increasing with
    a_j >= j, and l(w) = sum(a_j - j + 1).  Raises if w does not fit.
    """
    if w.length == 0:
        raise ValueError("identity has no block factorization")
    line = one_line_notation_A(w, n)
    i = next(j for j in range(1, r + 1) if line[j - 1] != j)
    a = tuple(line[j - 1] - 1 for j in range(i, r + 1))
    if any(a[t] < i + t for t in range(len(a))):
        raise ValueError(f"{w!r} is not a minimal representative shape")
    if any(a[t] >= a[t + 1] for t in range(len(a) - 1)):
        raise ValueError(f"{w!r} has non-increasing block tops")
    word = tuple(
        x
        for j, aj in zip(range(i, r + 1), a)
        for x in range(aj, j - 1, -1)
    )
    rebuilt = from_word(w.system, word)
    if rebuilt != w or len(word) != w.length:
        raise ValueError(f"block factorization failed for {w!r}")
    return i, a


# -- closed-form coset generators for the spin cosets -----------------


def spin_coset_words_typeB(n: int) -> List[Word]:
    """Words for all of W^{S minus {alpha_n}} in type B_n, generated from the
    admissible (l_1, ..., l_n) profiles: 0 <= l_k <= n+1-k, l_{k-1} <= l_k + 1,
    and l_{k-1} <= l_k whenever l_k <= n-k."""

    def block(j: int, l: int) -> Word:
        return tuple(range(j + l - 1, j - 1, -1))

    profiles: List[Tuple[int, ...]] = []

    def rec(k: int, suffix: Tuple[int, ...]):
        if k == 0:
            profiles.append(suffix)
            return
        l_next = suffix[0] if suffix else None
        for l in range(0, n + 1 - k + 1):
            if l_next is not None:
                if l > l_next + 1:
                    continue
                if l_next <= n - (k + 1) and l > l_next:
                    continue
            rec(k - 1, (l,) + suffix)

    rec(n, ())
    return [
        tuple(x for k, l in enumerate(profile, start=1) for x in block(k, l))
        for profile in profiles
    ]


def spin_coset_words_typeD(n: int, node: int) -> List[Word]:
    """Words for W^{S minus {alpha_node}} in type D_n, node in {n-1, n}:
    alternating products of the fork blocks with strictly decreasing arguments."""
    if node not in (n - 1, n):
        raise RootSystemError("spin coset generator needs the fork nodes")

    def block(kind: int, l: int) -> Word:
        if l == n:
            return (kind,)
        return tuple(range(l - 1, n - 1)) + (kind,)

    other = n - 1 if node == n else n
    words: List[Word] = []
    for size in range(0, n):
        for args in combinations(range(2, n + 1), size):
            desc = tuple(sorted(args, reverse=True))
            kinds = [node if (size - 1 - pos) % 2 == 0 else other for pos in range(size)]
            words.append(tuple(x for kind, l in zip(kinds, desc) for x in block(kind, l)))
    return words
