"""Exact root-system and weight-lattice arithmetic for A, B, C, D, E6, E7.

Everything is computed over the rationals with ``fractions.Fraction``;
there is no floating point anywhere.  Node numbering follows Humphreys
(in type B the last node is the short root, in type D the fork sits at
the last two nodes, the E-series has the branch node attached to node 4).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import Iterable, Sequence, Tuple

Vector = Tuple[Fraction, ...]
IntVector = Tuple[int, ...]

ROOT = "root"
WEIGHT = "weight"

ADMISSIBLE_RANKS = {
    "A": lambda n: n >= 1,
    "B": lambda n: n >= 2,
    "C": lambda n: n >= 2,
    "D": lambda n: n >= 4,
    "E6": lambda n: n == 6,
    "E7": lambda n: n == 7,
}


class RootSystemError(ValueError):
    """Inadmissible type/rank or malformed weight data."""


@dataclass(frozen=True)
class WeightVec:
    """A weight with exact rational coordinates and an explicit basis tag.

    ``basis == "root"`` means coordinates in the simple roots,
    ``basis == "weight"`` means coordinates in the fundamental weights.
    """

    coords: Vector
    basis: str

    def __post_init__(self):
        if self.basis not in (ROOT, WEIGHT):
            raise RootSystemError(f"unknown basis tag {self.basis!r}")
        object.__setattr__(self, "coords", tuple(Fraction(c) for c in self.coords))

    @property
    def rank(self) -> int:
        return len(self.coords)


def _mat_vec(mat: Sequence[Sequence[Fraction]], vec: Sequence[Fraction]) -> Vector:
    return tuple(sum(row[j] * vec[j] for j in range(len(vec))) for row in mat)


def _invert_exact(mat: Sequence[Sequence[int]]) -> Tuple[Vector, ...]:
    """Exact inverse of a small integer matrix by Gauss-Jordan elimination."""
    n = len(mat)
    work = [[Fraction(mat[i][j]) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)]
            for i in range(n)]
    for col in range(n):
        pivot = next(r for r in range(col, n) if work[r][col] != 0)
        work[col], work[pivot] = work[pivot], work[col]
        pv = work[col][col]
        work[col] = [x / pv for x in work[col]]
        for r in range(n):
            if r != col and work[r][col] != 0:
                factor = work[r][col]
                work[r] = [a - factor * b for a, b in zip(work[r], work[col])]
    return tuple(tuple(row[n:]) for row in work)


def cartan_matrix(type_label: str, n: int) -> Tuple[IntVector, ...]:
    """Cartan matrix with entry C[i][j] = <alpha_j, alpha_i^vee> (0-indexed)."""
    C = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def bond(i, j):
        C[i][j] = C[j][i] = -1

    if type_label in ("A", "B", "C"):
        for i in range(n - 1):
            bond(i, i + 1)
        if type_label == "B" and n >= 2:
            # alpha_n short: <alpha_{n-1}, alpha_n^vee> = -2
            C[n - 1][n - 2] = -2
        if type_label == "C" and n >= 2:
            # alpha_n long: <alpha_n, alpha_{n-1}^vee> = -2
            C[n - 2][n - 1] = -2
    elif type_label == "D":
        for i in range(n - 3):
            bond(i, i + 1)
        bond(n - 3, n - 2)
        bond(n - 3, n - 1)
    elif type_label in ("E6", "E7"):
        # chain 1-3-4-5-6(-7), node 2 attached to node 4
        chain = [1, 3, 4, 5, 6, 7][: n - 1]
        for a, b in zip(chain, chain[1:]):
            bond(a - 1, b - 1)
        bond(1, 3)
    else:
        raise RootSystemError(f"unknown type {type_label!r}")
    return tuple(tuple(row) for row in C)


def positive_root_count(type_label: str, n: int) -> int:
    return {
        "A": n * (n + 1) // 2,
        "B": n * n,
        "C": n * n,
        "D": n * (n - 1),
        "E6": 36,
        "E7": 63,
    }[type_label]


class RootSystem:
    """Immutable Cartan/root/weight data for one simple type and rank.

    Positive roots are generated by closing the simple roots under the
    simple reflections; coroot coordinates are carried along so that
    pairings against arbitrary coroots stay exact integer arithmetic.
    """

    def __init__(self, type_label: str, rank: int):
        check = ADMISSIBLE_RANKS.get(type_label)
        if check is None or not check(rank):
            raise RootSystemError(f"inadmissible root system ({type_label}, {rank})")
        self.type_label = type_label
        self.rank = rank
        self.cartan = cartan_matrix(type_label, rank)
        self.inv_cartan = _invert_exact(self.cartan)
        self.positive_roots, self.positive_coroots = self._generate_positive_roots()
        assert len(self.positive_roots) == positive_root_count(type_label, rank)
        self.highest_root = self._find_highest_root()
        # lazily filled caches shared by the Weyl-group layer
        self._element_cache: dict = {}
        self._left_mul_cache: dict = {}
        self._bruhat_memo: dict = {}
        self._coset_cache: dict = {}

    def __repr__(self):
        return f"RootSystem({self.type_label}{self.rank})"

    # -- construction -------------------------------------------------

    def _reflect_root(self, i: int, root: IntVector) -> IntVector:
        # s_i changes only the alpha_i coordinate: r_i -> r_i - sum_j C[i][j] r_j
        drop = sum(self.cartan[i][j] * root[j] for j in range(self.rank))
        out = list(root)
        out[i] -= drop
        return tuple(out)

    def _reflect_coroot(self, i: int, coroot: IntVector) -> IntVector:
        drop = sum(self.cartan[j][i] * coroot[j] for j in range(self.rank))
        out = list(coroot)
        out[i] -= drop
        return tuple(out)

    def _generate_positive_roots(self):
        n = self.rank
        simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
        seen = {(simple[i], simple[i]) for i in range(n)}
        frontier = list(seen)
        while frontier:
            nxt = []
            for root, coroot in frontier:
                for i in range(n):
                    r2 = self._reflect_root(i, root)
                    if sum(r2) <= 0:
                        continue
                    c2 = self._reflect_coroot(i, coroot)
                    if (r2, c2) not in seen:
                        seen.add((r2, c2))
                        nxt.append((r2, c2))
            frontier = nxt
        ordered = sorted(seen, key=lambda rc: (sum(rc[0]), rc[0]))
        roots = tuple(rc[0] for rc in ordered)
        coroots = tuple(rc[1] for rc in ordered)
        return roots, coroots

    def _find_highest_root(self) -> IntVector:
        top = max(self.positive_roots, key=sum)
        for beta in self.positive_roots:
            diff = tuple(t - b for t, b in zip(top, beta))
            if any(d < 0 for d in diff):
                raise RootSystemError("highest root does not dominate all positive roots")
        return top

    # -- basis handling -----------------------------------------------

    def _check_rank(self, mu: WeightVec):
        if mu.rank != self.rank:
            raise RootSystemError(f"weight of rank {mu.rank} in {self!r}")

    def to_root_basis(self, mu: WeightVec) -> WeightVec:
        self._check_rank(mu)
        if mu.basis == ROOT:
            return mu
        return WeightVec(_mat_vec(self.inv_cartan, mu.coords), ROOT)

    def to_weight_basis(self, mu: WeightVec) -> WeightVec:
        self._check_rank(mu)
        if mu.basis == WEIGHT:
            return mu
        coords = tuple(
            sum(self.cartan[i][j] * mu.coords[j] for j in range(self.rank))
            for i in range(self.rank)
        )
        return WeightVec(coords, WEIGHT)

    def root_coords(self, mu: WeightVec) -> Vector:
        return self.to_root_basis(mu).coords

    def weight_coords(self, mu: WeightVec) -> Vector:
        return self.to_weight_basis(mu).coords

    def is_dominant(self, mu: WeightVec) -> bool:
        return all(c >= 0 for c in self.weight_coords(mu))

    # -- the operations of this module --------------------------------

    def fundamental_weight(self, r: int) -> WeightVec:
        """omega_r in root-basis coordinates (column r of the inverse Cartan)."""
        if not 1 <= r <= self.rank:
            raise RootSystemError(f"fundamental weight index {r} out of range")
        coords = tuple(self.inv_cartan[j][r - 1] for j in range(self.rank))
        assert all(c > 0 for c in coords)
        return WeightVec(coords, ROOT)

    def pairing_lambda(self, mu: WeightVec, s: int) -> Fraction:
        """<mu, lambda_s>: the coefficient of alpha_s when mu is written in simple roots."""
        if not 1 <= s <= self.rank:
            raise RootSystemError(f"one-parameter index {s} out of range")
        return self.root_coords(mu)[s - 1]

    def is_minuscule(self, r: int) -> bool:
        """True when <omega_r, beta^vee> <= 1 for every positive root beta."""
        if not 1 <= r <= self.rank:
            raise RootSystemError(f"index {r} out of range")
        return all(coroot[r - 1] <= 1 for coroot in self.positive_coroots)

    def is_cominuscule(self, s: int) -> bool:
        """True when alpha_s appears with coefficient 1 in the highest root."""
        if not 1 <= s <= self.rank:
            raise RootSystemError(f"index {s} out of range")
        return self.highest_root[s - 1] == 1

    def least_m_root_lattice(self, r: int) -> int:
        """Least m >= 1 with every root-basis coordinate of m*omega_r an integer."""
        coords = self.fundamental_weight(r).coords
        return lcm(*(c.denominator for c in coords))

    def dominance_leq(self, mu: WeightVec, chi: WeightVec) -> bool:
        """mu <= chi in dominance order: chi - mu a nonnegative integral root combination."""
        self._check_rank(mu)
        self._check_rank(chi)
        diff = tuple(a - b for a, b in zip(self.root_coords(chi), self.root_coords(mu)))
        return all(d >= 0 and d.denominator == 1 for d in diff)

    def minuscule_indices(self) -> Tuple[int, ...]:
        return tuple(r for r in range(1, self.rank + 1) if self.is_minuscule(r))


@lru_cache(maxsize=None)
def build_root_system(type_label: str, n: int) -> RootSystem:
    """Construct (and cache) the root system of the given type and rank."""
    return RootSystem(type_label, n)


def weight_from_weight_coords(coords: Iterable) -> WeightVec:
    return WeightVec(tuple(Fraction(c) for c in coords), WEIGHT)


def weight_from_root_coords(coords: Iterable) -> WeightVec:
    return WeightVec(tuple(Fraction(c) for c in coords), ROOT)
