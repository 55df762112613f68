"""Shared independent oracles for the test suite.

These deliberately avoid the production code paths they are used to check.
"""

from __future__ import annotations

from typing import Set, Tuple

from schubert_git.rootsys import RootSystem
from schubert_git.weyl import (
    CosetSystem,
    Matrix,
    WeylElement,
    _identity_matrix,
    _right_mul_matrix,
)


def subword_interval_matrices(system: RootSystem, w: WeylElement) -> Set[Matrix]:
    """All group elements arising as products of subwords of one reduced word
    of w: exactly the Bruhat lower interval of w in the full group.

    Computed with duplicate folding so the cost is bounded by the interval
    size rather than 2^l(w).
    """
    current: Set[Matrix] = {_identity_matrix(system.rank)}
    for q in w.word:
        current |= {_right_mul_matrix(system, m, q) for m in current}
    return current


def weight_order_leq(
    drop_u: Tuple, drop_w: Tuple
) -> bool:
    """Minuscule weight-order oracle: u <= w iff the drop vector of u is
    coordinatewise below the drop vector of w."""
    return all(a <= b for a, b in zip(drop_u, drop_w))


def drops(system: RootSystem, cs: CosetSystem, r: int):
    """Drop vectors omega_r - w(omega_r) for all elements of a coset."""
    omega = system.fundamental_weight(r).coords
    return {
        w: tuple(a - b for a, b in zip(omega, w.apply_root_coords(omega)))
        for w in cs.elements
    }
