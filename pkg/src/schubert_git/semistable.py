"""Semistability decision procedures for Schubert varieties under the
one-parameter subgroups lambda_s.

The whole theory reduces to one exact number per element: the coefficient
a_s of alpha_s in w(chi).  X(w) admits semistable points iff a_s <= 0;
stability equals semistability on X(w) iff no v <= w pairs to zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil
from typing import FrozenSet, List, Tuple

from .rootsys import RootSystem, RootSystemError, WeightVec
from .weyl import CosetSystem, WeylElement, enumerate_WJ, maximal_coset

__all__ = [
    "LinearizationContext",
    "UniquenessError",
    "make_context",
    "minuscule_context",
    "admits_semistable",
    "admits_semistable_T",
    "stable_equals_semistable",
    "ss_equals_s_whole_space",
    "minimal_admitting",
    "tau_sc",
    "minimal_schubert_minuscule",
]


class UniquenessError(RuntimeError):
    """A uniqueness guarantee of the theory failed; this should never happen
    and would falsify a theorem, so it surfaces loudly."""


@dataclass(frozen=True)
class LinearizationContext:
    """A dominant character chi, the derived parabolic subset J (the vanishing
    set of chi's fundamental-weight coordinates), and the chosen index s."""

    system: RootSystem
    chi: WeightVec
    s: int
    J: FrozenSet[int]
    coset: CosetSystem

    @property
    def chi_root_coords(self) -> Tuple[Fraction, ...]:
        return self.system.root_coords(self.chi)


def make_context(system: RootSystem, chi: WeightVec, s: int) -> LinearizationContext:
    if not 1 <= s <= system.rank:
        raise RootSystemError(f"one-parameter index {s} out of range")
    m = system.weight_coords(chi)
    if any(c < 0 for c in m):
        raise RootSystemError("chi must be dominant")
    if all(c == 0 for c in m):
        raise RootSystemError("chi must be nonzero")
    J = frozenset(i + 1 for i, c in enumerate(m) if c == 0)
    coset = enumerate_WJ(system, J)
    return LinearizationContext(system, system.to_weight_basis(chi), s, J, coset)


def minuscule_context(system: RootSystem, r: int, s: int) -> LinearizationContext:
    """Context for chi = m*omega_r with m the least multiple in the root lattice."""
    if not system.is_minuscule(r):
        raise RootSystemError(f"omega_{r} is not minuscule in {system!r}")
    m = system.least_m_root_lattice(r)
    coords = tuple(Fraction(m if i == r - 1 else 0) for i in range(system.rank))
    return make_context(system, WeightVec(coords, "weight"), s)


def _pairing(ctx: LinearizationContext, w: WeylElement) -> Fraction:
    return w.apply_root_coords(ctx.chi_root_coords)[ctx.s - 1]


def admits_semistable(w: WeylElement, ctx: LinearizationContext) -> Tuple[bool, Fraction]:
    """Whether X(w) has lambda_s-semistable points, with the pairing value
    <w(chi), lambda_s> that decides it."""
    ctx.coset.require(w)
    value = _pairing(ctx, w)
    return value <= 0, value


def admits_semistable_T(w: WeylElement, ctx: LinearizationContext) -> bool:
    """Whether X(w) has T-semistable points: w(chi) <= 0 coordinatewise,
    equivalently admits_semistable at every s."""
    ctx.coset.require(w)
    image = w.apply_root_coords(ctx.chi_root_coords)
    return all(c <= 0 for c in image)


def stable_equals_semistable(w: WeylElement, ctx: LinearizationContext) -> bool:
    """True iff <v(chi), lambda_s> != 0 for every v <= w in W^J."""
    ctx.coset.require(w)
    return all(_pairing(ctx, v) != 0 for v in ctx.coset.lower_interval(w))


def ss_equals_s_whole_space(ctx: LinearizationContext) -> bool:
    """Stable = semistable on all of G/P: no v in W^J pairs to zero.

    Computed both by the full scan and by the reduced criterion (only the
    Bruhat-minimal admitting elements need checking); the two must agree.
    """
    full = all(_pairing(ctx, v) != 0 for v in ctx.coset.elements)
    reduced = all(_pairing(ctx, v) != 0 for v in minimal_admitting(ctx))
    assert full == reduced
    return full


def minimal_admitting(ctx: LinearizationContext) -> List[WeylElement]:
    """The Bruhat-minimal elements of {w in W^J : <w(chi), lambda_s> <= 0}.

    Every admitting element dominates one of these; the list is an antichain,
    ordered by (length, word).
    """
    admitting = [w for w in ctx.coset.elements if _pairing(ctx, w) <= 0]
    return ctx.coset.minimal_elements(admitting)


def _drop_at(ctx_or_system, coset: CosetSystem, omega_root, s: int, w: WeylElement) -> Fraction:
    return omega_root[s - 1] - w.apply_root_coords(omega_root)[s - 1]


def tau_sc(system: RootSystem, r: int, s: int, c: int) -> WeylElement:
    """The unique Bruhat-minimal element of W^{S minus {alpha_r}} whose
    omega_r-drop at position s equals c (omega_r minuscule, 0 <= c <= a_s).

    Found by a length-ordered scan; a non-singleton minimal set would
    falsify the uniqueness guarantee and raises hard.
    """
    if not system.is_minuscule(r):
        raise RootSystemError(f"omega_{r} is not minuscule in {system!r}")
    if not 1 <= s <= system.rank:
        raise RootSystemError(f"one-parameter index {s} out of range")
    coset = maximal_coset(system, r)
    omega = system.fundamental_weight(r).coords
    a_s = _drop_at(system, coset, omega, s, coset.longest)
    if not (0 <= c <= a_s):
        raise RootSystemError(f"drop target {c} outside [0, {a_s}]")
    with_drop = [w for w in coset.elements if _drop_at(system, coset, omega, s, w) == c]
    minimal = coset.minimal_elements(with_drop)
    if len(minimal) != 1:
        raise UniquenessError(
            f"drop-{c} minimal set at s={s} in {system!r} is {minimal!r}, not a singleton"
        )
    return minimal[0]


def minimal_schubert_minuscule(
    system: RootSystem, r: int, s: int
) -> Tuple[WeylElement, Fraction, bool]:
    """The unique minimal w in W^{S minus {alpha_r}} whose Schubert variety
    admits lambda_s-semistable points for chi = m*omega_r, plus the pairing
    <w(omega_r), lambda_s> and the stable-equals-semistable verdict.

    Computed two ways and cross-asserted: via the least drop q with
    q*m >= m_s and the unique minimal drop-q element, and via the
    Bruhat-minimal admitting scan.
    """
    if not system.is_minuscule(r):
        raise RootSystemError(f"omega_{r} is not minuscule in {system!r}")
    m = system.least_m_root_lattice(r)
    omega = system.fundamental_weight(r).coords
    m_s = m * omega[s - 1]
    assert m_s.denominator == 1 and m_s > 0
    q = ceil(Fraction(m_s, m))
    by_formula = tau_sc(system, r, s, q)

    ctx = minuscule_context(system, r, s)
    antichain = minimal_admitting(ctx)
    if len(antichain) != 1:
        raise UniquenessError(
            f"minimal admitting set for m*omega_{r}, s={s} in {system!r} is not a singleton"
        )
    if antichain[0] != by_formula:
        raise UniquenessError(
            f"drop search and admitting search disagree for (r={r}, s={s}) in {system!r}"
        )
    w = by_formula
    pairing = w.apply_root_coords(omega)[s - 1]
    return w, pairing, pairing != 0
