"""Identification of the GIT quotient of the minimal admitting Schubert
variety: a point, a projective space, or a projectivized matrix space,
together with an independent section-counting oracle and the irreducible
decomposition of the invariant ring in the matrix case.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, gcd, lcm
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from .rootsys import RootSystem, RootSystemError, WeightVec
from .weyl import WeylElement, bruhat_leq, from_word, maximal_coset
from .semistable import minimal_schubert_minuscule
from .catalog import catalog_entry

__all__ = [
    "Point",
    "ProjSpace",
    "MatrixProj",
    "OutsideProvedCases",
    "QuotientReport",
    "Diagram",
    "IrredSummand",
    "ConsistencyError",
    "HilbertGuardError",
    "type_A_constants",
    "quotient_of_minimal",
    "invariant_hilbert_dim",
    "hilbert_series",
    "decompose_Rk",
    "weyl_dim_A",
    "weight_leq_d_omega1",
    "partitions_with_bound",
    "cauchy_summands",
    "cauchy_dimension_check",
    "sum_of_squares_check",
    "cominuscule_cell_checks",
]


class ConsistencyError(RuntimeError):
    """An identity the theory guarantees failed to hold; never expected."""


class HilbertGuardError(RuntimeError):
    """The multichain dynamic program would exceed its resource guard."""


@dataclass(frozen=True)
class Point:
    pass


@dataclass(frozen=True)
class ProjSpace:
    k: int
    a: int


@dataclass(frozen=True)
class MatrixProj:
    rows: int
    cols: int
    a: int


@dataclass(frozen=True)
class OutsideProvedCases:
    pass


QuotientKind = object


@dataclass(frozen=True)
class QuotientReport:
    """The full verdict for one (type, rank, r, s) minuscule case."""

    case: Tuple[str, int, int, int]
    minimal_word: str
    pairing: Fraction
    ss_eq_s: bool
    kind: QuotientKind
    m_used: int
    derivation_notes: Tuple[str, ...] = ()

    @property
    def kind_name(self) -> str:
        return type(self.kind).__name__


def type_A_constants(n: int, r: int, s: int) -> Tuple[int, int, int, int]:
    """(c, m, p, a) for the matrix-space identification in type A_{n-1}:
    c = rs/(rs,n), m = n/(rs,n), p = floor(rs/n), a = c - m*p."""
    g = gcd(r * s, n)
    c = (r * s) // g
    m = n // g
    p = (r * s) // n
    return c, m, p, c - m * p


def quotient_of_minimal(system: RootSystem, r: int, s: int) -> QuotientReport:
    """Classify the quotient of the minimal admitting Schubert variety.

    Zero pairing gives a point.  Type A with n not dividing rs gives the
    projectivized (s-p) x (r-p) matrix space with twist a = c - m*p.  A
    cominuscule alpha_s with stable = semistable gives a projective space
    of dimension l(w)-1 with twist -m*pairing.  Anything else is reported
    with its data but without a proved identification.
    """
    w, pairing, ss_flag = minimal_schubert_minuscule(system, r, s)
    case = (system.type_label, system.rank, r, s)
    # display the cataloged closed-form word; it must be the same element
    entry = catalog_entry(system.type_label, system.rank, r, s)
    if from_word(system, entry.word) != w:
        raise ConsistencyError(f"catalog word {entry.word} is not the searched element")
    word_str = " ".join(map(str, entry.word))
    notes: List[str] = []
    if pairing == 0:
        kind: QuotientKind = Point()
        m_used = system.least_m_root_lattice(r)
        notes.append("pairing is zero: the invariant ring is a polynomial ring in one section")
    elif system.type_label == "A":
        n = system.rank + 1
        c, m, p, a = type_A_constants(n, r, s)
        rows, cols = s - p, r - p
        if rows * cols != w.length:
            raise ConsistencyError(f"matrix cell {rows}x{cols} != l(w) = {w.length}")
        if a < 1:
            raise ConsistencyError(f"matrix-space twist {a} is not positive")
        kind = MatrixProj(rows, cols, a)
        m_used = m
        notes.append(f"c={c}, m={m}, p={p}: twist a = c - m*p = {a}")
    elif system.is_cominuscule(s) and ss_flag:
        m_used = system.least_m_root_lattice(r)
        a = -m_used * pairing
        if a.denominator != 1 or a <= 0:
            raise ConsistencyError(f"projective-space twist {a} is not a positive integer")
        kind = ProjSpace(w.length, int(a))
        notes.append(f"alpha_{s} cominuscule: projective space of dimension l(w)-1 = {w.length - 1}")
    else:
        kind = OutsideProvedCases()
        m_used = system.least_m_root_lattice(r)
        notes.append(
            "no proved identification: alpha_%d is not cominuscule here" % s
        )
    return QuotientReport(case, word_str, pairing, ss_flag, kind, m_used, tuple(notes))


# -- the multichain section-counting oracle ----------------------------


def invariant_hilbert_dim(
    system: RootSystem,
    r: int,
    s: int,
    w: WeylElement,
    m: int,
    d: int,
    state_guard: int = 500_000,
) -> int:
    """Number of invariant standard monomials of degree d on X(w): weakly
    increasing Bruhat multichains tau_1 <= ... <= tau_{d*m} in
    {v in W^{S \\ {alpha_r}} : v <= w} whose pairing values sum to zero.

    This is a direct dynamic program over the interval poset; it never
    consults the closed-form binomial it is used to test.
    """
    if not system.is_minuscule(r):
        raise RootSystemError(f"omega_{r} is not minuscule in {system!r}")
    if d < 0 or m <= 0:
        raise RootSystemError("degree and multiplier must be nonnegative/positive")
    if d == 0:
        return 1
    coset = maximal_coset(system, r)
    coset.require(w)
    interval = coset.lower_interval(w)
    omega = system.fundamental_weight(r).coords
    pairings = [v.apply_root_coords(omega)[s - 1] for v in interval]
    scale = lcm(*(p.denominator for p in pairings))
    weights = [int(p * scale) for p in pairings]
    steps = d * m
    lo, hi = min(weights), max(weights)
    up_sets: List[List[int]] = [
        [j for j, vj in enumerate(interval) if bruhat_leq(vi, vj)]
        for vi in interval
    ]
    # forward DP over (last element, partial sum), pruning sums that can no
    # longer reach zero
    state: Dict[Tuple[int, int], int] = {}
    for i, wt in enumerate(weights):
        remaining = steps - 1
        if wt + remaining * lo <= 0 <= wt + remaining * hi:
            state[(i, wt)] = state.get((i, wt), 0) + 1
    for t in range(1, steps):
        remaining = steps - t - 1
        nxt: Dict[Tuple[int, int], int] = {}
        for (i, sigma), count in state.items():
            for j in up_sets[i]:
                sigma2 = sigma + weights[j]
                if sigma2 + remaining * lo <= 0 <= sigma2 + remaining * hi:
                    key = (j, sigma2)
                    nxt[key] = nxt.get(key, 0) + count
        state = nxt
        if len(state) > state_guard:
            raise HilbertGuardError(f"multichain DP exceeded {state_guard} states")
    return sum(count for (i, sigma), count in state.items() if sigma == 0)


def hilbert_series(system: RootSystem, r: int, s: int, d_max: int) -> List[int]:
    """Hilbert values [dim in degree 0, ..., dim in degree d_max] for the
    minimal admitting case, using the report's m convention.

    For the proved quotient kinds the binomial law is recomputed and any
    disagreement with the multichain count raises, surfacing a failure of
    the standard-monomial presumption.
    """
    report = quotient_of_minimal(system, r, s)
    w, _, _ = minimal_schubert_minuscule(system, r, s)
    values = [invariant_hilbert_dim(system, r, s, w, report.m_used, d) for d in range(d_max + 1)]
    kind = report.kind
    if isinstance(kind, (ProjSpace, MatrixProj)):
        a = kind.a
        k = kind.k if isinstance(kind, ProjSpace) else kind.rows * kind.cols
        expected = [comb(d * a + k - 1, k - 1) for d in range(d_max + 1)]
        if values != expected:
            raise ConsistencyError(
                f"multichain counts {values} disagree with the binomial law {expected}"
            )
    if isinstance(kind, Point) and any(v != 1 for v in values):
        raise ConsistencyError(f"point quotient must have one section per degree, got {values}")
    return values


# -- partitions, dimensions, and the invariant-ring decomposition ------


@dataclass(frozen=True)
class Diagram:
    """A weakly decreasing partition with a cap on its largest part."""

    parts: Tuple[int, ...]
    bound: int

    def __post_init__(self):
        if any(a < b for a, b in zip(self.parts, self.parts[1:])):
            raise ValueError(f"parts {self.parts} are not weakly decreasing")
        if any(p <= 0 for p in self.parts):
            raise ValueError("parts must be positive")
        if self.parts and self.parts[0] > self.bound:
            raise ValueError(f"largest part exceeds bound {self.bound}")

    @property
    def degree(self) -> int:
        return sum(self.parts)

    def multiplicity(self, i: int) -> int:
        return sum(1 for p in self.parts if p == i)

    def conjugate(self) -> Tuple[int, ...]:
        if not self.parts:
            return ()
        return tuple(
            sum(1 for p in self.parts if p > j) for j in range(self.parts[0])
        )


@dataclass(frozen=True)
class IrredSummand:
    """One irreducible summand V(hw_left) (x) V(hw_right) of the invariant
    ring, indexed by its diagram; multiplicities are always one."""

    sigma: Diagram
    hw_left: Tuple[int, ...]
    hw_right: Tuple[int, ...]
    dim_left: int
    dim_right: int


def partitions_with_bound(total: int, bound: int) -> Iterator[Tuple[int, ...]]:
    """Weakly decreasing positive partitions of ``total`` with parts <= bound."""
    if total == 0:
        yield ()
        return
    if bound <= 0:
        return

    def rec(remaining: int, cap: int, prefix: Tuple[int, ...]):
        if remaining == 0:
            yield prefix
            return
        for part in range(min(cap, remaining), 0, -1):
            yield from rec(remaining - part, part, prefix + (part,))

    yield from rec(total, bound, ())


def weyl_dim_A(rank_plus_one: int, hw: Sequence[int]) -> int:
    """Dimension of the irreducible special-linear module with highest
    weight sum(hw[k] * omega_{k+1}), by the product formula."""
    N = rank_plus_one
    if len(hw) != N - 1:
        raise RootSystemError(f"highest weight needs {N - 1} coordinates, got {len(hw)}")
    if any(c < 0 for c in hw):
        raise RootSystemError(f"highest weight {tuple(hw)} is not dominant")
    value = Fraction(1)
    for i in range(1, N + 1):
        for j in range(i + 1, N + 1):
            value *= Fraction(sum(hw[k - 1] + 1 for k in range(i, j)), j - i)
    assert value.denominator == 1
    return int(value)


def _sl_weight(sigma: Diagram, N: int) -> Tuple[int, ...]:
    """Fundamental-weight coordinates of the summand of a diagram on the
    rank N-1 special-linear factor (parts of size N act by determinants)."""
    return tuple(sigma.multiplicity(i) for i in range(1, N))


def decompose_Rk(n: int, r: int, s: int, k_deg: int) -> List[IrredSummand]:
    """Irreducible decomposition of the degree-k piece of the invariant ring
    in the matrix case: one summand per diagram of size k*a with parts
    bounded by min(s-p, r-p)."""
    if not (1 <= r <= n - 1 and 1 <= s <= n - 1):
        raise RootSystemError(f"(r, s) = ({r}, {s}) out of range for A_{n - 1}")
    if (r * s) % n == 0:
        raise RootSystemError(
            f"n = {n} divides rs = {r * s}: the quotient is a point and only the "
            "constants survive"
        )
    if k_deg < 0:
        raise RootSystemError("degree must be nonnegative")
    _, _, p, a = type_A_constants(n, r, s)
    rows, cols = s - p, r - p
    bound = min(rows, cols)
    out = []
    for parts in partitions_with_bound(k_deg * a, bound):
        sigma = Diagram(parts, bound)
        hw_left_raw = _sl_weight(sigma, rows)
        hw_right = _sl_weight(sigma, cols)
        out.append(
            IrredSummand(
                sigma=sigma,
                hw_left=tuple(reversed(hw_left_raw)),
                hw_right=hw_right,
                dim_left=weyl_dim_A(rows, hw_left_raw),
                dim_right=weyl_dim_A(cols, hw_right),
            )
        )
    return out


def weight_leq_d_omega1(mu: WeightVec, d: int) -> Tuple[bool, Optional[int]]:
    """Whether a dominant special-linear weight lies below d*omega_1 in
    dominance order, by the lattice criterion: sum(i * m_i) = d must be
    solvable with a nonnegative multiple of n absorbing the slack."""
    coords = mu.coords if mu.basis == "weight" else None
    if coords is None:
        raise RootSystemError("weight must be given in fundamental-weight coordinates")
    if any(c < 0 or c.denominator != 1 for c in coords):
        raise RootSystemError(f"{mu} is not a dominant integral weight")
    n = len(coords) + 1
    slack = d - sum(i * int(c) for i, c in enumerate(coords, start=1))
    if slack >= 0 and slack % n == 0:
        return True, slack // n
    return False, None


def schur_dim_gl(shape: Sequence[int], N: int) -> int:
    """Dimension of the general-linear Schur module of a partition shape
    (at most N rows) by the hook-content formula."""
    shape = tuple(shape)
    if len(shape) > N:
        return 0
    conj = tuple(sum(1 for p in shape if p > j) for j in range(shape[0])) if shape else ()
    value = Fraction(1)
    for i, row in enumerate(shape):
        for j in range(row):
            hook = (row - j) + (conj[j] - i) - 1
            value *= Fraction(N + j - i, hook)
    assert value.denominator == 1
    return int(value)


def cauchy_summands(rows: int, cols: int, d: int) -> List[Tuple[Tuple[int, ...], int, int]]:
    """Per-diagram dimension pairs of the degree-d symmetric power of the
    rows x cols matrix space (diagrams with parts <= min side; each row of a
    diagram is a minor order, so the Schur shapes are the conjugates)."""
    small, big = min(rows, cols), max(rows, cols)
    out = []
    for parts in partitions_with_bound(d, small):
        sigma = Diagram(parts, small)
        shape = sigma.conjugate()
        out.append((parts, schur_dim_gl(shape, small), schur_dim_gl(shape, big)))
    return out


def cauchy_dimension_check(rows: int, cols: int, d: int) -> bool:
    """sum of dim_left * dim_right over diagrams equals C(rows*cols + d - 1, d)."""
    total = sum(a * b for _, a, b in cauchy_summands(rows, cols, d))
    return total == comb(rows * cols + d - 1, d)


def sum_of_squares_check(n: int, r: int, k_deg: int) -> bool:
    """In the square case s = r the summands pair each module with its dual,
    so every summand contributes a perfect square."""
    if (r * r) % n == 0:
        raise RootSystemError(f"n = {n} divides r^2 = {r * r}")
    summands = decompose_Rk(n, r, r, k_deg)
    if any(t.dim_left != t.dim_right for t in summands):
        return False
    _, _, p, a = type_A_constants(n, r, r)
    k = (r - p) * (r - p)
    total = sum(t.dim_left * t.dim_right for t in summands)
    return total == comb(k_deg * a + k - 1, k - 1)


@dataclass
class CellChecks:
    """Root combinatorics of the open cell of the minimal Schubert variety
    for a cominuscule alpha_s: the inversion roots of w^{-1}, whether all
    pairwise sums are non-roots, whether each inversion root has only the
    trivial nonnegative decomposition, and whether all pair to 1."""

    case: Tuple[str, int, int, int]
    roots: Tuple[Tuple[int, ...], ...]
    pair_sums_ok: bool
    unit_solutions_ok: bool
    pairings_ok: bool
    failures: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.pair_sums_ok and self.unit_solutions_ok and self.pairings_ok


def _nonnegative_solutions(targets: Sequence[Tuple[int, ...]], goal: Tuple[int, ...]) -> int:
    """Count solutions of sum_j i_j * targets[j] = goal with i_j >= 0 integers
    (all vectors have nonnegative entries, so the search is monotone)."""
    count = 0

    def rec(idx: int, remaining: Tuple[int, ...]):
        nonlocal count
        if all(x == 0 for x in remaining):
            count += 1
            return
        if idx == len(targets):
            return
        vec = targets[idx]
        top = min(
            (rem // v for rem, v in zip(remaining, vec) if v > 0),
            default=0,
        )
        for mult in range(top, -1, -1):
            rec(idx + 1, tuple(rem - mult * v for rem, v in zip(remaining, vec)))

    rec(0, goal)
    return count


def cominuscule_cell_checks(system: RootSystem, r: int, s: int) -> CellChecks:
    """Verify the root facts behind the cell coordinates: for beta in the
    inversion set of w_{s,r}^{-1}, sums of two are never roots, the only
    nonnegative integer combination equal to one of them is the unit one,
    and every beta pairs to 1 against lambda_s."""
    if not system.is_cominuscule(s):
        raise RootSystemError(f"alpha_{s} is not cominuscule in {system!r}")
    w, _, _ = minimal_schubert_minuscule(system, r, s)
    inv = w.inverse()
    betas = tuple(
        beta for beta in system.positive_roots
        if sum(inv.apply_root_coords(tuple(map(Fraction, beta)))) < 0
    )
    failures: List[str] = []
    if len(betas) != w.length:
        failures.append(f"|R+(w^-1)| = {len(betas)} != l(w) = {w.length}")
    positive = set(system.positive_roots)
    pair_ok = True
    for i in range(len(betas)):
        for j in range(i + 1, len(betas)):
            total = tuple(a + b for a, b in zip(betas[i], betas[j]))
            if total in positive:
                pair_ok = False
                failures.append(f"{betas[i]} + {betas[j]} is a root")
    unit_ok = True
    for l, beta in enumerate(betas):
        solutions = _nonnegative_solutions(betas, beta)
        if solutions != 1:
            unit_ok = False
            failures.append(f"{beta} has {solutions} nonnegative decompositions")
    pairing_ok = all(beta[s - 1] == 1 for beta in betas)
    if not pairing_ok:
        failures.append("some inversion root does not pair to 1 with lambda_s")
    return CellChecks(
        (system.type_label, system.rank, r, s), betas, pair_ok, unit_ok, pairing_ok, failures
    )
