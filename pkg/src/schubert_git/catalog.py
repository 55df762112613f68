"""Closed-form descriptions of the minimal semistable-admitting elements
w_{s,r} for every minuscule case, validated against the exhaustive search.

The search in :mod:`schubert_git.semistable` is authoritative: any
discrepancy between a cataloged word and the searched element is reported
as an erratum rather than trusted.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil
from typing import Dict, List, Optional, Tuple

from .rootsys import RootSystem, RootSystemError, build_root_system
from .weyl import Word, from_word
from .semistable import minimal_schubert_minuscule

__all__ = [
    "CatalogEntry",
    "CaseResult",
    "closed_form_A",
    "closed_form_B",
    "closed_form_C",
    "closed_form_D",
    "catalog_E6",
    "catalog_E7",
    "catalog_entry",
    "minuscule_cases",
    "spin_drop_profile_B",
    "spin_drop_profile_D",
    "expected_weight_drop",
    "verify_catalog",
]


@dataclass(frozen=True)
class CatalogEntry:
    """One minuscule case: the closed-form word, its pairing value, the
    stable-equals-semistable bit, and the auxiliary parameters that the
    closed form used."""

    type_label: str
    n: int
    r: int
    s: int
    word: Word
    pairing: Fraction
    ss_eq_s: bool
    aux: Tuple[Tuple[str, int], ...] = ()

    @property
    def length(self) -> int:
        return len(self.word)


def closed_form_A(n: int, r: int, s: int) -> CatalogEntry:
    """Type A_{n-1}: descending blocks s_{s+t} ... s_{p+1+t}, one block per
    t = 0..r-p-1, with p = floor(rs/n)."""
    if not (1 <= r <= n - 1 and 1 <= s <= n - 1):
        raise RootSystemError(f"(r, s) = ({r}, {s}) out of range for A_{n - 1}")
    p = (r * s) // n
    word = tuple(x for t in range(r - p) for x in range(s + t, p + t, -1))
    pairing = Fraction(-(r * s), n) + p
    return CatalogEntry("A", n - 1, r, s, word, pairing, (r * s) % n != 0, (("p", p),))


def _descending_block(j: int, l: int) -> Word:
    return tuple(range(j + l - 1, j - 1, -1))


def closed_form_B(n: int, s: int) -> CatalogEntry:
    """Type B_n spin case (r = n): the (l_1, ..., l_n) profile is p on a
    middle window and n+1-k on the tail, with p = ceil(s/2)."""
    if not 1 <= s <= n:
        raise RootSystemError(f"s = {s} out of range for B_{n}")
    j = n + 1 - s
    p = ceil(Fraction(s, 2))
    profile = []
    for k in range(1, n + 1):
        if k <= n - j - p + 1:
            profile.append(0)
        elif k <= n - p + 1:
            profile.append(p)
        else:
            profile.append(n + 1 - k)
    word = tuple(x for k, l in enumerate(profile, start=1) for x in _descending_block(k, l))
    pairing = Fraction(s, 2) - p
    return CatalogEntry("B", n, n, s, word, pairing, s % 2 == 1, (("j", j), ("p", p)))


def spin_drop_profile_B(n: int, s: int) -> Tuple[int, ...]:
    """Coefficients a_k of w_{s,n}(omega_n) = omega_n - sum a_k alpha_k."""
    p = ceil(Fraction(s, 2))
    out = []
    for k in range(1, n + 1):
        if k <= s - p:
            out.append(0)
        elif k <= s - 1:
            out.append(k - s + p)
        else:
            out.append(p)
    return tuple(out)


def closed_form_C(n: int, s: int) -> CatalogEntry:
    """Type C_n vector case (r = 1): w_{s,1} = s_s s_{s-1} ... s_1."""
    if not 1 <= s <= n:
        raise RootSystemError(f"s = {s} out of range for C_{n}")
    word = tuple(range(s, 0, -1))
    pairing = Fraction(-1, 2) if s == n else Fraction(0)
    return CatalogEntry("C", n, 1, s, word, pairing, s == n)


def _fork_block(n: int, kind: int, l: int) -> Word:
    if l == n:
        return (kind,)
    return tuple(range(l - 1, n - 1)) + (kind,)


def _fork_word(n: int, end_kind: int, args: List[int]) -> Word:
    other = 2 * n - 1 - end_kind
    count = len(args)
    word: List[int] = []
    for pos, l in enumerate(args):
        kind = end_kind if (count - 1 - pos) % 2 == 0 else other
        word.extend(_fork_block(n, kind, l))
    return tuple(word)


def closed_form_D(n: int, r: int, s: int) -> CatalogEntry:
    """Type D_n minuscule cases r in {1, n-1, n}."""
    if not 1 <= s <= n:
        raise RootSystemError(f"s = {s} out of range for D_{n}")
    if r == 1:
        if s <= n - 2:
            word: Word = tuple(range(s, 0, -1))
            pairing = Fraction(0)
        elif s == n - 1:
            word = tuple(range(n - 1, 0, -1))
            pairing = Fraction(-1, 2)
        else:
            word = (n,) + tuple(range(n - 2, 0, -1))
            pairing = Fraction(-1, 2)
        return CatalogEntry("D", n, 1, s, word, pairing, s >= n - 1)

    if r not in (n - 1, n):
        raise RootSystemError(f"omega_{r} is not minuscule in D_{n}")
    # the r = n-1 catalog is the r = n catalog with the fork letters swapped
    end_kind = n if r == n else n - 1
    swapped_s = s if s <= n - 2 else (2 * n - 1 - s if r == n - 1 else s)
    if swapped_s == n:
        p = ceil(Fraction(n, 4))
        args = list(range(n, n - 2 * p + 1, -1))
        pairing = Fraction(n, 4) - p
        ss = n % 4 != 0
    elif swapped_s == n - 1:
        p = ceil(Fraction(n - 2, 4))
        args = list(range(n, n - 2 * p, -1))
        pairing = Fraction(n - 2, 4) - p
        ss = n % 4 != 2
    else:
        p = ceil(Fraction(s, 2))
        args = list(range(s + 1, s - p + 1, -1))
        pairing = Fraction(s, 2) - p
        ss = s % 2 == 1
    word = _fork_word(n, end_kind, args)
    return CatalogEntry("D", n, r, s, word, pairing, ss, (("p", p),))


def spin_drop_profile_D(n: int, r: int, s: int) -> Tuple[Fraction, ...]:
    """Coefficients of omega_r - w_{s,r}(omega_r) for the fork cases
    r in {n-1, n} of type D_n."""
    if r not in (n - 1, n):
        raise RootSystemError("drop profile only for the fork nodes")
    swapped_s = s if s <= n - 2 else (2 * n - 1 - s if r == n - 1 else s)
    out = [Fraction(0)] * n
    if swapped_s == n:
        p = ceil(Fraction(n, 4))
        for k in range(n - 2 * p + 1, n - 1):
            out[k - 1] = Fraction(k - n + 2 * p)
        out[n - 2] = Fraction(p - 1)
        out[n - 1] = Fraction(p)
    elif swapped_s == n - 1:
        p = ceil(Fraction(n - 2, 4))
        for k in range(n - 2 * p, n - 1):
            out[k - 1] = Fraction(k - n + 2 * p + 1)
        out[n - 2] = Fraction(p)
        out[n - 1] = Fraction(p)
    else:
        i = n - s
        p = ceil(Fraction(s, 2))
        for k in range(n - i - p + 1, n - i + 1):
            out[k - 1] = Fraction(k - n + i + p)
        for k in range(n - i + 1, n - 1):
            out[k - 1] = Fraction(p)
        if p % 2 == 1:
            out[n - 2] = Fraction(p - 1, 2)
            out[n - 1] = Fraction(p + 1, 2)
        else:
            out[n - 2] = Fraction(p, 2)
            out[n - 1] = Fraction(p, 2)
    if r == n - 1:
        out[n - 2], out[n - 1] = out[n - 1], out[n - 2]
    return tuple(out)


_E6_OMEGA = {
    1: tuple(Fraction(x, 3) for x in (4, 3, 5, 6, 4, 2)),
    6: tuple(Fraction(x, 3) for x in (2, 3, 4, 6, 5, 4)),
}
_E7_OMEGA = tuple(Fraction(x, 2) for x in (2, 3, 4, 6, 5, 4, 3))

_E6_WORDS: Dict[Tuple[int, int], Word] = {
    # r = 1
    (1, 1): (1, 3, 4, 5, 2, 4, 3, 1),
    (1, 2): (2, 4, 3, 1),
    (1, 3): (3, 4, 2, 5, 4, 3, 1),
    (1, 4): (4, 5, 2, 4, 3, 1),
    (1, 5): (5, 4, 6, 2, 5, 4, 3, 1),
    (1, 6): (6, 5, 4, 3, 1),
    # r = 6
    (6, 1): (1, 3, 4, 5, 6),
    (6, 2): (2, 4, 5, 6),
    (6, 3): (3, 4, 2, 1, 3, 4, 5, 6),
    (6, 4): (4, 3, 2, 4, 5, 6),
    (6, 5): (5, 4, 2, 3, 4, 5, 6),
    (6, 6): (6, 5, 4, 3, 2, 4, 5, 6),
}

_E7_WORDS: Dict[int, Word] = {
    1: (1, 3, 4, 5, 6, 7),
    2: (2, 4, 5, 3, 4, 1, 2, 3, 4, 5, 6, 7),
    3: (3, 4, 1, 2, 3, 4, 5, 6, 7),
    4: (4, 3, 5, 4, 1, 2, 3, 4, 5, 6, 7),
    5: (5, 6, 4, 3, 5, 4, 2, 1, 3, 4, 5, 6, 7),
    6: (6, 5, 4, 3, 2, 4, 5, 6, 7),
    7: (7, 6, 5, 4, 3, 2, 4, 5, 6, 7),
}

# displayed weight drops in the E-series (coefficients of omega_r - w(omega_r))
_E_DISPLAYED_DROPS: Dict[Tuple[str, int, int], Tuple[int, ...]] = {
    ("E6", 1, 1): (2, 1, 2, 2, 1, 0),
    ("E6", 1, 5): (1, 1, 1, 2, 2, 1),
    ("E6", 6, 3): (1, 1, 2, 2, 1, 1),
    ("E6", 6, 6): (0, 1, 1, 2, 2, 2),
    ("E7", 7, 2): (1, 2, 2, 3, 2, 1, 1),
    ("E7", 7, 5): (1, 1, 2, 3, 3, 2, 1),
    ("E7", 7, 7): (0, 1, 1, 2, 2, 2, 2),
}

_E6_SS_ZERO = {2, 4}
_E7_SS_ZERO = {1, 3, 4, 6}


def catalog_E6(r: int, s: int) -> CatalogEntry:
    if r not in (1, 6) or not 1 <= s <= 6:
        raise RootSystemError(f"(r, s) = ({r}, {s}) is not a minuscule E6 case")
    word = _E6_WORDS[(r, s)]
    pairing = _E6_OMEGA[r][s - 1] - word.count(s)
    entry = CatalogEntry("E6", 6, r, s, word, pairing, s not in _E6_SS_ZERO)
    assert (entry.pairing != 0) == entry.ss_eq_s
    return entry


def catalog_E7(s: int) -> CatalogEntry:
    if not 1 <= s <= 7:
        raise RootSystemError(f"s = {s} is not a minuscule E7 case")
    word = _E7_WORDS[s]
    pairing = _E7_OMEGA[s - 1] - word.count(s)
    entry = CatalogEntry("E7", 7, 7, s, word, pairing, s not in _E7_SS_ZERO)
    assert (entry.pairing != 0) == entry.ss_eq_s
    return entry


def catalog_entry(type_label: str, rank: int, r: int, s: int) -> CatalogEntry:
    """Dispatch to the per-type closed form; rank is the Lie rank (so type A
    with rank n describes A_n inside SL(n+1))."""
    if type_label == "A":
        return closed_form_A(rank + 1, r, s)
    if type_label == "B":
        if r != rank:
            raise RootSystemError(f"omega_{r} is not minuscule in B_{rank}")
        return closed_form_B(rank, s)
    if type_label == "C":
        if r != 1:
            raise RootSystemError(f"omega_{r} is not minuscule in C_{rank}")
        return closed_form_C(rank, s)
    if type_label == "D":
        return closed_form_D(rank, r, s)
    if type_label == "E6":
        return catalog_E6(r, s)
    if type_label == "E7":
        if r != 7:
            raise RootSystemError(f"omega_{r} is not minuscule in E7")
        return catalog_E7(s)
    raise RootSystemError(f"unknown type {type_label!r}")


def minuscule_cases(type_label: str, rank: int) -> List[Tuple[int, int]]:
    """All (r, s) pairs with omega_r minuscule, s over the full rank."""
    system = build_root_system(type_label, rank)
    return [
        (r, s)
        for r in system.minuscule_indices()
        for s in range(1, rank + 1)
    ]


def expected_weight_drop(type_label: str, rank: int, r: int, s: int) -> Optional[Tuple[Fraction, ...]]:
    """The drop vector omega_r - w_{s,r}(omega_r) where a closed form for it
    is part of the catalog (type B spin, type D fork, E-series displayed)."""
    if type_label == "B" and r == rank:
        return tuple(Fraction(a) for a in spin_drop_profile_B(rank, s))
    if type_label == "D" and r in (rank - 1, rank):
        return spin_drop_profile_D(rank, r, s)
    key = (type_label, r, s)
    if key in _E_DISPLAYED_DROPS:
        return tuple(Fraction(a) for a in _E_DISPLAYED_DROPS[key])
    return None


def catalog_dump(type_label: str, rank: int) -> List[dict]:
    """JSON-serializable catalog rows: one dict per minuscule (r, s) case
    with the word as an index string and the pairing as an exact fraction."""
    rows = []
    for r, s in minuscule_cases(type_label, rank):
        entry = catalog_entry(type_label, rank, r, s)
        rows.append(
            {
                "type": entry.type_label,
                "n": entry.n,
                "r": entry.r,
                "s": entry.s,
                "word": " ".join(map(str, entry.word)) or "e",
                "pairing": str(entry.pairing),
                "ss_eq_s": entry.ss_eq_s,
                "length": entry.length,
            }
        )
    return rows


@dataclass
class CaseResult:
    """Outcome of checking one catalog case against the search."""

    case: Tuple[str, int, int, int]
    passed: bool
    issues: List[str] = field(default_factory=list)
    searched_word: str = ""
    erratum: bool = False


def verify_catalog(type_label: str, rank: int) -> List[CaseResult]:
    """Check every minuscule (r, s) case of one type against the search:
    the cataloged word must be reduced and equal the searched element, and
    the pairing, ss=s bit, and any closed-form drop vector must match."""
    system = build_root_system(type_label, rank)
    results = []
    for r, s in minuscule_cases(type_label, rank):
        entry = catalog_entry(type_label, rank, r, s)
        searched, pairing, ss_flag = minimal_schubert_minuscule(system, r, s)
        result = CaseResult((type_label, rank, r, s), True, searched_word=searched.word_str())
        element = from_word(system, entry.word)
        if element.length != len(entry.word):
            result.issues.append(f"cataloged word {entry.word} is not reduced")
            result.erratum = True
        if element != searched:
            result.issues.append(
                f"cataloged word {entry.word} differs from searched element {searched.word_str()}"
            )
            result.erratum = True
        if entry.pairing != pairing:
            result.issues.append(f"pairing {entry.pairing} != computed {pairing}")
        if entry.ss_eq_s != ss_flag:
            result.issues.append(f"ss=s bit {entry.ss_eq_s} != computed {ss_flag}")
        if len(entry.word) != searched.length:
            result.issues.append(
                f"cataloged length {len(entry.word)} != searched length {searched.length}"
            )
        drop = expected_weight_drop(type_label, rank, r, s)
        if drop is not None:
            omega = system.fundamental_weight(r).coords
            actual = tuple(a - b for a, b in zip(omega, searched.apply_root_coords(omega)))
            if actual != drop:
                result.issues.append(f"drop vector {actual} != closed form {drop}")
        result.passed = not result.issues
        results.append(result)
    return results
