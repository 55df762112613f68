import random
from fractions import Fraction
from math import gcd

import pytest

from schubert_git.rootsys import (
    RootSystemError,
    WeightVec,
    build_root_system,
    positive_root_count,
)

ALL_SYSTEMS = [
    ("A", 1), ("A", 4), ("A", 7),
    ("B", 2), ("B", 3), ("B", 7),
    ("C", 2), ("C", 3), ("C", 6),
    ("D", 4), ("D", 5), ("D", 7),
    ("E6", 6), ("E7", 7),
]


@pytest.mark.parametrize("type_label,rank", ALL_SYSTEMS)
def test_cartan_invariants(type_label, rank):
    rs = build_root_system(type_label, rank)
    C = rs.cartan
    for i in range(rank):
        assert C[i][i] == 2
        for j in range(rank):
            if i != j:
                assert C[i][j] <= 0
                assert (C[i][j] == 0) == (C[j][i] == 0)
    # exact inverse
    for i in range(rank):
        for j in range(rank):
            entry = sum(rs.inv_cartan[i][k] * C[k][j] for k in range(rank))
            assert entry == (1 if i == j else 0)


@pytest.mark.parametrize("type_label,rank", ALL_SYSTEMS)
def test_positive_root_counts_and_highest_root(type_label, rank):
    rs = build_root_system(type_label, rank)
    assert len(rs.positive_roots) == positive_root_count(type_label, rank)
    for beta in rs.positive_roots:
        diff = [h - b for h, b in zip(rs.highest_root, beta)]
        assert all(d >= 0 for d in diff)


def test_rank_one_and_specific_highest_roots():
    a1 = build_root_system("A", 1)
    assert a1.positive_roots == ((1,),)
    assert a1.highest_root == (1,)
    assert build_root_system("B", 3).highest_root == (1, 2, 2)
    assert build_root_system("C", 3).highest_root == (2, 2, 1)
    assert build_root_system("D", 5).highest_root == (1, 2, 2, 1, 1)
    assert build_root_system("E6", 6).highest_root == (1, 2, 2, 3, 2, 1)
    assert build_root_system("E7", 7).highest_root == (2, 2, 3, 4, 3, 2, 1)
    assert len(build_root_system("E7", 7).positive_roots) == 63


@pytest.mark.parametrize(
    "type_label,rank",
    [("A", 0), ("B", 1), ("C", 1), ("D", 3), ("E6", 5), ("E7", 6), ("F", 4), ("E8", 8)],
)
def test_inadmissible_systems_rejected(type_label, rank):
    with pytest.raises(RootSystemError):
        build_root_system(type_label, rank)


def _expect_weight(rs, r, coords):
    assert rs.fundamental_weight(r).coords == tuple(map(Fraction, coords))


def test_fundamental_weight_expansions_match_tables():
    # the expansions that pin down the numbering convention
    for n in range(2, 8):
        rs = build_root_system("B", n)
        _expect_weight(rs, n, [Fraction(i, 2) for i in range(1, n + 1)])
    for n in range(2, 8):
        rs = build_root_system("C", n)
        _expect_weight(rs, 1, [1] * (n - 1) + [Fraction(1, 2)])
    for n in range(4, 8):
        rs = build_root_system("D", n)
        _expect_weight(rs, 1, [1] * (n - 2) + [Fraction(1, 2), Fraction(1, 2)])
        half = [Fraction(i, 2) for i in range(1, n - 1)]
        _expect_weight(rs, n, half + [Fraction(n - 2, 4), Fraction(n, 4)])
        _expect_weight(rs, n - 1, half + [Fraction(n, 4), Fraction(n - 2, 4)])
    e6 = build_root_system("E6", 6)
    _expect_weight(e6, 1, [Fraction(x, 3) for x in (4, 3, 5, 6, 4, 2)])
    _expect_weight(e6, 6, [Fraction(x, 3) for x in (2, 3, 4, 6, 5, 4)])
    e7 = build_root_system("E7", 7)
    _expect_weight(e7, 7, [Fraction(x, 2) for x in (2, 3, 4, 6, 5, 4, 3)])
    a1 = build_root_system("A", 1)
    _expect_weight(a1, 1, [Fraction(1, 2)])


def test_type_A_fundamental_weight_closed_form():
    for n in range(2, 9):
        rs = build_root_system("A", n - 1)
        for r in range(1, n):
            want = tuple(
                Fraction(i * (n - r), n) if i < r else Fraction(r * (n - i), n)
                for i in range(1, n)
            )
            assert rs.fundamental_weight(r).coords == want


def test_pairing_lambda():
    a4 = build_root_system("A", 4)
    alpha2 = WeightVec((0, 1, 0, 0), "root")
    assert a4.pairing_lambda(alpha2, 2) == 1
    assert a4.pairing_lambda(a4.fundamental_weight(2), 2) == Fraction(6, 5)
    for n in (2, 4, 5):
        bn = build_root_system("B", n)
        assert bn.pairing_lambda(bn.fundamental_weight(n), n) == Fraction(n, 2)


MINUSCULE_TABLE = {
    ("A", 4): {1, 2, 3, 4},
    ("B", 3): {3},
    ("B", 7): {7},
    ("C", 3): {1},
    ("D", 5): {1, 4, 5},
    ("E6", 6): {1, 6},
    ("E7", 7): {7},
}


@pytest.mark.parametrize("key,expected", sorted(MINUSCULE_TABLE.items()))
def test_minuscule_table(key, expected):
    rs = build_root_system(*key)
    assert set(rs.minuscule_indices()) == expected


COMINUSCULE_TABLE = {
    ("A", 4): {1, 2, 3, 4},
    ("B", 3): {1},
    ("C", 3): {3},
    ("D", 5): {1, 4, 5},
    ("E6", 6): {1, 6},
    ("E7", 7): {7},
}


@pytest.mark.parametrize("key,expected", sorted(COMINUSCULE_TABLE.items()))
def test_cominuscule_table(key, expected):
    rs = build_root_system(*key)
    got = {s for s in range(1, rs.rank + 1) if rs.is_cominuscule(s)}
    assert got == expected
    # cominuscule iff the alpha_s coefficient is <= 1 across all positive roots
    for s in range(1, rs.rank + 1):
        assert rs.is_cominuscule(s) == all(beta[s - 1] <= 1 for beta in rs.positive_roots)


def test_pairing_on_positive_roots_is_nonnegative_integer():
    for type_label, rank in ALL_SYSTEMS:
        rs = build_root_system(type_label, rank)
        for beta in rs.positive_roots:
            mu = WeightVec(beta, "root")
            for s in range(1, rank + 1):
                value = rs.pairing_lambda(mu, s)
                assert value >= 0 and value.denominator == 1


def test_least_m_root_lattice():
    # the alpha_1 coordinate of the spin weight is 1/2 for every n
    for n in range(2, 8):
        assert build_root_system("B", n).least_m_root_lattice(n) == 2
    for n in range(4, 8):
        assert build_root_system("D", n).least_m_root_lattice(n) == (2 if n % 2 == 0 else 4)
    assert build_root_system("E6", 6).least_m_root_lattice(6) == 3
    assert build_root_system("E6", 6).least_m_root_lattice(1) == 3
    assert build_root_system("E7", 7).least_m_root_lattice(7) == 2
    for n in range(2, 9):
        rs = build_root_system("A", n - 1)
        for r in range(1, n):
            assert rs.least_m_root_lattice(r) == n // gcd(r, n)


def test_least_m_is_minimal_for_minuscule_cases():
    for type_label, rank in ALL_SYSTEMS:
        rs = build_root_system(type_label, rank)
        for r in rs.minuscule_indices():
            m = rs.least_m_root_lattice(r)
            omega = rs.fundamental_weight(r).coords
            assert all((m * c).denominator == 1 for c in omega)
            if m > 1:
                assert any(((m - 1) * c).denominator != 1 for c in omega)


def test_dominance_examples():
    a3 = build_root_system("A", 3)
    w1, w2 = a3.fundamental_weight(1), a3.fundamental_weight(2)
    two_w1 = WeightVec(tuple(2 * c for c in w1.coords), "root")
    assert a3.dominance_leq(w2, two_w1)
    diff = tuple(a - b for a, b in zip(two_w1.coords, w2.coords))
    assert diff == (1, 0, 0)  # exactly alpha_1
    a2 = build_root_system("A", 2)
    assert not a2.dominance_leq(a2.fundamental_weight(1), a2.fundamental_weight(2))
    assert a2.dominance_leq(a2.fundamental_weight(1), a2.fundamental_weight(1))


def test_dominance_is_a_partial_order_on_random_triples():
    rng = random.Random(20240811)
    rs = build_root_system("D", 5)
    pool = [
        WeightVec(tuple(rng.randint(-3, 3) for _ in range(5)), "root")
        for _ in range(40)
    ]
    for _ in range(300):
        a, b, c = rng.choice(pool), rng.choice(pool), rng.choice(pool)
        assert rs.dominance_leq(a, a)
        if rs.dominance_leq(a, b) and rs.dominance_leq(b, a):
            assert a.coords == b.coords
        if rs.dominance_leq(a, b) and rs.dominance_leq(b, c):
            assert rs.dominance_leq(a, c)


def test_basis_round_trip_is_exact():
    rng = random.Random(7)
    for type_label, rank in ALL_SYSTEMS:
        rs = build_root_system(type_label, rank)
        for _ in range(10):
            coords = tuple(Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(rank))
            mu = WeightVec(coords, "root")
            assert rs.to_root_basis(rs.to_weight_basis(mu)).coords == coords
            nu = WeightVec(coords, "weight")
            assert rs.to_weight_basis(rs.to_root_basis(nu)).coords == coords
