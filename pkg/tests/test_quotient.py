from fractions import Fraction
from math import comb

import pytest

from schubert_git.rootsys import RootSystemError, WeightVec, build_root_system
from schubert_git import quotient as qt
from schubert_git import semistable as ss


def test_quotient_kinds():
    a4 = build_root_system("A", 4)
    report = qt.quotient_of_minimal(a4, 2, 2)
    assert report.kind == qt.MatrixProj(2, 2, 4)
    assert report.m_used == 5 and report.minimal_word == "2 1 3 2"
    a3 = build_root_system("A", 3)
    assert qt.quotient_of_minimal(a3, 2, 2).kind == qt.Point()
    c3 = build_root_system("C", 3)
    report = qt.quotient_of_minimal(c3, 1, 3)
    assert report.kind == qt.ProjSpace(3, 1) and report.m_used == 2
    b3 = build_root_system("B", 3)
    report = qt.quotient_of_minimal(b3, 3, 3)
    assert report.kind == qt.OutsideProvedCases()
    assert report.pairing == Fraction(-1, 2) and report.ss_eq_s
    d4 = build_root_system("D", 4)
    assert qt.quotient_of_minimal(d4, 1, 4).kind == qt.ProjSpace(3, 1)
    assert qt.quotient_of_minimal(d4, 4, 4).kind == qt.Point()
    e6 = build_root_system("E6", 6)
    assert qt.quotient_of_minimal(e6, 1, 1).kind == qt.ProjSpace(8, 2)


def test_type_A_constants():
    assert qt.type_A_constants(5, 2, 2) == (4, 5, 0, 4)
    assert qt.type_A_constants(5, 2, 3) == (6, 5, 1, 1)
    assert qt.type_A_constants(8, 4, 3) == (3, 2, 1, 1)


def test_invariant_hilbert_dim_examples():
    a4 = build_root_system("A", 4)
    w, _, _ = ss.minimal_schubert_minuscule(a4, 2, 2)
    assert qt.invariant_hilbert_dim(a4, 2, 2, w, 5, 0) == 1
    assert qt.invariant_hilbert_dim(a4, 2, 2, w, 5, 1) == 35
    w12, _, _ = ss.minimal_schubert_minuscule(a4, 2, 1)
    assert w12.length == 2
    assert qt.invariant_hilbert_dim(a4, 2, 1, w12, 5, 1) == 3
    with pytest.raises(RootSystemError):
        b3 = build_root_system("B", 3)
        qt.invariant_hilbert_dim(b3, 1, 1, w, 2, 1)


def test_hilbert_series_matches_binomial_for_proved_kinds():
    a4 = build_root_system("A", 4)
    assert qt.hilbert_series(a4, 2, 2, 3) == [1, 35, 165, 455]
    c3 = build_root_system("C", 3)
    assert qt.hilbert_series(c3, 1, 3, 3) == [comb(d + 2, 2) for d in range(4)]
    a3 = build_root_system("A", 3)
    assert qt.hilbert_series(a3, 2, 2, 3) == [1, 1, 1, 1]


def test_hilbert_series_outside_proved_cases_reports_raw_counts():
    b3 = build_root_system("B", 3)
    assert qt.hilbert_series(b3, 3, 3, 3) == [1, 2, 4, 6]


def test_decompose_Rk():
    summands = qt.decompose_Rk(5, 2, 2, 1)
    assert [(t.sigma.parts, t.dim_left, t.dim_right) for t in summands] == [
        ((2, 2), 1, 1),
        ((2, 1, 1), 3, 3),
        ((1, 1, 1, 1), 5, 5),
    ]
    assert sum(t.dim_left * t.dim_right for t in summands) == 35
    assert [t.sigma.parts for t in qt.decompose_Rk(5, 2, 2, 0)] == [()]
    summands = qt.decompose_Rk(5, 2, 3, 1)
    assert [(t.sigma.parts, t.dim_left, t.dim_right) for t in summands] == [((1,), 2, 1)]
    with pytest.raises(RootSystemError):
        qt.decompose_Rk(4, 2, 2, 1)


def test_decompose_matches_hilbert_oracle():
    for n, r, s in [(5, 2, 2), (5, 2, 3), (7, 2, 2), (7, 3, 2)]:
        system = build_root_system("A", n - 1)
        w, _, _ = ss.minimal_schubert_minuscule(system, r, s)
        _, m, _, _ = qt.type_A_constants(n, r, s)
        for k in range(0, 3):
            total = sum(t.dim_left * t.dim_right for t in qt.decompose_Rk(n, r, s, k))
            assert total == qt.invariant_hilbert_dim(system, r, s, w, m, k)


def test_weyl_dim_A():
    assert qt.weyl_dim_A(1, ()) == 1
    assert qt.weyl_dim_A(2, (0,)) == 1
    assert qt.weyl_dim_A(2, (4,)) == 5
    assert qt.weyl_dim_A(3, (1, 1)) == 8
    assert qt.weyl_dim_A(2, (1,)) == 2
    with pytest.raises(RootSystemError):
        qt.weyl_dim_A(3, (-1, 0))
    with pytest.raises(RootSystemError):
        qt.weyl_dim_A(3, (1,))


def test_weight_leq_d_omega1():
    assert qt.weight_leq_d_omega1(WeightVec((2, 0), "weight"), 2) == (True, 0)
    assert qt.weight_leq_d_omega1(WeightVec((0, 1), "weight"), 2) == (True, 0)
    assert qt.weight_leq_d_omega1(WeightVec((1, 0), "weight"), 2) == (False, None)
    assert qt.weight_leq_d_omega1(WeightVec((0, 0), "weight"), 6) == (True, 2)


def test_cauchy_identities():
    for d in range(0, 7):
        assert qt.cauchy_dimension_check(1, 1, d)
    assert qt.cauchy_dimension_check(2, 2, 4)
    total = sum(a * b for _, a, b in qt.cauchy_summands(2, 2, 4))
    assert total == 35
    summands = qt.cauchy_summands(2, 3, 2)
    assert sorted((a, b) for _, a, b in summands) == [(1, 3), (3, 6)]
    assert sum(a * b for _, a, b in summands) == comb(7, 2) == 21
    # swap handled internally
    assert qt.cauchy_dimension_check(3, 2, 5)


def test_sum_of_squares():
    assert qt.sum_of_squares_check(5, 2, 0)
    assert qt.sum_of_squares_check(5, 2, 1)
    assert qt.sum_of_squares_check(7, 2, 1)
    with pytest.raises(RootSystemError):
        qt.sum_of_squares_check(4, 2, 1)


def test_cominuscule_cell_checks():
    a4 = build_root_system("A", 4)
    checks = qt.cominuscule_cell_checks(a4, 2, 2)
    assert checks.passed and len(checks.roots) == 4
    assert all(beta[1] == 1 for beta in checks.roots)
    a1 = build_root_system("A", 1)
    assert qt.cominuscule_cell_checks(a1, 1, 1).passed
    d5 = build_root_system("D", 5)
    checks = qt.cominuscule_cell_checks(d5, 5, 1)
    assert checks.passed and len(checks.roots) == 4
    with pytest.raises(RootSystemError):
        b3 = build_root_system("B", 3)
        qt.cominuscule_cell_checks(b3, 3, 3)


def test_diagram_validation():
    with pytest.raises(ValueError):
        qt.Diagram((1, 2), 3)
    with pytest.raises(ValueError):
        qt.Diagram((4,), 3)
    d = qt.Diagram((3, 1, 1), 3)
    assert d.degree == 5 and d.conjugate() == (3, 1, 1)
    assert qt.Diagram((2, 2, 1), 2).conjugate() == (3, 2)


def test_exceptional_projective_space_cases():
    """Cominuscule s in the E series: the section counts obey the binomial
    law (hilbert_series raises on any violation); non-cominuscule s with
    stable = semistable stays unidentified."""
    e7 = build_root_system("E7", 7)
    assert qt.quotient_of_minimal(e7, 7, 7).kind == qt.ProjSpace(10, 1)
    assert qt.hilbert_series(e7, 7, 7, 2) == [1, 10, 55]
    assert qt.quotient_of_minimal(e7, 7, 2).kind == qt.OutsideProvedCases()
    e6 = build_root_system("E6", 6)
    assert qt.quotient_of_minimal(e6, 1, 1).kind == qt.ProjSpace(8, 2)
    assert qt.hilbert_series(e6, 1, 1, 1) == [1, 36]
    assert qt.quotient_of_minimal(e6, 6, 1).kind == qt.ProjSpace(5, 1)
    assert qt.quotient_of_minimal(e6, 1, 3).kind == qt.OutsideProvedCases()
