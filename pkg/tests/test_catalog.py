from fractions import Fraction

import pytest

from schubert_git.rootsys import RootSystemError, build_root_system
from schubert_git.weyl import from_word, is_reduced
from schubert_git import catalog as cat
from schubert_git import semistable as ss


def test_closed_form_A_examples():
    entry = cat.closed_form_A(5, 2, 2)
    assert entry.word == (2, 1, 3, 2)
    assert entry.pairing == Fraction(-4, 5) and entry.ss_eq_s
    entry = cat.closed_form_A(4, 2, 2)
    assert entry.word == (2,) and entry.pairing == 0 and not entry.ss_eq_s
    # the last block of the product ends at s_r, so (n, r, s) = (6, 3, 2)
    # gives two singleton blocks; the search below confirms
    entry = cat.closed_form_A(6, 3, 2)
    assert entry.word == (2, 3)
    assert entry.pairing == 0 and not entry.ss_eq_s
    system = build_root_system("A", 5)
    searched, pairing, _ = ss.minimal_schubert_minuscule(system, 3, 2)
    assert from_word(system, entry.word) == searched and pairing == 0
    with pytest.raises(RootSystemError):
        cat.closed_form_A(5, 5, 1)


def test_closed_form_A_length_law():
    for n in range(2, 10):
        for r in range(1, n):
            for s in range(1, n):
                entry = cat.closed_form_A(n, r, s)
                p = (r * s) // n
                assert len(entry.word) == (s - p) * (r - p)


def test_closed_form_B_examples():
    entry = cat.closed_form_B(3, 2)
    assert entry.pairing == 0 and not entry.ss_eq_s
    entry = cat.closed_form_B(3, 3)
    assert entry.word == (3, 2, 3) and entry.pairing == Fraction(-1, 2)
    for n in (2, 4, 6):
        entry = cat.closed_form_B(n, 1)
        system = build_root_system("B", n)
        searched, _, _ = ss.minimal_schubert_minuscule(system, n, 1)
        assert from_word(system, entry.word) == searched
        assert entry.word == tuple(range(1, n + 1))


def test_spin_drop_profile_B():
    assert cat.spin_drop_profile_B(3, 3) == (0, 1, 2)
    assert cat.spin_drop_profile_B(3, 2) == (0, 1, 1)
    assert cat.spin_drop_profile_B(4, 4) == (0, 0, 1, 2)
    # profile reproduces the actual weight drop of the searched element
    for n in range(2, 7):
        system = build_root_system("B", n)
        omega = system.fundamental_weight(n).coords
        for s in range(1, n + 1):
            w, _, _ = ss.minimal_schubert_minuscule(system, n, s)
            drop = tuple(a - b for a, b in zip(omega, w.apply_root_coords(omega)))
            assert drop == tuple(map(Fraction, cat.spin_drop_profile_B(n, s)))


def test_closed_form_C_examples():
    assert cat.closed_form_C(3, 1).word == (1,)
    assert cat.closed_form_C(3, 1).pairing == 0
    entry = cat.closed_form_C(3, 3)
    assert entry.word == (3, 2, 1) and entry.pairing == Fraction(-1, 2) and entry.ss_eq_s
    entry = cat.closed_form_C(2, 2)
    assert entry.word == (2, 1) and entry.pairing == Fraction(-1, 2)


def test_closed_form_D_examples():
    entry = cat.closed_form_D(4, 1, 4)
    assert entry.word == (4, 2, 1)
    assert entry.pairing == Fraction(-1, 2) and entry.ss_eq_s
    entry = cat.closed_form_D(5, 5, 5)
    assert entry.pairing == Fraction(-3, 4) and entry.ss_eq_s
    entry = cat.closed_form_D(6, 6, 6)
    assert entry.pairing == Fraction(-1, 2) and entry.ss_eq_s
    entry = cat.closed_form_D(4, 4, 4)
    assert entry.word == (4,) and entry.pairing == 0 and not entry.ss_eq_s
    with pytest.raises(RootSystemError):
        cat.closed_form_D(5, 2, 1)


def test_catalog_E6_examples():
    entry = cat.catalog_E6(1, 2)
    assert entry.word == (2, 4, 3, 1) and entry.pairing == 0 and not entry.ss_eq_s
    entry = cat.catalog_E6(6, 6)
    assert entry.word == (6, 5, 4, 3, 2, 4, 5, 6)
    assert entry.pairing == Fraction(-2, 3) and entry.ss_eq_s
    with pytest.raises(RootSystemError):
        cat.catalog_E6(2, 1)


def test_catalog_E7_examples():
    entry = cat.catalog_E7(2)
    assert len(entry.word) == 12 and entry.pairing == Fraction(-1, 2)
    entry = cat.catalog_E7(7)
    assert entry.word == (7, 6, 5, 4, 3, 2, 4, 5, 6, 7) and entry.ss_eq_s
    assert not cat.catalog_E7(4).ss_eq_s


def test_catalog_words_are_reduced_with_height_length():
    """Every catalog word is reduced, and its length equals the height of
    the weight drop (the minuscule dimension count)."""
    sweeps = (
        [("A", n) for n in range(1, 8)]
        + [("B", n) for n in range(2, 8)]
        + [("C", n) for n in range(2, 8)]
        + [("D", n) for n in range(4, 8)]
        + [("E6", 6), ("E7", 7)]
    )
    for type_label, rank in sweeps:
        system = build_root_system(type_label, rank)
        for r, s in cat.minuscule_cases(type_label, rank):
            entry = cat.catalog_entry(type_label, rank, r, s)
            assert is_reduced(system, entry.word), (type_label, rank, r, s)
            element = from_word(system, entry.word)
            omega = system.fundamental_weight(r).coords
            drop = sum(omega) - sum(element.apply_root_coords(omega))
            assert drop == element.length, (type_label, rank, r, s)


@pytest.mark.parametrize(
    "type_label,rank,cases",
    [("A", 4, 16), ("E6", 6, 12), ("C", 2, 2), ("B", 4, 4), ("D", 4, 12), ("E7", 7, 7)],
)
def test_verify_catalog_all_pass(type_label, rank, cases):
    results = cat.verify_catalog(type_label, rank)
    assert len(results) == cases
    assert all(r.passed for r in results), [r for r in results if not r.passed]
    assert not any(r.erratum for r in results)


def test_catalog_dump_schema():
    rows = cat.catalog_dump("A", 4)
    assert len(rows) == 16
    first = rows[0]
    assert list(first.keys()) == ["type", "n", "r", "s", "word", "pairing", "ss_eq_s", "length"]
    entry = next(row for row in rows if row["r"] == 2 and row["s"] == 2)
    assert entry["word"] == "2 1 3 2" and entry["pairing"] == "-4/5" and entry["ss_eq_s"]
    import json

    assert json.loads(json.dumps(rows)) == rows
