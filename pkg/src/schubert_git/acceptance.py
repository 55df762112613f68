"""The full acceptance sweep: every quantitative guarantee of the engine,
runnable both from the test suite and from the ``verify`` CLI subcommand.

Each criterion returns a result object with the list of failing checks;
all comparisons are exact.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import ceil, comb
from typing import Callable, Iterable, List, Optional, Tuple

from .rootsys import WeightVec, build_root_system
from . import weyl
from . import semistable as ss
from . import catalog as cat
from . import quotient as qt


@dataclass
class CriterionResult:
    number: int
    title: str
    checks: int = 0
    failures: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def expect(self, ok: bool, message: str) -> None:
        self.checks += 1
        if not ok:
            self.failures.append(message)

    def summary_line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        line = f"criterion {self.number:2d}: {status}  {self.title} ({self.checks} checks)"
        if self.failures:
            line += f"; {len(self.failures)} failing, first: {self.failures[0]}"
        return line


def _minuscule_sweep(max_rank: int = 7) -> List[Tuple[str, int, int]]:
    """All (type, rank, r) with omega_r minuscule, rank <= max_rank."""
    cases = []
    for rank in range(1, max_rank + 1):
        cases.extend(("A", rank, r) for r in range(1, rank + 1))
    for rank in range(2, max_rank + 1):
        cases.append(("B", rank, rank))
        cases.append(("C", rank, 1))
    for rank in range(4, max_rank + 1):
        cases.extend(("D", rank, r) for r in (1, rank - 1, rank))
    if max_rank >= 6:
        cases.extend(("E6", 6, r) for r in (1, 6))
    if max_rank >= 7:
        cases.append(("E7", 7, 7))
    return cases


def criterion_1() -> CriterionResult:
    res = CriterionResult(1, "type-A closed form, pairing, and dimension law (n = 2..9)")
    for n in range(2, 10):
        system = build_root_system("A", n - 1)
        for r in range(1, n):
            for s in range(1, n):
                entry = cat.closed_form_A(n, r, s)
                searched, pairing, ss_flag = ss.minimal_schubert_minuscule(system, r, s)
                element = weyl.from_word(system, entry.word)
                p = (r * s) // n
                tag = f"A n={n} r={r} s={s}"
                res.expect(element == searched, f"{tag}: catalog word != searched element")
                res.expect(
                    pairing == Fraction(-(r * s), n) + p, f"{tag}: pairing {pairing} off formula"
                )
                res.expect(ss_flag == ((r * s) % n != 0), f"{tag}: ss=s bit off")
                res.expect(
                    searched.length == (s - p) * (r - p), f"{tag}: length != (s-p)(r-p)"
                )
    return res


def criterion_2() -> CriterionResult:
    res = CriterionResult(2, "non-minuscule fixture: antichain of minimal admitting elements")
    system = build_root_system("A", 4)
    chi = WeightVec((0, 2, 2, 5), "weight")
    res.expect(
        system.root_coords(chi) == tuple(map(Fraction, (3, 6, 7, 6))),
        "chi root coordinates are not (3, 6, 7, 6)",
    )
    ctx = ss.make_context(system, chi, 2)
    w1 = weyl.from_word(system, (2, 1, 3, 2))
    w2 = weyl.from_word(system, (2, 3, 4))
    antichain = ss.minimal_admitting(ctx)
    res.expect(set(antichain) == {w1, w2}, f"antichain is {antichain}")
    res.expect(ss.admits_semistable(w1, ctx)[1] == 0, "pairing of the length-4 element is not 0")
    res.expect(ss.admits_semistable(w2, ctx)[1] == -3, "pairing of the length-3 element is not -3")
    res.expect(ss.stable_equals_semistable(w2, ctx), "stable != semistable on the length-3 element")
    res.expect(not ss.ss_equals_s_whole_space(ctx), "stable = semistable should fail on G/P")
    return res


def criterion_3() -> CriterionResult:
    res = CriterionResult(3, "type-B spin catalog, drop profile, and coset generator (n = 2..7)")
    for n in range(2, 8):
        system = build_root_system("B", n)
        for case in cat.verify_catalog("B", n):
            res.expect(case.passed, f"B n={n} case {case.case}: {case.issues}")
        for s in range(1, n + 1):
            _, pairing, ss_flag = ss.minimal_schubert_minuscule(system, n, s)
            res.expect(
                pairing == Fraction(s, 2) - ceil(Fraction(s, 2)),
                f"B n={n} s={s}: pairing {pairing}",
            )
            res.expect(ss_flag == (s % 2 == 1), f"B n={n} s={s}: ss=s should track parity")
        words = weyl.spin_coset_words_typeB(n)
        coset = weyl.maximal_coset(system, n)
        res.expect(len(words) == 2**n, f"B n={n}: generator yields {len(words)} words")
        res.expect(
            all(weyl.is_reduced(system, word) for word in words),
            f"B n={n}: generator produced a non-reduced word",
        )
        res.expect(
            {weyl.from_word(system, word) for word in words} == set(coset.elements),
            f"B n={n}: generator misses coset elements",
        )
    return res


def criterion_4() -> CriterionResult:
    res = CriterionResult(4, "type-C vector catalog (n = 2..7)")
    for n in range(2, 8):
        system = build_root_system("C", n)
        for s in range(1, n + 1):
            searched, pairing, ss_flag = ss.minimal_schubert_minuscule(system, 1, s)
            expected = weyl.from_word(system, tuple(range(s, 0, -1)))
            res.expect(searched == expected, f"C n={n} s={s}: element is not s_s..s_1")
            want = Fraction(-1, 2) if s == n else Fraction(0)
            res.expect(pairing == want, f"C n={n} s={s}: pairing {pairing} != {want}")
            res.expect(ss_flag == (s == n), f"C n={n} s={s}: ss=s bit off")
    return res


def criterion_5() -> CriterionResult:
    res = CriterionResult(5, "type-D catalog, parity conditions, and coset generator (n = 4..7)")
    for n in range(4, 8):
        system = build_root_system("D", n)
        for case in cat.verify_catalog("D", n):
            res.expect(case.passed, f"D n={n} case {case.case}: {case.issues}")
        for r in (1, n - 1, n):
            for s in range(1, n + 1):
                _, _, ss_flag = ss.minimal_schubert_minuscule(system, r, s)
                if r == 1:
                    want = s >= n - 1
                else:
                    fork, other = (n, n - 1) if r == n else (n - 1, n)
                    if s == fork:
                        want = n % 4 != 0
                    elif s == other:
                        want = n % 4 != 2
                    else:
                        want = s % 2 == 1
                res.expect(ss_flag == want, f"D n={n} r={r} s={s}: ss=s bit off")
        words = weyl.spin_coset_words_typeD(n, n)
        coset = weyl.maximal_coset(system, n)
        res.expect(len(words) == 2 ** (n - 1), f"D n={n}: generator yields {len(words)} words")
        res.expect(
            all(weyl.is_reduced(system, word) for word in words),
            f"D n={n}: generator produced a non-reduced word",
        )
        res.expect(
            {weyl.from_word(system, word) for word in words} == set(coset.elements),
            f"D n={n}: generator misses coset elements",
        )
    return res


def criterion_6() -> CriterionResult:
    res = CriterionResult(6, "exceptional catalogs: words, displayed drops, ss sets")
    for type_label, rank, zero_set in (("E6", 6, {2, 4}), ("E7", 7, {1, 3, 4, 6})):
        system = build_root_system(type_label, rank)
        for case in cat.verify_catalog(type_label, rank):
            res.expect(
                not case.erratum,
                f"{type_label} case {case.case}: printed word differs, searched {case.searched_word}",
            )
            res.expect(case.passed, f"{type_label} case {case.case}: {case.issues}")
        for r in system.minuscule_indices():
            for s in range(1, rank + 1):
                _, _, ss_flag = ss.minimal_schubert_minuscule(system, r, s)
                res.expect(
                    ss_flag == (s not in zero_set),
                    f"{type_label} r={r} s={s}: ss=s set mismatch",
                )
    return res


def criterion_7() -> CriterionResult:
    res = CriterionResult(7, "uniqueness of the minimal element and drop monotonicity")
    for type_label, rank, r in _minuscule_sweep():
        system = build_root_system(type_label, rank)
        coset = weyl.maximal_coset(system, r)
        omega = system.fundamental_weight(r).coords
        top_drop = tuple(
            a - b for a, b in zip(omega, coset.longest.apply_root_coords(omega))
        )
        for s in range(1, rank + 1):
            tag = f"{type_label}{rank} r={r} s={s}"
            try:
                ss.minimal_schubert_minuscule(system, r, s)
                res.expect(True, f"{tag}: unreachable")
            except ss.UniquenessError as exc:
                res.expect(False, f"{tag}: {exc}")
                continue
            a_s = int(top_drop[s - 1])
            taus = []
            for c in range(0, a_s + 1):
                try:
                    taus.append(ss.tau_sc(system, r, s, c))
                except ss.UniquenessError as exc:
                    res.expect(False, f"{tag} c={c}: {exc}")
            for i in range(len(taus)):
                for j in range(i + 1, len(taus)):
                    res.expect(
                        weyl.bruhat_leq(taus[i], taus[j]),
                        f"{tag}: tau at drop {i} not below tau at drop {j}",
                    )
    return res


def criterion_8() -> CriterionResult:
    res = CriterionResult(8, "structural laws of the minimal elements (rank <= 7)")
    for type_label, rank, r in _minuscule_sweep():
        system = build_root_system(type_label, rank)
        coset = weyl.maximal_coset(system, r)
        omega = system.fundamental_weight(r).coords
        for s in range(1, rank + 1):
            w, pairing, _ = ss.minimal_schubert_minuscule(system, r, s)
            tag = f"{type_label}{rank} r={r} s={s}"
            res.expect(w.left_descents() == (s,), f"{tag}: left descent set != {{s}}")
            res.expect(
                w.inverse().in_coset(frozenset(range(1, rank + 1)) - {s}),
                f"{tag}: w^-1 is not a minimal representative at alpha_s",
            )
            res.expect(Fraction(-1) < pairing <= 0, f"{tag}: pairing {pairing} out of (-1, 0]")
            for v in coset.lower_interval(w):
                if v != w:
                    res.expect(
                        v.apply_root_coords(omega)[s - 1] > 0,
                        f"{tag}: proper smaller element {v.word_str()} pairs <= 0",
                    )
    return res


def criterion_9() -> CriterionResult:
    res = CriterionResult(9, "quotient Hilbert law against the multichain oracle")
    for n in range(2, 9):
        system = build_root_system("A", n - 1)
        for r in range(1, n):
            for s in range(1, n):
                if (r * s) % n == 0:
                    continue
                c, m, p, a = qt.type_A_constants(n, r, s)
                w, _, _ = ss.minimal_schubert_minuscule(system, r, s)
                k = (s - p) * (r - p)
                for d in range(0, 4):
                    got = qt.invariant_hilbert_dim(system, r, s, w, m, d)
                    want = comb(d * a + k - 1, k - 1)
                    res.expect(
                        got == want,
                        f"A n={n} r={r} s={s} d={d}: oracle {got} != C({d * a + k - 1},{k - 1}) = {want}",
                    )
    proj_cases = [("B", 3, 3, 3), ("C", 3, 1, 3)]
    for rank in (4, 5):
        system = build_root_system("D", rank)
        for r in (1, rank - 1, rank):
            for s in range(1, rank + 1):
                if not system.is_cominuscule(s):
                    continue
                _, _, flag = ss.minimal_schubert_minuscule(system, r, s)
                if flag:
                    proj_cases.append(("D", rank, r, s))
    for type_label, rank, r, s in proj_cases:
        system = build_root_system(type_label, rank)
        w, pairing, _ = ss.minimal_schubert_minuscule(system, r, s)
        m = system.least_m_root_lattice(r)
        a = -m * pairing
        k = w.length
        assert a.denominator == 1 and a > 0
        for d in range(0, 4):
            got = qt.invariant_hilbert_dim(system, r, s, w, m, d)
            want = comb(int(d * a) + k - 1, k - 1)
            res.expect(
                got == want,
                f"{type_label}{rank} r={r} s={s} d={d}: oracle {got} != "
                f"C({int(d * a) + k - 1},{k - 1}) = {want}",
            )
    return res


def _dominant_weights_leq(small: int, bound: int) -> List[Tuple[int, ...]]:
    """Dominant integral weights of the rank small-1 special-linear group
    lying below bound*omega_1, by brute-force dominance."""
    if small == 1:
        return [()]
    system = build_root_system("A", small - 1)
    omega1_scaled = tuple(bound * c for c in system.fundamental_weight(1).coords)
    out = []

    def rec(idx: int, prefix: Tuple[int, ...], budget: int):
        if idx == small - 1:
            mu = WeightVec(prefix, "weight")
            diff = tuple(
                a - b for a, b in zip(omega1_scaled, system.root_coords(mu))
            )
            if all(x >= 0 and x.denominator == 1 for x in diff):
                out.append(prefix)
            return
        for v in range(0, budget // (idx + 1) + 1):
            rec(idx + 1, prefix + (v,), budget - v * (idx + 1))

    rec(0, (), bound)
    return out


def criterion_10() -> CriterionResult:
    res = CriterionResult(10, "decomposition identities: Cauchy, bijection, squares, transpose")
    for rows in (1, 2, 3):
        for cols in (1, 2, 3):
            for d in range(0, 7):
                res.expect(
                    qt.cauchy_dimension_check(rows, cols, d),
                    f"Cauchy identity fails at ({rows}, {cols}, d={d})",
                )
    bijection_cases = [(5, 2, 2, 1), (5, 2, 2, 2), (5, 2, 2, 3), (5, 2, 3, 1),
                       (7, 2, 2, 1), (7, 3, 2, 2), (8, 3, 5, 1), (8, 5, 3, 1)]
    for n, r, s, k in bijection_cases:
        _, _, p, a = qt.type_A_constants(n, r, s)
        small = min(s - p, r - p)
        summands = qt.decompose_Rk(n, r, s, k)
        weights = [qt._sl_weight(t.sigma, small) for t in summands]
        res.expect(
            len(set(weights)) == len(weights),
            f"(n={n}, r={r}, s={s}, k={k}): diagram-to-weight map not injective",
        )
        res.expect(
            set(weights) == set(_dominant_weights_leq(small, k * a)),
            f"(n={n}, r={r}, s={s}, k={k}): diagram weights miss the dominance interval",
        )
    res.expect(qt.sum_of_squares_check(5, 2, 1), "square case (n=5, r=s=2, k=1) fails")
    total = sum(t.dim_left * t.dim_right for t in qt.decompose_Rk(5, 2, 2, 1))
    res.expect(total == 35, f"square case total {total} != 35 = 1 + 9 + 25")
    res.expect(qt.sum_of_squares_check(7, 2, 1), "square case (n=7, r=s=2, k=1) fails")
    for n, r, s, k in [(5, 2, 3, 1), (5, 2, 3, 2), (8, 3, 5, 1), (7, 2, 3, 2)]:
        direct = sorted((t.dim_left, t.dim_right) for t in qt.decompose_Rk(n, r, s, k))
        swapped = sorted((t.dim_right, t.dim_left) for t in qt.decompose_Rk(n, s, r, k))
        res.expect(
            direct == swapped,
            f"(n={n}, r={r}, s={s}, k={k}): transposed decomposition differs",
        )
    return res


def criterion_11() -> CriterionResult:
    res = CriterionResult(11, "first-fundamental-weight dominance criterion vs brute force")
    for n in range(2, 7):
        system = build_root_system("A", n - 1)
        omega1 = system.fundamental_weight(1).coords
        for coords in product(range(5), repeat=n - 1):
            mu = WeightVec(coords, "weight")
            mu_root = system.root_coords(mu)
            for d in range(0, 13):
                verdict, witness = qt.weight_leq_d_omega1(mu, d)
                diff = tuple(d * a - b for a, b in zip(omega1, mu_root))
                brute = all(x >= 0 and x.denominator == 1 for x in diff)
                res.expect(
                    verdict == brute,
                    f"n={n} mu={coords} d={d}: criterion {verdict} != brute {brute}",
                )
                if verdict:
                    res.expect(
                        witness is not None and witness >= 0,
                        f"n={n} mu={coords} d={d}: missing witness",
                    )
    return res


def criterion_12() -> CriterionResult:
    res = CriterionResult(12, "open-cell root facts for cominuscule linearizations (A-D)")
    sweeps: List[Tuple[str, int]] = []
    sweeps.extend(("A", rank) for rank in range(1, 8))
    sweeps.extend(("B", rank) for rank in range(2, 8))
    sweeps.extend(("C", rank) for rank in range(2, 8))
    sweeps.extend(("D", rank) for rank in range(4, 8))
    for type_label, rank in sweeps:
        system = build_root_system(type_label, rank)
        for r in system.minuscule_indices():
            for s in range(1, rank + 1):
                if not system.is_cominuscule(s):
                    continue
                checks = qt.cominuscule_cell_checks(system, r, s)
                res.expect(
                    checks.passed,
                    f"{type_label}{rank} r={r} s={s}: {checks.failures}",
                )
    return res


def criterion_13() -> CriterionResult:
    res = CriterionResult(13, "torus semistability equals the conjunction over all lambda_s")

    def check(ctx_by_s, coset, tag):
        for w in coset.elements:
            torus = ss.admits_semistable_T(w, ctx_by_s[1])
            each = all(ss.admits_semistable(w, ctx_by_s[s])[0] for s in ctx_by_s)
            res.expect(
                torus == each,
                f"{tag} w={w.word_str()}: torus verdict {torus} != conjunction {each}",
            )

    for rank in range(1, 6):
        system = build_root_system("A", rank)
        chi = WeightVec((1,) * rank, "weight")
        ctxs = {s: ss.make_context(system, chi, s) for s in range(1, rank + 1)}
        check(ctxs, ctxs[1].coset, f"A{rank} regular")
    system = build_root_system("A", 4)
    chi = WeightVec((0, 2, 2, 5), "weight")
    ctxs = {s: ss.make_context(system, chi, s) for s in range(1, 5)}
    check(ctxs, ctxs[1].coset, "A4 singular")
    for type_label, rank, r in _minuscule_sweep():
        system = build_root_system(type_label, rank)
        ctxs = {s: ss.minuscule_context(system, r, s) for s in range(1, rank + 1)}
        check(ctxs, ctxs[1].coset, f"{type_label}{rank} minuscule r={r}")
    return res


CRITERIA: Tuple[Tuple[int, Callable[[], CriterionResult]], ...] = tuple(
    (k, fn)
    for k, fn in enumerate(
        (
            criterion_1,
            criterion_2,
            criterion_3,
            criterion_4,
            criterion_5,
            criterion_6,
            criterion_7,
            criterion_8,
            criterion_9,
            criterion_10,
            criterion_11,
            criterion_12,
            criterion_13,
        ),
        start=1,
    )
)


def run_all(numbers: Optional[Iterable[int]] = None) -> List[CriterionResult]:
    wanted = set(numbers) if numbers is not None else None
    results = []
    for number, fn in CRITERIA:
        if wanted is None or number in wanted:
            results.append(fn())
    return results
