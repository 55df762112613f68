"""Command-line front-end: human-readable tables and machine-readable JSON
for the semistability engine.

Exit codes: 0 on success, 1 when ``verify`` finds a failing criterion,
2 on flag errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from typing import Dict, List, Optional, Sequence

from .rootsys import RootSystemError, WeightVec, build_root_system
from . import weyl
from . import semistable as ss
from . import catalog as cat
from . import quotient as qt
from . import acceptance

FORMATS = ("text", "json", "csv")


def _frac(x: Fraction) -> str:
    return str(Fraction(x))


def _dump_json(payload) -> str:
    return json.dumps(payload, indent=2) + "\n"


def _dump_csv(rows: List[Dict[str, object]]) -> str:
    if not rows:
        return ""
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=list(rows[0].keys()), lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buf.getvalue()


def _system(args):
    return build_root_system(args.type, args.rank)


def _case_dict(args, **extra) -> Dict[str, object]:
    case: Dict[str, object] = {"type": args.type, "rank": args.rank}
    case.update(extra)
    return case


def _cmd_minimal(args) -> int:
    system = _system(args)
    w, pairing, flag = ss.minimal_schubert_minuscule(system, args.r, args.s)
    entry = cat.catalog_entry(args.type, args.rank, args.r, args.s)
    word = entry.word if weyl.from_word(system, entry.word) == w else w.word
    payload = {
        "case": _case_dict(args, r=args.r, s=args.s),
        "word": " ".join(map(str, word)),
        "length": w.length,
        "pairing": _frac(pairing),
        "ss_eq_s": flag,
    }
    if args.format == "json":
        sys.stdout.write(_dump_json(payload))
    elif args.format == "csv":
        row = dict(payload["case"])
        row.update({k: payload[k] for k in ("word", "length", "pairing", "ss_eq_s")})
        sys.stdout.write(_dump_csv([row]))
    else:
        print(f"minimal element for ({args.type}{args.rank}, r={args.r}, s={args.s})")
        print(f"  word     : {payload['word']}")
        print(f"  length   : {payload['length']}")
        print(f"  pairing  : {payload['pairing']}")
        print(f"  ss = s   : {payload['ss_eq_s']}")
    return 0


def _cmd_analyze(args) -> int:
    system = _system(args)
    coeffs = [Fraction(part) for part in args.chi.split(",")]
    if len(coeffs) != system.rank:
        raise RootSystemError(f"chi needs {system.rank} coefficients, got {len(coeffs)}")
    chi = WeightVec(tuple(coeffs), "weight")
    ctx = ss.make_context(system, chi, args.s)
    antichain = ss.minimal_admitting(ctx)
    rows = []
    for w in antichain:
        _, value = ss.admits_semistable(w, ctx)
        rows.append(
            {
                "word": w.word_str(),
                "length": w.length,
                "pairing": _frac(value),
                "ss_eq_s_on_X": ss.stable_equals_semistable(w, ctx),
            }
        )
    payload = {
        "case": _case_dict(args, chi=args.chi, s=args.s),
        "chi_root_coords": [_frac(c) for c in ctx.chi_root_coords],
        "J": sorted(ctx.J),
        "coset_size": len(ctx.coset),
        "minimal_admitting": rows,
        "ss_eq_s_whole_space": ss.ss_equals_s_whole_space(ctx),
    }
    if args.format == "json":
        sys.stdout.write(_dump_json(payload))
    elif args.format == "csv":
        sys.stdout.write(_dump_csv(rows))
    else:
        print(f"analysis for chi = [{args.chi}] on {args.type}{args.rank}, s = {args.s}")
        print(f"  chi in simple roots : {' '.join(payload['chi_root_coords'])}")
        print(f"  parabolic J         : {payload['J']}")
        print(f"  |W^J|               : {payload['coset_size']}")
        print("  minimal admitting elements:")
        for row in rows:
            print(
                f"    {row['word']:<20} length {row['length']:<3} pairing {row['pairing']:<6} "
                f"ss=s on X(w): {row['ss_eq_s_on_X']}"
            )
        print(f"  ss = s on the whole space: {payload['ss_eq_s_whole_space']}")
    return 0


def _kind_fields(kind) -> Dict[str, object]:
    out: Dict[str, object] = {
        "kind": type(kind).__name__,
        "k": None,
        "rows": None,
        "cols": None,
        "a": None,
    }
    if isinstance(kind, qt.ProjSpace):
        out["k"] = kind.k
        out["a"] = kind.a
    elif isinstance(kind, qt.MatrixProj):
        out["rows"] = kind.rows
        out["cols"] = kind.cols
        out["k"] = kind.rows * kind.cols
        out["a"] = kind.a
    return out


def _summand_dict(t: qt.IrredSummand) -> Dict[str, object]:
    return {
        "sigma": list(t.sigma.parts),
        "hw_left": list(t.hw_left),
        "hw_right": list(t.hw_right),
        "dim_left": t.dim_left,
        "dim_right": t.dim_right,
    }


def _cmd_quotient(args) -> int:
    system = _system(args)
    report = qt.quotient_of_minimal(system, args.r, args.s)
    payload: Dict[str, object] = {
        "case": _case_dict(args, r=args.r, s=args.s),
        "word": report.minimal_word,
        "pairing": _frac(report.pairing),
        "ss_eq_s": report.ss_eq_s,
    }
    payload.update(_kind_fields(report.kind))
    payload["m_used"] = report.m_used
    payload["notes"] = list(report.derivation_notes)
    if args.d_max is not None:
        payload["hilbert"] = qt.hilbert_series(system, args.r, args.s, args.d_max)
    if args.k_deg is not None:
        if not isinstance(report.kind, qt.MatrixProj):
            raise RootSystemError("decomposition is only defined in the matrix case")
        summands = qt.decompose_Rk(system.rank + 1, args.r, args.s, args.k_deg)
        payload["decomposition"] = [_summand_dict(t) for t in summands]
    if args.format == "json":
        sys.stdout.write(_dump_json(payload))
    elif args.format == "csv":
        row = dict(payload["case"])
        for key in ("word", "pairing", "ss_eq_s", "kind", "k", "rows", "cols", "a", "m_used"):
            row[key] = payload[key]
        if "hilbert" in payload:
            row["hilbert"] = " ".join(map(str, payload["hilbert"]))
        sys.stdout.write(_dump_csv([row]))
    else:
        print(f"quotient report for ({args.type}{args.rank}, r={args.r}, s={args.s})")
        print(f"  minimal word : {payload['word']}")
        print(f"  pairing      : {payload['pairing']}   ss = s: {payload['ss_eq_s']}")
        kind = report.kind
        if isinstance(kind, qt.Point):
            print("  quotient     : a single point")
        elif isinstance(kind, qt.ProjSpace):
            print(f"  quotient     : projective space P^{kind.k - 1} with twist {kind.a}")
        elif isinstance(kind, qt.MatrixProj):
            print(
                f"  quotient     : projectivized {kind.rows} x {kind.cols} matrix space "
                f"with twist {kind.a}"
            )
        else:
            print("  quotient     : outside the proved cases (data only)")
        print(f"  m used       : {payload['m_used']}")
        if "hilbert" in payload:
            print(f"  hilbert      : {payload['hilbert']}")
        if "decomposition" in payload:
            print("  decomposition:")
            for t in payload["decomposition"]:
                print(
                    f"    sigma={tuple(t['sigma'])!s:<14} dims {t['dim_left']} x {t['dim_right']}"
                )
        for note in payload["notes"]:
            print(f"  note: {note}")
    return 0


def _cmd_decompose(args) -> int:
    if args.type != "A":
        raise RootSystemError("the decomposition is a type-A feature")
    n = args.rank + 1
    summands = qt.decompose_Rk(n, args.r, args.s, args.k_deg)
    total = sum(t.dim_left * t.dim_right for t in summands)
    rows = [_summand_dict(t) for t in summands]
    payload = {
        "case": _case_dict(args, r=args.r, s=args.s, k_deg=args.k_deg),
        "summands": rows,
        "total_dimension": total,
    }
    if args.format == "json":
        sys.stdout.write(_dump_json(payload))
    elif args.format == "csv":
        flat = [
            {
                "sigma": " ".join(map(str, t["sigma"])),
                "hw_left": " ".join(map(str, t["hw_left"])),
                "hw_right": " ".join(map(str, t["hw_right"])),
                "dim_left": t["dim_left"],
                "dim_right": t["dim_right"],
            }
            for t in rows
        ]
        sys.stdout.write(_dump_csv(flat))
    else:
        print(
            f"invariant-ring decomposition for (A{args.rank}, r={args.r}, s={args.s}), "
            f"degree {args.k_deg}"
        )
        for t in rows:
            print(
                f"  sigma={tuple(t['sigma'])!s:<14} hw_left={tuple(t['hw_left'])} "
                f"hw_right={tuple(t['hw_right'])} dims {t['dim_left']} x {t['dim_right']}"
            )
        print(f"  total dimension: {total}")
    return 0


def _cmd_enumerate(args) -> int:
    system = _system(args)
    if args.j is not None:
        J = frozenset(int(x) for x in args.j.split(",") if x)
    elif args.r is not None:
        J = frozenset(range(1, system.rank + 1)) - {args.r}
    else:
        raise RootSystemError("enumerate needs either --r or --j")
    coset = weyl.enumerate_WJ(system, J, guard=args.guard)
    rows = [{"word": w.word_str(), "length": w.length} for w in coset.elements]
    payload = {
        "case": _case_dict(args, J=sorted(J)),
        "size": len(coset),
        "elements": rows,
    }
    if args.format == "json":
        sys.stdout.write(_dump_json(payload))
    elif args.format == "csv":
        sys.stdout.write(_dump_csv(rows))
    else:
        print(f"W^J for {args.type}{args.rank}, J = {sorted(J)}: {len(coset)} elements")
        for row in rows:
            print(f"  length {row['length']:<3} {row['word']}")
    return 0


def _cmd_verify(args) -> int:
    numbers = None
    if args.criteria:
        numbers = [int(x) for x in args.criteria.split(",") if x]
    results = acceptance.run_all(numbers)
    if args.format == "json":
        payload = [
            {
                "criterion": r.number,
                "title": r.title,
                "checks": r.checks,
                "passed": r.passed,
                "failures": r.failures,
            }
            for r in results
        ]
        sys.stdout.write(_dump_json(payload))
    else:
        for r in results:
            print(r.summary_line())
            if args.verbose:
                for f in r.failures:
                    print(f"    {f}")
    return 0 if all(r.passed for r in results) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="schubert-git",
        description="Semistability of Schubert varieties under one-parameter subgroups "
        "and the resulting GIT quotients (exact arithmetic).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, need_rs=True):
        p.add_argument("--type", required=True, choices=["A", "B", "C", "D", "E6", "E7"])
        p.add_argument("--rank", required=True, type=int)
        if need_rs:
            p.add_argument("--r", required=True, type=int, help="minuscule node index")
            p.add_argument("--s", required=True, type=int, help="one-parameter subgroup index")
        p.add_argument("--format", default="text", choices=FORMATS)

    p = sub.add_parser("minimal", help="minimal Schubert variety admitting semistable points")
    add_common(p)
    p.set_defaults(func=_cmd_minimal)

    p = sub.add_parser("analyze", help="antichain of minimal admitting elements for any dominant chi")
    p.add_argument("--type", required=True, choices=["A", "B", "C", "D", "E6", "E7"])
    p.add_argument("--rank", required=True, type=int)
    p.add_argument("--chi", required=True, help="comma-separated fundamental-weight coefficients")
    p.add_argument("--s", required=True, type=int)
    p.add_argument("--format", default="text", choices=FORMATS)
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("quotient", help="classify the GIT quotient of the minimal case")
    add_common(p)
    p.add_argument("--d-max", type=int, default=None, help="also report Hilbert values up to this degree")
    p.add_argument("--k-deg", type=int, default=None, help="also decompose the invariant ring in this degree")
    p.set_defaults(func=_cmd_quotient)

    p = sub.add_parser("decompose", help="irreducible decomposition of the invariant ring (type A)")
    add_common(p)
    p.add_argument("--k-deg", required=True, type=int)
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("enumerate", help="dump a coset system W^J")
    p.add_argument("--type", required=True, choices=["A", "B", "C", "D", "E6", "E7"])
    p.add_argument("--rank", required=True, type=int)
    p.add_argument("--r", type=int, default=None, help="use J = S minus {alpha_r}")
    p.add_argument("--j", default=None, help="comma-separated indices of J")
    p.add_argument("--guard", type=int, default=None, help="override the enumeration guard")
    p.add_argument("--format", default="text", choices=FORMATS)
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("verify", help="run the full acceptance sweep")
    p.add_argument("--criteria", default=None, help="comma-separated criterion numbers")
    p.add_argument("--verbose", action="store_true")
    p.add_argument("--format", default="text", choices=["text", "json"])
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (RootSystemError, weyl.CosetGuardError, weyl.NotInCosetError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
