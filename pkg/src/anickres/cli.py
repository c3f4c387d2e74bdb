"""Command-line interface.

Subcommands: nf, check, anick, betti, verify, conjectures.  Exit codes:
0 pass, 1 verification failure, 2 usage/parse error.  With --json the
command prints a canonical machine-readable report.
"""

from __future__ import annotations

import argparse
import sys

from . import checks
from .anick import ResolutionPrefix
from .documents import (
    DocumentError,
    LoadedPresentation,
    PresentationDocument,
    Report,
    parse_expression,
)
from .kostant import conjectural_system, frobenius_shift_check
from .resolution import GradedComplex, minimalize
from .rewriting import CompletionCapError


def _add_presentation_args(parser: argparse.ArgumentParser):
    parser.add_argument("--builtin", choices=("small", "big", "conjectural"))
    parser.add_argument("--file", help="presentation document (JSON)")
    parser.add_argument("--l", type=int, default=3, help="small-system index bound")
    parser.add_argument("--n", type=int, default=3)
    parser.add_argument("--p", type=int, default=2)
    parser.add_argument("--expbound", type=int, default=1, help="big-system exponent bound")
    parser.add_argument("--indexbound", type=int, default=1)
    parser.add_argument("--variant", choices=("odd_p_n3", "p2_general_n"))
    parser.add_argument("--json", action="store_true", help="emit a JSON report")


def _load(args) -> LoadedPresentation:
    if args.file:
        with open(args.file, encoding="utf-8") as fh:
            return PresentationDocument.from_json(fh.read()).build()
    builtin = args.builtin or "small"
    if builtin == "small":
        params = {"l": args.l}
    elif builtin == "big":
        params = {"n": args.n, "p": args.p, "exponent_bound": args.expbound}
    else:
        if not args.variant:
            raise DocumentError("--builtin conjectural requires --variant")
        params = {
            "variant": args.variant,
            "n": args.n,
            "p": args.p,
            "index_bound": args.indexbound,
        }
    return LoadedPresentation.from_builtin(builtin, params)


def _emit(report: Report, args, exit_code: int) -> int:
    if args.json:
        print(report.to_json())
    return exit_code


def _str_keys(table: dict) -> dict:
    return {
        str(k): (_str_keys(v) if isinstance(v, dict) else v) for k, v in table.items()
    }


def cmd_nf(args) -> int:
    loaded = _load(args)
    poly = parse_expression(loaded.system, args.expression)
    nf, steps = loaded.system.normal_form_with_steps(poly)
    if not args.json:
        print(f"normal form: {nf}")
        print(f"reduction steps: {steps}")
    report = Report(
        "nf",
        {"expression": args.expression, **loaded.document.params},
        {"normal_form": str(nf), "steps": steps},
    )
    return _emit(report, args, 0)


def cmd_check(args) -> int:
    loaded = _load(args)
    ok, witnesses = loaded.system.is_complete(args.degree_bound)
    if not args.json:
        print(f"rules: {len(loaded.system.rules)}")
        print(f"complete: {ok}")
        for cp, nf in witnesses[:20]:
            print(f"  unresolved tip {cp.tip}: residue {nf}")
    report = Report(
        "check",
        {"degree_bound": args.degree_bound, **loaded.document.params},
        {"complete": ok, "witnesses": [str(cp.tip) for cp, _ in witnesses]},
    )
    return _emit(report, args, 0 if ok else 1)


def cmd_anick(args) -> int:
    loaded = _load(args)
    prefix = ResolutionPrefix(loaded.system)
    ok, problems = prefix.verify_complex()
    if not args.json:
        for level in (-1, 0, 1, 2):
            print(f"T_{level}: {len(prefix.chains[level])} chains")
        for level in (0, 1, 2):
            for t in prefix.chains[level]:
                print(f"d_{level}(.{t}) = {prefix.d_generator(level, t)}")
        print(f"complex identities hold: {ok}")
    report = Report(
        "anick",
        dict(loaded.document.params),
        {
            "complex_ok": ok,
            "problems": problems,
            "chain_counts": {str(lvl): len(prefix.chains[lvl]) for lvl in (-1, 0, 1, 2)},
        },
    )
    return _emit(report, args, 0 if ok else 1)


def cmd_betti(args) -> int:
    loaded = _load(args)
    prefix = ResolutionPrefix(loaded.system)
    gc = GradedComplex.from_prefix(prefix)
    if args.minimal:
        gc = minimalize(gc)
    table = gc.betti_table(args.D)
    defects = gc.verify_exactness([-1, 0, 1], args.D)
    if not args.json:
        print(f"betti table (minimal={args.minimal}, D={args.D}):")
        for level in sorted(table):
            for degree in sorted(table[level]):
                print(f"  level {level}  degree {degree}  count {table[level][degree]}")
        print(f"exactness defects: {len(defects)}")
    report = Report(
        "betti",
        {"D": args.D, "minimal": args.minimal, **loaded.document.params},
        {"exact": not defects},
        tables={"betti": _str_keys(table)},
    )
    return _emit(report, args, 0 if not defects else 1)


def cmd_verify(args) -> int:
    results = checks.run_all()
    ok = all(r.passed for r in results if r.gating)
    if not args.json:
        for r in results:
            print(r.line())
        print("overall:", "PASS" if ok else "FAIL")
    report = Report(
        "verify",
        {},
        {r.name: r.passed for r in results},
        tables={"details": {r.name: _str_keys(r.details) for r in results}},
    )
    return _emit(report, args, 0 if ok else 1)


def cmd_conjectures(args) -> int:
    verdicts = {}
    shift_ok = all(frobenius_shift_check(l, j)[0] for l in range(4) for j in (1, 2))
    verdicts["frobenius shift (l<=3, j<=2)"] = (
        "consistent" if shift_ok else "witness found"
    )
    for name, variant, n, p, index_bound, bound in (
        ("odd_p_n3 (p=3, degree<=9)", "odd_p_n3", 3, 3, 1, 9),
        ("p2_general_n (n=4, degree<=8)", "p2_general_n", 4, 2, 2, 8),
    ):
        pres = conjectural_system(variant, n, p, index_bound)
        try:
            completed = pres.system.complete(bound)
            new = completed.rules[len(pres.system.rules):]
            verdicts[name] = (
                "consistent up to bound"
                if not new
                else f"witness: {len(new)} unresolved consequences below the bound"
            )
        except CompletionCapError:
            verdicts[name] = "inconclusive: completion cap reached"
    if not args.json:
        print("experimental conjecture scans (informational):")
        for k, v in verdicts.items():
            print(f"  {k}: {v}")
    report = Report("conjectures", {}, verdicts)
    _emit(report, args, 0)
    return 0  # informational: always succeeds


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="anickres",
        description=(
            "Noncommutative Groebner bases, divided-power enveloping algebras "
            "and the first steps of their minimal resolutions over prime fields"
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_nf = sub.add_parser("nf", help="normal form of an expression")
    _add_presentation_args(p_nf)
    p_nf.add_argument("expression")
    p_nf.set_defaults(func=cmd_nf)

    p_check = sub.add_parser("check", help="completeness check")
    _add_presentation_args(p_check)
    p_check.add_argument("--degree-bound", type=int, default=None)
    p_check.set_defaults(func=cmd_check)

    p_anick = sub.add_parser("anick", help="chain sets and differentials")
    _add_presentation_args(p_anick)
    p_anick.set_defaults(func=cmd_anick)

    p_betti = sub.add_parser("betti", help="graded Betti table")
    _add_presentation_args(p_betti)
    p_betti.add_argument("--D", type=int, default=16, help="degree bound")
    group = p_betti.add_mutually_exclusive_group()
    group.add_argument("--minimal", dest="minimal", action="store_true", default=True)
    group.add_argument("--no-minimal", dest="minimal", action="store_false")
    p_betti.set_defaults(func=cmd_betti)

    p_verify = sub.add_parser("verify", help="run the full verification suite")
    p_verify.add_argument("--json", action="store_true")
    p_verify.set_defaults(func=cmd_verify)

    p_conj = sub.add_parser("conjectures", help="bounded experimental scans")
    p_conj.add_argument("--json", action="store_true")
    p_conj.set_defaults(func=cmd_conjectures)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DocumentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
