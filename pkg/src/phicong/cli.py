"""Command-line front end.

Subcommands:

* ``expand``     emit a power of the Hauptmodul as JSON
* ``up``         emit U_p^alpha of a power of the Hauptmodul as JSON
* ``decompose``  emit the phi-polynomial of U_p^alpha phi^m plus valuations
* ``gamma``      emit the congruence exponent table as CSV
* ``verify``     run one verification driver; exit 1 on any hard failure
* ``explore``    run the level-13 explorations

Exit codes: 0 success, 1 failed verification assertions, 2 usage errors.
All big integers are printed as decimal strings; JSON output is sorted so
repeated runs are diffable.  Setting ``PHICONG_CACHE_DIR`` persists the
Hauptmodul power cache between runs as JSON files keyed by (p, precision).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .digits import GAMMA_PRIMES, f_iter, gamma
from .eta import SUPPORTED_PRIMES, phi_series
from .hecke import u_p_iter
from .phipoly import DEFAULT_CACHE, decompose, phi_precision_budget, val_profile
from .verify import (
    VerificationReport,
    compare_lehner,
    explore_p13,
    verify_alpha1,
    verify_binarygamma,
    verify_lemma_poly,
    verify_newton,
    verify_theorem1,
    verify_theorem2,
)


def _dump_json(payload: dict) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def _emit(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _usage_error(parser: argparse.ArgumentParser, message: str) -> int:
    parser.exit(2, f"{parser.prog}: error: {message}\n")
    return 2  # unreachable; parser.exit raises SystemExit


def _check_prec(parser: argparse.ArgumentParser, override: int | None, budget: int) -> int:
    if override is None:
        return budget
    if override < budget:
        _usage_error(
            parser,
            f"--prec {override} is below the computed budget {budget}; "
            "raise it or drop the flag",
        )
    return override


def _add_output_flags(sp: argparse.ArgumentParser, formats: tuple[str, ...]) -> None:
    if len(formats) > 1:
        sp.add_argument("--format", choices=formats, default=formats[0])
    sp.add_argument("--output", metavar="PATH", help="write output to a file")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="phicong",
        description="Exact q-series computations and congruence verification "
        "for level-p Hauptmoduln",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("expand", help="q-expansion of phi^m")
    sp.add_argument("--p", type=int, required=True, choices=SUPPORTED_PRIMES)
    sp.add_argument("--m", type=int, default=1)
    sp.add_argument("--terms", type=int, required=True)
    sp.add_argument("--prec", type=int, help="working precision override")
    _add_output_flags(sp, ("json",))

    sp = sub.add_parser("up", help="U_p^alpha of phi^m")
    sp.add_argument("--p", type=int, required=True, choices=SUPPORTED_PRIMES)
    sp.add_argument("--m", type=int, default=1)
    sp.add_argument("--alpha", type=int, default=1)
    sp.add_argument("--terms", type=int, required=True)
    sp.add_argument("--prec", type=int, help="working precision override")
    _add_output_flags(sp, ("json",))

    sp = sub.add_parser("decompose", help="phi-polynomial of U_p^alpha phi^m")
    sp.add_argument("--p", type=int, required=True, choices=SUPPORTED_PRIMES)
    sp.add_argument("--m", type=int, default=1)
    sp.add_argument("--alpha", type=int, default=1)
    sp.add_argument("--guard", type=int, default=8)
    sp.add_argument("--prec", type=int, help="working precision override")
    _add_output_flags(sp, ("json",))

    sp = sub.add_parser("gamma", help="congruence exponent table (CSV)")
    sp.add_argument("--p", type=int, required=True, choices=GAMMA_PRIMES)
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--alpha-max", type=int, required=True)
    _add_output_flags(sp, ("csv",))

    sp = sub.add_parser("verify", help="run a verification driver")
    vsub = sp.add_subparsers(dest="driver", required=True)

    def verify_parser(name: str, **kwargs: int) -> argparse.ArgumentParser:
        vp = vsub.add_parser(name)
        for flag, default in kwargs.items():
            vp.add_argument(f"--{flag.replace('_', '-')}", type=int, default=default)
        _add_output_flags(vp, ("text", "json"))
        return vp

    vp = verify_parser("theorem1", m_max=50, alpha_max=7, n_max=3000, jobs=1)
    vp.add_argument("--p", type=int, required=True, choices=GAMMA_PRIMES)
    vp = verify_parser("theorem2", m_max=20, alpha_max=2, guard=8, jobs=1)
    vp.add_argument("--p", type=int, required=True, choices=GAMMA_PRIMES)
    vp = verify_parser("alpha1", m_max=40, guard=8)
    vp.add_argument("--p", type=int, required=True, choices=GAMMA_PRIMES)
    vp = verify_parser("newton", m_max=15, guard=8)
    vp.add_argument("--p", type=int, required=True, choices=GAMMA_PRIMES)
    vp = verify_parser("lemma-poly", m_max=30, guard=8)
    vp.add_argument("--p", type=int, required=True, choices=SUPPORTED_PRIMES)
    vp = verify_parser("binarygamma", m_max=2000, alpha_max=8)
    vp.add_argument("--p", type=int, required=True, choices=GAMMA_PRIMES)
    verify_parser("lehner", m_max=10, alpha_max=2, guard=8)

    sp = sub.add_parser("explore", help="level-13 explorations")
    esub = sp.add_subparsers(dest="target", required=True)
    ep = esub.add_parser("p13")
    ep.add_argument("--prime-max", type=int, default=1000)
    ep.add_argument("--m-max", type=int, default=26)
    ep.add_argument("--guard", type=int, default=8)
    _add_output_flags(ep, ("text", "json"))

    return parser


def _cmd_expand(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    if args.terms < 2 or args.m < 1:
        _usage_error(parser, "--terms must be >= 2 and --m >= 1")
    prec = _check_prec(parser, args.prec, args.terms)
    series = (phi_series(args.p, prec) ** args.m).truncate(args.terms)
    _emit(_dump_json(series.to_dict()), args.output)
    return 0


def _cmd_up(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    if args.terms < 1 or args.m < 1 or args.alpha < 0:
        _usage_error(parser, "--terms must be >= 1, --m >= 1, --alpha >= 0")
    budget = max(2, args.p**args.alpha * (args.terms - 1) + 1)
    prec = _check_prec(parser, args.prec, budget)
    series = u_p_iter(phi_series(args.p, prec) ** args.m, args.p, args.alpha)
    _emit(_dump_json(series.truncate(args.terms).to_dict()), args.output)
    return 0


def _cmd_decompose(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    if args.m < 1 or args.alpha < 1 or args.guard < 0:
        _usage_error(parser, "--m and --alpha must be >= 1 and --guard >= 0")
    budget = phi_precision_budget(args.p, args.m, args.alpha, args.guard)
    prec = _check_prec(parser, args.prec, budget)
    series = u_p_iter(phi_series(args.p, prec) ** args.m, args.p, args.alpha)
    poly = decompose(series, args.p, args.p**args.alpha * args.m, args.guard)
    payload = {
        "poly": poly.to_dict(),
        "val_profile": [[j, v] for j, v in val_profile(poly)],
    }
    _emit(_dump_json(payload), args.output)
    return 0


def _cmd_gamma(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    if args.m < 1 or args.alpha_max < 0:
        _usage_error(parser, "--m must be >= 1 and --alpha-max >= 0")
    rows = ["alpha,gamma,f_alpha"]
    for alpha in range(args.alpha_max + 1):
        rows.append(
            f"{alpha},{gamma(args.p, args.m, alpha)},{f_iter(args.p, args.m, alpha)}"
        )
    _emit("\n".join(rows) + "\n", args.output)
    return 0


def _emit_reports(reports: list[VerificationReport], args: argparse.Namespace) -> int:
    fmt = getattr(args, "format", "text")
    if fmt == "json":
        payload = (
            reports[0].to_dict()
            if len(reports) == 1
            else {"reports": [r.to_dict() for r in reports]}
        )
        _emit(_dump_json(payload), args.output)
    else:
        _emit("\n\n".join(r.to_text() for r in reports) + "\n", args.output)
    return 0 if all(r.passed for r in reports) else 1


def _cmd_verify(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    driver = args.driver
    if driver == "theorem1":
        report = verify_theorem1(args.p, args.m_max, args.alpha_max, args.n_max, args.jobs)
    elif driver == "theorem2":
        report = verify_theorem2(args.p, args.m_max, args.alpha_max, args.guard, args.jobs)
    elif driver == "alpha1":
        report = verify_alpha1(args.p, args.m_max, args.guard)
    elif driver == "newton":
        report = verify_newton(args.p, args.m_max, args.guard)
    elif driver == "lemma-poly":
        report = verify_lemma_poly(args.p, args.m_max, args.guard)
    elif driver == "binarygamma":
        report = verify_binarygamma(args.p, args.m_max, args.alpha_max)
    else:  # lehner
        report = compare_lehner(args.m_max, args.alpha_max, args.guard)
    return _emit_reports([report], args)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    cache_dir = os.environ.get("PHICONG_CACHE_DIR")
    if cache_dir:
        DEFAULT_CACHE.attach_directory(cache_dir)
    try:
        if args.command == "expand":
            return _cmd_expand(parser, args)
        if args.command == "up":
            return _cmd_up(parser, args)
        if args.command == "decompose":
            return _cmd_decompose(parser, args)
        if args.command == "gamma":
            return _cmd_gamma(parser, args)
        if args.command == "verify":
            return _cmd_verify(parser, args)
        if args.command == "explore":
            reports = explore_p13(args.prime_max, args.m_max, args.guard)
            return _emit_reports(reports, args)
        raise AssertionError(f"unhandled command {args.command}")
    finally:
        if cache_dir:
            DEFAULT_CACHE.flush()


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
