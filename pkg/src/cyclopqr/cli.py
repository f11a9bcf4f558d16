"""Command-line front end.

Exit codes: 0 success, 1 property or bound violation, 2 usage error,
3 resource limit.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import asdict

from .binary import lam_leung_support
from .errors import ConsistencyError, InvalidArgument, ResourceLimitError
from .oracle import cyclotomic_oracle, expand_from_kernel, reduce_to_kernel
from .poly import DensePoly
from .residue import factorize
from .scan import CorrectedBeiterViolation, run_scan
from .ternary import TernaryTriple, classify_classes, height, ternary_all_coefficients
from .verify import SUITES, run_suites

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3


def _kernel_triple(kernel_n: int) -> TernaryTriple | None:
    fs = factorize(kernel_n) if kernel_n > 1 else ()
    if len(fs) == 3 and all(e == 1 for _, e in fs):
        return TernaryTriple.of(*(prime for prime, _ in fs))
    return None


def phi_coefficients(n: int) -> tuple[DensePoly, str]:
    """Phi_n through its kernel: the ternary engine when it applies, else the oracle."""
    plan = reduce_to_kernel(n)
    t = _kernel_triple(plan.kernel_n)
    if t is None:
        return cyclotomic_oracle(n), "oracle"
    return expand_from_kernel(ternary_all_coefficients(t, t.support()), plan), "lemma"


def _poly_text(coeffs: list[int]) -> str:
    terms = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if c == 0:
            continue
        mag = abs(c)
        mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
        body = str(mag) if not mono else (mono if mag == 1 else f"{mag}*{mono}")
        sign = "-" if c < 0 else "+"
        terms.append((sign, body))
    if not terms:
        return "0"
    first_sign, first = terms[0]
    out = ("-" if first_sign == "-" else "") + first
    return out + "".join(f" {s} {b}" for s, b in terms[1:])


def cmd_coeffs(args: argparse.Namespace) -> int:
    poly, _ = phi_coefficients(args.n)
    coeffs = poly.tolist()
    if args.format == "csv":
        print(",".join(map(str, coeffs)))
    elif args.format == "json":
        print(json.dumps(coeffs))
    else:
        print(_poly_text(coeffs))
    return EXIT_OK


def cmd_height(args: argparse.Namespace) -> int:
    plan = reduce_to_kernel(args.n)
    t = _kernel_triple(plan.kernel_n)
    method = args.method
    if method == "auto":
        method = "lemma" if t is not None else "oracle"
    witness = None
    if method == "lemma":
        if t is None:
            print(f"error: kernel {plan.kernel_n} of {args.n} is not a product of three odd primes",
                  file=sys.stderr)
            return EXIT_USAGE
        rep = height(t, t.support())
        a, witness = rep.height, rep.witness_exponent
    else:
        a = cyclotomic_oracle(args.n).height()

    if args.format == "json":
        print(json.dumps({"n": args.n, "height": a, "kernel": plan.kernel_n,
                          "method": method, "kernel_witness_exponent": witness}))
    else:
        print(f"A({args.n}) = {a}  kernel={plan.kernel_n}  method={method}")
    return EXIT_OK


def cmd_scan(args: argparse.Namespace) -> int:
    try:
        summary = run_scan(args.p, args.q_max, args.r_max, jobs=args.jobs,
                           out_path=args.out, resume=args.resume, timings=args.timings)
    except CorrectedBeiterViolation as exc:
        print(f"DEFECT: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    except OSError as exc:
        print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.format == "json":
        print(json.dumps(asdict(summary)))
    else:
        arg = "-" if summary.argmax is None else f"(q={summary.argmax[0]}, r={summary.argmax[1]})"
        print(f"p={summary.p} q<={summary.q_max} r<={summary.r_max}")
        print(f"triples_scanned={summary.triples_scanned}")
        print(f"restricted_M={summary.restricted_M} argmax={arg}")
        print(f"corrected_cap={2 * summary.p // 3} beiter_bound={(summary.p + 1) // 2} "
              f"beiter_violations={summary.beiter_violations}")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    checks = run_suites(args.suite, args.seed)
    for c in checks:
        print(c.line())
    failed = sum(not c.passed for c in checks)
    print(f"{len(checks) - failed}/{len(checks)} properties passed")
    return EXIT_VIOLATION if failed else EXIT_OK


def cmd_diag_classes(args: argparse.Namespace) -> int:
    t = TernaryTriple.of(args.p, args.q, args.r)
    part = classify_classes(t, lam_leung_support(t.p, t.q), args.i, args.j)
    print(f"(p, q, r)=({t.p}, {t.q}, {t.r}) i={args.i} j={args.j} "
          f"q_p*={t.q_p_star} p_q*={t.p_q_star} r_p*={t.r_p_star}")
    for v in range(t.p):
        kind = "v" if v < t.q_p_star else "v'"
        w = part.witnesses[v]
        print(f"{kind}={v}  {part.label_of(v):7s}  upper={w['upper']}  lower={w['lower']}")
    print(f"|S|={len(part.special)} |P|={len(part.plain)} |N|={len(part.null_)}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cyclopqr", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("coeffs", help="print the coefficients of Phi_n")
    p.add_argument("n", type=int)
    p.add_argument("--format", choices=("text", "csv", "json"), default="text")
    p.set_defaults(func=cmd_coeffs)

    p = sub.add_parser("height", help="print A(n)")
    p.add_argument("n", type=int)
    p.add_argument("--method", choices=("auto", "lemma", "oracle"), default="auto")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_height)

    p = sub.add_parser("scan", help="sweep A(pqr) over primes p < q <= q-max, q < r <= r-max")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q-max", type=int, required=True)
    p.add_argument("--r-max", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out", default=None, help="JSON-lines record file")
    p.add_argument("--resume", action="store_true", help="keep records already in --out")
    p.add_argument("--timings", action="store_true", help="fill engine_ms (makes output nondeterministic)")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("verify", help="run the property suites")
    p.add_argument("--suite", choices=("all",) + SUITES, default="all")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("diag-classes", help="special/plain/null classes for (i, j)")
    for name in ("p", "q", "r", "i", "j"):
        p.add_argument(name, type=int)
    p.set_defaults(func=cmd_diag_classes)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except InvalidArgument as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except ConsistencyError as exc:
        print(f"DEFECT: {exc}", file=sys.stderr)
        return EXIT_VIOLATION


if __name__ == "__main__":
    sys.exit(main())
