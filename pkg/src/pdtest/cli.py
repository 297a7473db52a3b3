"""Command line front end (``pdtest``).

Exit codes for ``check``: 0 positive definite, 1 not positive definite,
2 input or usage error.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from fractions import Fraction

from . import _backend
from .bench import run_bench
from .errors import PdTestError
from .generators import gen_nakayama, gen_random_positive, gen_random_uti
from .positivity import ALGORITHMS, run_test
from .textio import read_matrix, write_matrix

EXIT_POSITIVE = 0
EXIT_NOT_POSITIVE = 1
EXIT_ERROR = 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def _int_list(text):
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a comma separated integer list, got {text!r}")


def _str_list(text):
    items = [x.strip() for x in text.split(",") if x.strip()]
    for x in items:
        if x not in ALGORITHMS:
            raise argparse.ArgumentTypeError(f"unknown algorithm {x!r}")
    return items


def _rational(text):
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}")


def build_parser():
    p = _Parser(
        prog="pdtest",
        description="Inflation-based positive definiteness tests for unidiagonal "
                    "triangle-integral matrices.",
        epilog="check exits with 0 (positive definite), 1 (not positive definite) "
               "or 2 (input/usage error).",
    )
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("check", help="test one matrix file",
                       epilog="exit codes: 0 positive, 1 not positive, 2 error")
    c.add_argument("file")
    c.add_argument("--algo", choices=ALGORITHMS, default="root-inflations")
    c.add_argument("--strategy", type=int, choices=range(4), default=0)
    c.add_argument("--seed", type=int)
    c.add_argument("--no-precheck", dest="precheck", action="store_false")
    c.add_argument("--no-early-exit", dest="early_exit", action="store_false")
    c.add_argument("--json", action="store_true")
    c.add_argument("--trace", action="store_true", help="print the inflation steps")

    g = sub.add_parser("gen", help="write a generated matrix")
    gsub = g.add_subparsers(dest="kind", required=True, parser_class=_Parser)
    gn = gsub.add_parser("nakayama")
    gn.add_argument("n", type=int)
    gn.add_argument("-o", "--output", required=True)
    gp = gsub.add_parser("random-positive")
    gp.add_argument("n", type=int)
    gp.add_argument("--seed", type=int, required=True)
    gp.add_argument("--steps", type=int, default=20)
    gp.add_argument("-o", "--output", required=True)
    gr = gsub.add_parser("random")
    gr.add_argument("n", type=int)
    gr.add_argument("--seed", type=int, required=True)
    gr.add_argument("--range", dest="coeff_range", type=int, default=2)
    gr.add_argument("--density", type=_rational, default=Fraction(1, 2))
    gr.add_argument("-o", "--output", required=True)

    b = sub.add_parser("bench", help="benchmark over Nakayama matrices and files")
    b.add_argument("--sizes", type=_int_list, default=[100, 200, 400])
    b.add_argument("--algos", type=_str_list, default=["root-inflations", "inflations"])
    b.add_argument("--strategies", type=_int_list, default=[0, 1, 2, 3])
    b.add_argument("--seeds", type=_int_list, default=[0])
    b.add_argument("--reps", type=int, default=3)
    b.add_argument("--files", nargs="*", default=[])
    b.add_argument("--no-precheck", dest="precheck", action="store_false")
    b.add_argument("--no-early-exit", dest="early_exit", action="store_false")
    b.add_argument("--scaling", action="store_true",
                   help="time root-inflations and gauss on Nak(n), n = 100, 200, 400, 800")
    b.add_argument("-o", "--output", required=True, help="output directory")
    return p


def _cmd_check(args):
    if args.algo == "gauss" and (args.strategy != 0 or args.seed is not None):
        logging.warning("--strategy and --seed are ignored with --algo gauss")
    A = read_matrix(args.file)
    out = run_test(A, args.algo, args.strategy, args.seed, args.precheck, args.early_exit)
    if args.json:
        print(json.dumps(out.to_json(), sort_keys=True))
    else:
        verdict = "positive definite" if out.positive else "not positive definite"
        extra = f", Dynkin type {out.dynkin}" if out.dynkin is not None else ""
        print(f"{verdict}{extra} ({out.algorithm}, {out.pair_inflations} pair / "
              f"{out.vertex_inflations} vertex inflations, {out.elapsed_ms:.3f} ms)")
    if args.trace:
        sys.stdout.write(out.log.to_text())
    return EXIT_POSITIVE if out.positive else EXIT_NOT_POSITIVE


def _cmd_gen(args):
    if args.kind == "nakayama":
        A = gen_nakayama(args.n)
        comment = f"Nak({args.n})"
    elif args.kind == "random-positive":
        A = gen_random_positive(args.n, args.seed, args.steps)
        comment = f"random positive n={args.n} seed={args.seed} steps={args.steps}"
    else:
        A = gen_random_uti(args.n, args.seed, args.coeff_range, args.density)
        comment = (f"random uti n={args.n} seed={args.seed} range={args.coeff_range} "
                   f"density={args.density}")
    write_matrix(args.output, A, comment)
    return 0


def _cmd_bench(args):
    sizes, algos = args.sizes, args.algos
    if args.scaling:
        sizes, algos = [100, 200, 400, 800], ["root-inflations", "gauss"]
    logging.info("kernels: %s", _backend.kernels.NAME)
    report = run_bench(sizes, algos, args.strategies, args.seeds, args.reps, args.files,
                       args.precheck, args.early_exit,
                       progress=lambda r: logging.info("%s %s s=%s seed=%s rep=%d %.3f ms", r.matrix_id,
                                                       r.algo, r.strategy, r.seed, r.rep, r.elapsed_ms))
    csv_path, json_path = report.write(args.output)
    for s in report.summary():
        print(f"{s['matrix_id']:>10} {s['algo']:>16} s={s['strategy']!s:>4} seed={s['seed']!s:>6} "
              f"{'pos' if s['positive'] else 'neg'} {s['dynkin'] or '-':>6} "
              f"P={s['pair_inflations']:<7} V={s['vertex_inflations']:<5} {s['median_ms']:.3f} ms")
    print(f"wrote {csv_path} and {json_path}")
    return 0


def main(argv=None):
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s")
    try:
        if args.command == "check":
            return _cmd_check(args)
        if args.command == "gen":
            return _cmd_gen(args)
        return _cmd_bench(args)
    except (PdTestError, OSError, ValueError, OverflowError) as exc:
        print(f"pdtest: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
