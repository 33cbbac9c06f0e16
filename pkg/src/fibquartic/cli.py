"""
Command line front end.

    fibquartic eval --family fib4 --m 1 --n 3
    fibquartic identity --id FibAddSub --args 5 3
    fibquartic verify --m-min -6 --m-max 6 --n-max 12 --with-identities
    fibquartic bench --family fib4 --m 3 --n 10000 --reps 3

Exit status: 0 success, 1 verification failure, 2 usage or domain error.
"""

import argparse
import json
import sys
import time

from .bench import bench
from .closed_form import Method, SumFamily
from .errors import ConsistencyError, DomainError, ParameterError
from .identities import IdentityId, eval_identity
from .verify import GridSpec, evaluate, probe_negative_n, run_grid

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2

FAMILY_NAMES = [f.value for f in SumFamily]


class _Parser(argparse.ArgumentParser):
    # report usage errors as an exception instead of exiting the interpreter
    def error(self, message):
        raise _UsageError(f"{self.format_usage()}{self.prog}: error: {message}")


class _UsageError(Exception):
    pass


def _families(text):
    try:
        return frozenset(SumFamily.parse(t) for t in text.split(",") if t.strip())
    except ParameterError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def build_parser():
    parser = _Parser(
        prog="fibquartic",
        description="Fourth-power sums of Fibonacci and Lucas numbers, exactly.",
    )
    sub = parser.add_subparsers(dest="command", metavar="COMMAND", parser_class=_Parser)
    sub.required = True

    p = sub.add_parser("eval", help="evaluate one fourth-power sum")
    p.add_argument("--family", required=True, choices=FAMILY_NAMES)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=[x.value for x in Method], default="closed")
    p.add_argument("--json", action="store_true", help="emit one JSON record")
    p.add_argument(
        "--experimental-negative-n",
        action="store_true",
        help="fib4/lucas4 only: evaluate the closed form at n < 0 and compare "
        "with -sum_{k=n+1}^{0}",
    )

    p = sub.add_parser("identity", help="evaluate both sides of an identity")
    p.add_argument("--id", required=True, choices=[t.value for t in IdentityId])
    p.add_argument("--args", type=int, nargs="+", required=True)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("verify", help="closed form vs direct summation over a grid")
    p.add_argument("--m-min", type=int, default=-6)
    p.add_argument("--m-max", type=int, default=6)
    p.add_argument("--n-max", type=int, default=12)
    p.add_argument("--families", type=_families, default=frozenset(SumFamily))
    p.add_argument("--with-identities", action="store_true")
    p.add_argument("--id-min", type=int, default=-30)
    p.add_argument("--id-max", type=int, default=30)
    p.add_argument("--json", action="store_true", help="emit the full report as JSON")

    p = sub.add_parser("bench", help="time closed form against direct summation")
    p.add_argument("--family", required=True, choices=FAMILY_NAMES)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--reps", type=int, default=3)
    p.add_argument("--json", action="store_true")
    return parser


def _cmd_eval(args, out):
    if args.experimental_negative_n:
        probe = probe_negative_n(args.family, args.m, args.n)
        verdict = "agree" if probe.agrees else "disagree"
        if args.json:
            record = {
                "family": args.family, "m": args.m, "n": args.n,
                "closed": str(probe.closed), "convention": str(probe.convention),
                "agrees": probe.agrees,
            }
            print(json.dumps(record), file=out)
        else:
            print(f"{probe.closed} {probe.convention} {verdict}", file=out)
        return EXIT_OK

    t0 = time.perf_counter()
    result = evaluate(args.family, args.m, args.n, Method(args.method))
    elapsed_ms = (time.perf_counter() - t0) * 1000.0
    if args.json:
        record = {
            "family": args.family, "m": args.m, "n": args.n,
            "value": str(result.value), "method": args.method,
            "elapsed_ms": elapsed_ms, "big_op_count": result.big_op_count,
        }
        print(json.dumps(record), file=out)
    else:
        print(result.value, file=out)
    return EXIT_OK


def _cmd_identity(args, out):
    inst = eval_identity(args.id, args.args)
    if args.json:
        record = {
            "id": inst.id.value, "args": list(inst.args),
            "lhs": str(inst.lhs), "rhs": str(inst.rhs), "holds": inst.holds,
        }
        print(json.dumps(record), file=out)
    else:
        print(f"{inst.lhs} {'==' if inst.holds else '!='} {inst.rhs}", file=out)
    return EXIT_OK if inst.holds else EXIT_MISMATCH


def _cmd_verify(args, out):
    spec = GridSpec(
        families=args.families,
        m_range=(args.m_min, args.m_max),
        n_range=(0, args.n_max),
        include_identities=args.with_identities,
        identity_arg_range=(args.id_min, args.id_max),
    )
    report = run_grid(spec)
    if args.json:
        print(report.to_json(), file=out)
    else:
        status = "ok" if report.success else "FAILED"
        print(
            f"{status}: {report.cases_run} cases, {len(report.mismatches)} mismatches, "
            f"{len(report.divisibility_failures)} divisibility failures "
            f"({report.elapsed_ms:.1f} ms)",
            file=out,
        )
        for r in report.mismatches:
            print(f"  {r.subject} {r.args}: closed {r.closed} != oracle {r.oracle}", file=out)
        for r in report.divisibility_failures:
            print(f"  {r.subject} {r.args}: inexact division at {r.site}", file=out)
    return EXIT_OK if report.success else EXIT_MISMATCH


def _cmd_bench(args, out):
    result = bench(args.family, args.m, args.n, args.reps)
    if args.json:
        print(json.dumps(result.to_dict()), file=out)
    else:
        print(
            f"{result.family.value} m={result.m} n={result.n}: "
            f"closed {result.closed_form_time * 1e3:.3f} ms, "
            f"oracle {result.oracle_time * 1e3:.3f} ms, "
            f"speedup {result.speedup:.1f}x",
            file=out,
        )
    return EXIT_OK


COMMANDS = {
    "eval": _cmd_eval,
    "identity": _cmd_identity,
    "verify": _cmd_verify,
    "bench": _cmd_bench,
}


def cli_main(argv=None, out=None, err=None):
    """Run one command and return its exit status."""
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(exc, file=err)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return exc.code if isinstance(exc.code, int) else EXIT_OK
    try:
        return COMMANDS[args.command](args, out)
    except (DomainError, ParameterError) as exc:
        print(f"fibquartic {args.command}: error: {exc}", file=err)
        return EXIT_USAGE
    except ConsistencyError as exc:
        print(f"fibquartic {args.command}: verification failed: {exc}", file=err)
        return EXIT_MISMATCH


def main():
    sys.exit(cli_main())


if __name__ == "__main__":
    main()
