"""Command-line interface.

Exit status: 0 on success, 1 when a theorem or guarantee check fails, 2 on
bad input or usage.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import serialize
from .constructions import LineSet, gen_four_bundle, gen_random, gen_three_bundle, perturb_general_position
from .geometry import SIGN_VECTORS, PlaneTriple, load_report
from .harness import run_benchmark, verify_bundle_theorems, write_csv
from .solvers import GuaranteeViolation, brute_force, solve_orthogonal_512, solve_slab_split

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _load(path, kind):
    obj = serialize.read(path)
    if not isinstance(obj, kind):
        raise UsageError(f"{path}: expected a {kind.__name__} document")
    return obj


def _split_sizes(n: int):
    base, extra = divmod(n, 3)
    return tuple(base + (1 if a < extra else 0) for a in range(3))


def cmd_gen(args):
    if args.family == "three-bundle":
        eps = None if args.epsilon is None else serialize.parse_rational(args.epsilon)
        lines = gen_three_bundle(args.n, eps)
    elif args.family == "four-bundle":
        lines = gen_four_bundle(args.n)
    else:
        if args.sizes:
            sizes = tuple(int(v) for v in args.sizes.split(","))
            if len(sizes) != 3:
                raise UsageError("--sizes takes three comma-separated counts")
        else:
            sizes = _split_sizes(args.n)
        span = args.range if args.range is not None else 4 * sum(sizes) + 10
        lines = gen_random(*sizes, span, args.seed)
    serialize.write(lines, args.output)
    return EXIT_OK


def _format_report(report) -> str:
    out = [f"max_load {report.max_load}"]
    out += [f"{s} {report.counts[s]}" for s in SIGN_VECTORS]
    out.append("contained " + " ".join(f"{i}:{j}" for i, j in report.contained))
    return "\n".join(out)


def cmd_eval(args):
    lines = _load(args.lines, LineSet)
    triple = _load(args.planes, PlaneTriple)
    report = load_report(lines, triple)
    print(serialize.encode(report) if args.json else _format_report(report))
    return EXIT_OK


def cmd_solve(args):
    lines = _load(args.input, LineSet)
    solver = {"slab718": solve_slab_split, "ortho512": solve_orthogonal_512}[args.algo]
    solution = solver(lines)
    serialize.write(solution, args.output)
    print(f"{args.algo}: achieved {solution.achieved} (bound {solution.bound})")
    return EXIT_OK


def cmd_opt(args):
    lines = _load(args.input, LineSet)
    solution = brute_force(lines, args.mode)
    serialize.write(solution, args.output)
    print(f"{args.mode}: optimum {solution.achieved}")
    return EXIT_OK


def cmd_verify(args):
    report = verify_bundle_theorems(args.family, args.n)
    doc = {
        "family": report.family,
        "n": report.n,
        "computed": report.computed,
        "expected": report.expected,
        "witnesses": {k: serialize.to_data(t)["planes"] for k, t in report.witnesses.items()},
        "pass": report.passed,
    }
    print(json.dumps(doc, indent=2))
    return EXIT_OK if report.passed else EXIT_VIOLATION


def cmd_bench(args):
    try:
        sizes = [int(v) for v in args.sizes.split(",") if v.strip()]
    except ValueError:
        raise UsageError(f"bad --sizes {args.sizes!r}") from None
    rows = run_benchmark(sizes, args.trials, args.seed, args.with_optimum)
    write_csv(rows, args.csv)
    bad = [r for r in rows if r.achieved > r.bound
           or (r.optimum is not None and r.optimum > r.achieved)]
    print(f"{len(rows)} rows written to {args.csv}; {len(bad)} violations")
    return EXIT_VIOLATION if bad else EXIT_OK


def cmd_perturb(args):
    lines = _load(args.input, LineSet)
    serialize.write(perturb_general_position(lines), args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="tripart", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("gen", help="generate a line set")
    p.add_argument("--family", required=True, choices=["three-bundle", "four-bundle", "random"])
    p.add_argument("--n", type=int, default=0)
    p.add_argument("--epsilon", help="perturbation scale p/q (three-bundle)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--sizes", help="nx,ny,nz for random instances (overrides --n)")
    p.add_argument("--range", type=int, help="coordinate range for random instances")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("eval", help="print the load report of a plane triple")
    p.add_argument("--lines", required=True)
    p.add_argument("--planes", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("solve", help="run a constructive partition")
    p.add_argument("--algo", required=True, choices=["slab718", "ortho512"])
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("opt", help="exact brute-force optimum")
    p.add_argument("--mode", required=True, choices=["orthogonal", "axis-parallel"])
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_opt)

    p = sub.add_parser("verify", help="check the tight values of a bundle family")
    p.add_argument("--family", required=True, choices=["three-bundle", "four-bundle"])
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="benchmark the constructive partitions")
    p.add_argument("--sizes", required=True, help="comma-separated line counts")
    p.add_argument("--trials", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--csv", required=True)
    p.add_argument("--with-optimum", action="store_true")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("perturb", help="move integer lines into general position")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_perturb)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except GuaranteeViolation as exc:
        print(f"guarantee violated: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    except (UsageError, ValueError, TypeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
