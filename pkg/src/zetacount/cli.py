"""Command-line entry point: ``zetacount <command> [options]``.

Exit codes: 0 ok, 2 parameter constraint violated, 3 bad config or input
file, 4 usage error, 5 zero list does not cover a requested height, 6 a check
or property failed.
"""

import argparse
import sys
from importlib import resources
from pathlib import Path

from . import assembly, optimizer, properties, zeros
from .fcr import LEFT_STRIP_CHOICES
from .params import ConfigError, ConstraintError, ZetaLineHypotheses, parse_config
from .zetabounds import default_q_grid, verify_Q

EXIT_OK, EXIT_CONSTRAINT, EXIT_CONFIG, EXIT_USAGE, EXIT_COVERAGE, EXIT_FAILED = 0, 2, 3, 4, 5, 6

DEFAULT_HEIGHTS = "20,50,100,200,500,1000"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad usage, which is our constraint code
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def shipped_configs():
    """The bundled parameter files for the three published rows, in order."""
    base = resources.files("zetacount") / "data"
    return [base / ("row%d.conf" % k) for k in (1, 2, 3)]


def _read_config(path):
    try:
        text = (Path(path) if isinstance(path, str) else path).read_text()
    except OSError as exc:
        raise ConfigError("cannot read %s: %s" % (path, exc.strerror)) from None
    try:
        return parse_config(text)
    except (ConfigError, TypeError, ValueError) as exc:
        raise ConfigError("%s: %s" % (path, exc)) from None


def _emit(text, out_path=None):
    if out_path:
        Path(out_path).write_text(text)
    else:
        sys.stdout.write(text)


def _table(rows, fmt):
    return assembly.constants_markdown(rows) if fmt == "md" else assembly.constants_csv(rows)


# --------------------------------------------------------------------------
# commands
# --------------------------------------------------------------------------


def cmd_constants(args):
    if args.config:
        params, hyp = _read_config(args.config)
        param_list = [params] if params is not None else \
            [_read_config(p)[0] for p in shipped_configs()]
    else:
        hyp = ZetaLineHypotheses()
        param_list = [_read_config(p)[0] for p in shipped_configs()]
    rows = [assembly.assemble_constants(p, hyp, args.left_strip) for p in param_list]
    if args.round_up:
        rows = [bc.rounded_up() for bc in rows]
    _emit(_table(rows, args.out))
    return EXIT_OK


def cmd_optimize(args):
    if args.budget < 100:
        raise UsageError("--budget must be at least 100")
    try:
        objective = optimizer.Objective.parse(args.objective)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    hyp, template = ZetaLineHypotheses(), None
    if args.config:
        template, hyp = _read_config(args.config)
    if args.starts:
        try:
            starts = optimizer.parse_starts(Path(args.starts).read_text())
        except (OSError, ValueError) as exc:
            raise ConfigError("%s: %s" % (args.starts, exc)) from None
    else:
        starts = optimizer.DEFAULT_STARTS
    result = optimizer.optimize(objective, starts, args.budget, hyp=hyp, seed=args.seed,
                                template=template)
    if args.trace:
        Path(args.trace).write_text(result.trace_text())
    _emit(_table([result.constants], args.out))
    print("# objective %s = %.12g after %d evaluations" % (args.objective, result.value,
                                                        result.evaluations), file=sys.stderr)
    return EXIT_OK


def _parse_heights(text):
    try:
        heights = [float(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError("--heights must be comma-separated numbers") from None
    if not heights:
        raise UsageError("--heights is empty")
    if min(heights) < 2.718281828459045:
        raise UsageError("heights must be at least e")
    return heights


def cmd_validate(args):
    heights = _parse_heights(args.heights)
    try:
        zl = zeros.ingest_zero_file(args.zeros) if args.zeros else zeros.bundled_zeros()
    except OSError as exc:
        raise ConfigError("cannot read %s: %s" % (args.zeros, exc.strerror)) from None
    if args.constants == "corollary":
        rows = zeros.validate_bounds(zl, None, heights) + zeros.validate_s_bounds(zl, heights)
    else:
        params, hyp = _read_config(args.constants)
        if params is None:
            raise ConfigError("%s: no contour parameters" % args.constants)
        bc = assembly.assemble_constants(params, hyp)
        rows = zeros.validate_bounds(zl, bc, heights)
    _emit(zeros.report_csv(rows))
    return EXIT_OK if all(r.passed for r in rows) else EXIT_FAILED


def cmd_verify_q(args):
    hyp = _read_config(args.config)[1] if args.config else ZetaLineHypotheses()
    if args.t_max <= 0:
        raise UsageError("--t-max must be positive")
    report = verify_Q(hyp, default_q_grid(args.t_max), eta=args.eta)
    for check in report.checks:
        print("%s %-34s max ratio %.6f at t = %g" % (
            "PASS" if check.passed else "FAIL", check.name, check.max_ratio, check.worst_t))
    return EXIT_OK if report.passed else EXIT_FAILED


def cmd_check_properties(args):
    if args.samples < 1:
        raise UsageError("--samples must be positive")
    params, hyp = (None, ZetaLineHypotheses())
    if args.config:
        params, hyp = _read_config(args.config)
    suites = tuple(args.suites.split(",")) if args.suites else properties.SUITES
    unknown = set(suites) - set(properties.SUITES)
    if unknown:
        raise UsageError("unknown suite(s): %s" % ", ".join(sorted(unknown)))
    results = properties.run_all(args.samples, args.seed, hyp, params, suites, args.left_strip)
    for res in results:
        print(res.line())
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAILED


# --------------------------------------------------------------------------
# parser
# --------------------------------------------------------------------------


def build_parser():
    parser = _Parser(prog="zetacount", description="Explicit zero-counting bounds for zeta.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("constants", help="compute (C1, C2, C3, C3') for parameter rows")
    p.add_argument("--config", help="key = value file; default: the three shipped rows")
    p.add_argument("--out", choices=("csv", "md"), default="csv")
    p.add_argument("--round-up", action="store_true", help="round up at 6 decimals")
    p.add_argument("--left-strip", choices=LEFT_STRIP_CHOICES, default="printed")
    p.set_defaults(func=cmd_constants)

    p = sub.add_parser("optimize", help="search (c, r, eta) for small constants")
    p.add_argument("--objective", default="c1", help="c1, lex or weighted:T")
    p.add_argument("--starts", help="file of 'c r eta' lines; default: shipped starts")
    p.add_argument("--budget", type=int, default=2000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trace", help="write the improvement trace here")
    p.add_argument("--config", help="hypotheses and T0/J1/J2 template")
    p.add_argument("--out", choices=("csv", "md"), default="csv")
    p.set_defaults(func=cmd_optimize)

    p = sub.add_parser("validate", help="check the bounds against actual zero counts")
    p.add_argument("--zeros", help="zero-ordinate file; default: bundled list to height 1000")
    p.add_argument("--heights", default=DEFAULT_HEIGHTS)
    p.add_argument("--constants", default="corollary", help="'corollary' or a config path")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("verify-q", help="grid check of the shift constants Q0..Q5")
    p.add_argument("--config")
    p.add_argument("--t-max", type=float, default=5000.0)
    p.add_argument("--eta", type=float, default=None, help="also check the sigma = -eta line")
    p.set_defaults(func=cmd_verify_q)

    p = sub.add_parser("check-properties", help="randomised inequality suites")
    p.add_argument("--samples", type=int, default=500)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--config")
    p.add_argument("--suites", help="comma-separated subset of " + ",".join(properties.SUITES))
    p.add_argument("--left-strip", choices=LEFT_STRIP_CHOICES, default="zeta",
                   help="envelope variant checked against f_N")
    p.set_defaults(func=cmd_check_properties)
    return parser


def main(argv=None):
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print("usage error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE
    except ConstraintError as exc:
        print("constraint violated: %s" % exc, file=sys.stderr)
        return EXIT_CONSTRAINT
    except ConfigError as exc:
        print("config error: %s" % exc, file=sys.stderr)
        return EXIT_CONFIG
    except zeros.ZeroFileError as exc:
        print("zero file error: %s" % exc, file=sys.stderr)
        return EXIT_CONFIG
    except zeros.CoverageError as exc:
        print("coverage error: %s" % exc, file=sys.stderr)
        return EXIT_COVERAGE
    except optimizer.NoFeasiblePointError as exc:
        print("search failed: %s" % exc, file=sys.stderr)
        return EXIT_CONSTRAINT


if __name__ == "__main__":
    sys.exit(main())
