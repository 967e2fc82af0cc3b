"""Command-line interface.

    lrstirling table {first,second} --l L --r R --n-max N [--format csv|json]
    lrstirling check SUITE [--n-max N] [--k-max K] [--l-max L] [--r-max R] [--list]
    lrstirling zeta --l L --k K --n N [--precision P]
    lrstirling oracle {first,second} --n N [--l L] [--r R] [--k K] [--histogram]

Exit status: 0 success / all identities hold, 1 an identity failed,
2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import __version__, checks, core, mzv, oracle
from .core import StirlingKind, StirlingParams

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

SUITE_CHOICES = [*checks.SUITES, "all"]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def encode(value):
    """JSON-safe form: ints become decimal strings, Fractions num/den objects."""
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, int):
        return str(value)
    if isinstance(value, Fraction):
        return {
            "num": str(value.numerator),
            "den": str(value.denominator),
            "decimal": mzv.render(mzv.to_mpf(value, 40), 30),
        }
    if isinstance(value, dict):
        return {str(k): encode(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [encode(v) for v in value]
    return str(value)


def report(command: str, parameters: dict, status: str, payload: dict) -> dict:
    return {
        "command": command,
        "parameters": parameters,
        "status": status,
        "payload": payload,
        "version": __version__,
    }


def dump_json(record: dict) -> str:
    return json.dumps(record, sort_keys=True, indent=2) + "\n"


def dump_csv(header, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _positive(name, value):
    if value is not None and value < 1:
        raise UsageError(f"--{name.replace('_', '-')} must be >= 1, got {value}")


def _params_from(args) -> StirlingParams:
    _positive("l", args.l)
    _positive("r", args.r)
    return StirlingParams(args.l, args.r)


def cmd_table(args) -> tuple[int, str]:
    p = _params_from(args)
    if args.n_max < 0:
        raise UsageError(f"--n-max must be >= 0, got {args.n_max}")
    kind = StirlingKind.parse(args.kind)
    rows = list(core.triangle(kind, p).items(args.n_max))
    params = {"kind": kind.value, "l": p.l, "r": p.r, "n_max": args.n_max}
    if args.format == "csv":
        return EXIT_OK, dump_csv(["n", "k", "value"], rows)
    payload = {"rows": [{"n": n, "k": k, "value": str(v)} for n, k, v in rows]}
    return EXIT_OK, dump_json(report("table", params, "value", payload))


def _instance_label(inst: dict) -> str:
    return ";".join(f"{k}={v}" for k, v in inst.items())


def cmd_check(args) -> tuple[int, str]:
    ranges = {"n_max": args.n_max, "k_max": args.k_max, "l_max": args.l_max, "r_max": args.r_max}
    for name, value in ranges.items():
        _positive(name, value)
    names = list(checks.SUITES) if args.suite == "all" else [args.suite]
    results = []
    for name in names:
        keep = args.list or name in checks.LISTED_BY_DEFAULT
        try:
            result = checks.run_suite(name, keep_instances=keep, **ranges)
        except oracle.EnumerationTooLarge as exc:
            raise UsageError(str(exc)) from None
        results.append(result)
        print(
            f"{name}: {result.checked} checked, {len(result.failures)} failed",
            file=sys.stderr,
        )
    ok = all(r.ok for r in results)
    status = "pass" if ok else "fail"
    code = EXIT_OK if ok else EXIT_FAILED

    if args.format == "csv":
        rows = []
        for result in results:
            listed = result.instances or result.failures
            for inst, lhs, rhs in listed:
                state = "pass" if lhs == rhs else "fail"
                rows.append([result.name, _instance_label(inst), state, lhs, rhs])
        return code, dump_csv(["suite", "instance", "status", "lhs", "rhs"], rows)

    suites = []
    for result in results:
        entry = {
            "name": result.name,
            "ranges": dict(result.ranges),
            "checked": result.checked,
            "failed": len(result.failures),
            "failures": [
                {"instance": inst, "lhs": encode(lhs), "rhs": encode(rhs)}
                for inst, lhs, rhs in result.failures
            ],
        }
        if result.instances:
            entry["instances"] = [
                {"instance": inst, "lhs": encode(lhs), "rhs": encode(rhs), "match": lhs == rhs}
                for inst, lhs, rhs in result.instances
            ]
        suites.append(entry)
    params = {"suite": args.suite, **{k: v for k, v in ranges.items() if v is not None}}
    return code, dump_json(report("check", params, status, {"suites": suites}))


def cmd_zeta(args) -> tuple[int, str]:
    if args.precision < 1:
        raise UsageError(f"--precision must be >= 1, got {args.precision}")
    if args.n < 0:
        raise UsageError(f"--n must be >= 0, got {args.n}")
    try:
        est = mzv.mzv_estimate(args.l, args.k, args.n, args.precision)
    except mzv.DivergenceError as exc:
        raise UsageError(str(exc)) from None
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    closed = None if est.closed_form is None else mzv.render(est.closed_form, args.precision)
    gap = None if est.gap is None else mzv.render(est.gap, args.precision)
    num = den = None
    if est.exact:
        num, den = str(est.value.numerator), str(est.value.denominator)
    params = {"l": est.l, "k": est.k, "n": est.n, "precision": est.precision}
    if args.format == "csv":
        header = ["l", "k", "n", "num", "den", "decimal", "closed_form", "gap"]
        row = [est.l, est.k, est.n, num or "", den or "", est.decimal, closed or "", gap or ""]
        return EXIT_OK, dump_csv(header, [row])
    payload = {
        "value": {"num": num, "den": den, "decimal": est.decimal},
        "closed_form": closed,
        "gap": gap,
        "exact": est.exact,
        "empty": est.empty,
    }
    return EXIT_OK, dump_json(report("zeta", params, "value", payload))


def cmd_oracle(args) -> tuple[int, str]:
    p = _params_from(args)
    if args.n < 1:
        raise UsageError(f"--n must be >= 1, got {args.n}")
    kind = StirlingKind.parse(args.kind)
    try:
        hist = oracle.histogram(args.n, kind)
    except oracle.EnumerationTooLarge as exc:
        raise UsageError(str(exc)) from None
    params = {"kind": kind.value, "n": args.n, "l": p.l, "r": p.r}
    if args.histogram:
        rows = [(" ".join(map(str, sorted(s))), c) for s, c in hist.items()]
        if args.format == "csv":
            return EXIT_OK, dump_csv(["leaders", "count"], rows)
        payload = {"histogram": [{"leaders": s, "count": str(c)} for s, c in rows]}
        return EXIT_OK, dump_json(report("oracle", params, "value", payload))

    ks = range(p.r, args.n + 1) if args.k is None else [args.k]
    rows = [(args.n, k, oracle.oracle_count(args.n, k, p, kind)) for k in ks]
    if args.k is not None:
        params["k"] = args.k
    if args.format == "csv":
        return EXIT_OK, dump_csv(["n", "k", "value"], rows)
    payload = {"rows": [{"n": n, "k": k, "value": str(v)} for n, k, v in rows]}
    return EXIT_OK, dump_json(report("oracle", params, "value", payload))


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="lrstirling", description="Exact (l,r)-Stirling numbers and their identities.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, default_format):
        sp.add_argument("--format", choices=["csv", "json"], default=default_format)
        sp.add_argument("--output", help="write to this path instead of standard output")

    t = sub.add_parser("table", help="emit a triangle as rows (n, k, value)")
    t.add_argument("kind", choices=["first", "second"])
    t.add_argument("--l", type=int, required=True)
    t.add_argument("--r", type=int, default=1)
    t.add_argument("--n-max", type=int, required=True)
    common(t, "csv")
    t.set_defaults(func=cmd_table)

    c = sub.add_parser("check", help="verify an identity suite over a range")
    c.add_argument("suite", choices=SUITE_CHOICES)
    for flag in ("--n-max", "--k-max", "--l-max", "--r-max"):
        c.add_argument(flag, type=int, default=None)
    c.add_argument("--list", action="store_true", help="list every instance, not only failures")
    common(c, "json")
    c.set_defaults(func=cmd_check)

    z = sub.add_parser("zeta", help="partial sum of zeta({l}_k) truncated at n")
    z.add_argument("--l", type=int, required=True)
    z.add_argument("--k", type=int, required=True)
    z.add_argument("--n", type=int, required=True)
    z.add_argument("--precision", type=int, default=30)
    common(z, "json")
    z.set_defaults(func=cmd_zeta)

    o = sub.add_parser("oracle", help="brute-force counts by leader-set enumeration")
    o.add_argument("kind", choices=["first", "second"])
    o.add_argument("--n", type=int, required=True)
    o.add_argument("--k", type=int, default=None)
    o.add_argument("--l", type=int, default=1)
    o.add_argument("--r", type=int, default=1)
    o.add_argument("--histogram", action="store_true", help="emit leader-set class sizes")
    common(o, "csv")
    o.set_defaults(func=cmd_oracle)
    return parser


def main(argv=None) -> int:
    # exact values routinely exceed the default int->str digit cap
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        code, text = args.func(args)
    except UsageError as exc:
        print(f"lrstirling: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        try:
            sys.stdout.write(text)
            sys.stdout.flush()
        except BrokenPipeError:
            sys.stdout = None
    return code


if __name__ == "__main__":
    sys.exit(main())
