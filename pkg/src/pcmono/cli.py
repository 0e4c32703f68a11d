"""Command-line front end.

Exit codes: 0 success (NotMonogenic findings included), 1 computation error,
2 usage or parse error, 3 Unknown verdict under --strict, 4 crosscheck
disagreement or failed selftest.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys

from .dedekind import is_monogenic
from .errors import DegreeTooSmall, MissingParam, NotMonic, ParseError, PcmonoError, UnknownFamily
from .families import FAMILY_PARAMS, scan
from .integers import DEFAULT_EFFORT, is_prime
from .intpoly import IntPoly
from .irreducibility import PRIME_BUDGET
from .modpoly import is_irreducible_fp, reduce_mod
from .pc import DEGREE_CAP, pc_verdict
from .recurrence import BRUTE_CAP, galois_ring_test, period, period_bruteforce, period_mod_p, period_mod_p2
from .status import Verdict

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_USAGE = 2
EXIT_UNKNOWN = 3
EXIT_INCONSISTENT = 4

CSV_HEADER = ("family", "params", "poly", "p", "pi_p", "pi_p2", "upsilon_prime", "verdict")
DEFAULT_SEED = 20240501


def parse_poly(text: str, characteristic: bool = False) -> IntPoly:
    """Parse "1,-11,-43" (leading coefficient first).

    With ``characteristic`` the result must be monic of degree >= 2.
    """
    f = IntPoly.from_text(text)
    if characteristic:
        if not f.is_monic():
            raise NotMonic(f"{text!r} is not monic; the recurrence needs leading coefficient 1")
        if f.degree < 2:
            raise DegreeTooSmall(f"{text!r} has degree {f.degree}; need at least 2")
    return f


def parse_range(text: str) -> list[int]:
    """Integers from "a..b" (inclusive), "a,b,c" or a single value."""
    out = []
    for part in text.split(","):
        part = part.strip()
        try:
            if ".." in part:
                lo, hi = part.split("..", 1)
                lo, hi = int(lo), int(hi)
                if lo > hi:
                    raise ParseError(f"empty range {part!r}")
                out.extend(range(lo, hi + 1))
            else:
                out.append(int(part))
        except ValueError:
            raise ParseError(f"bad range {part!r}") from None
    return out


def _primes_from(text: str) -> list[int]:
    values = parse_range(text)
    if ".." in text:
        return [p for p in values if is_prime(p)]
    bad = [p for p in values if not is_prime(p)]
    if bad:
        raise ParseError(f"not prime: {bad}")
    return values


def _positive(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "text"), default="json")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED, help="seed for selftest's random cases")
    common.add_argument("--threads", type=_positive, default=1)
    common.add_argument("--prime-budget", type=_positive, default=PRIME_BUDGET)
    common.add_argument("--brute-cap", type=_positive, default=BRUTE_CAP)
    common.add_argument("--degree-cap", type=_positive, default=DEGREE_CAP)
    common.add_argument("--effort", type=_positive, default=DEFAULT_EFFORT, help="Pollard-rho step budget")
    common.add_argument("--strict", action="store_true", help="exit 3 if any verdict is Unknown")

    parser = argparse.ArgumentParser(prog="pcmono", description="Monogenicity of f(x^p) from recurrence periods.")
    sub = parser.add_subparsers(dest="command", required=True)

    cm = sub.add_parser("check-monogenic", parents=[common], help="Dedekind test for a monic polynomial")
    cm.add_argument("--poly", required=True)

    pe = sub.add_parser("period", parents=[common], help="period of the recurrence modulo m")
    pe.add_argument("--poly", required=True)
    pe.add_argument("--mod", required=True, type=_positive)

    pt = sub.add_parser("pc-test", parents=[common], help="monogenicity of f(x^p) from pi(p), pi(p^2)")
    pt.add_argument("--poly", required=True)
    pt.add_argument("--p", required=True, help="prime, list or range a..b")

    sc = sub.add_parser("scan", parents=[common], help="pc-test over a family")
    sc.add_argument("--family", required=True, choices=sorted(FAMILY_PARAMS))
    sc.add_argument("--p", required=True, help="range of primes, e.g. 2..97")
    for key in sorted({k for keys in FAMILY_PARAMS.values() for k in keys}):
        sc.add_argument(f"--{key}", help="value, list or range a..b")
    sc.add_argument("--all", action="store_true", help="emit every row, not only NotMonogenic ones")

    sub.add_parser("selftest", parents=[common], help="spot checks plus seeded random consistency checks")
    return parser


def _pc_row(report, family="", params=None):
    d = report.to_dict()
    d["family"] = family
    d["params"] = dict(params or {})
    return d


def _params_text(params):
    return ";".join(f"{k}={v}" for k, v in params.items())


def _emit(rows, fmt, out, csv_header=CSV_HEADER):
    if fmt == "json":
        for row in rows:
            out.write(json.dumps(row) + "\n")
    elif fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(csv_header)
        for row in rows:
            flat = dict(row)
            if "params" in flat:
                flat["params"] = _params_text(flat["params"])
            writer.writerow(["" if flat.get(k) is None else flat.get(k) for k in csv_header])
        out.write(buf.getvalue())
    else:
        for row in rows:
            out.write(_text_line(row) + "\n")


def _text_line(row):
    kind = row.get("kind")
    if kind == "pc":
        head = f"{row['family']} {_params_text(row['params'])} ".lstrip() if row.get("family") else ""
        return (
            f"{head}f={row['poly']} p={row['p']} pi(p)={row['pi_p']} pi(p^2)={row['pi_p2']} "
            f"upsilon={row['upsilon_prime']} -> {row['verdict']}"
        )
    if kind == "monogenicity":
        idx = [r["q"] for r in row["critical_primes"] if r["divides_index"]]
        return f"f={row['poly']} disc={row['discriminant']} index primes={idx} -> {row['verdict']}"
    if kind == "selftest":
        return f"{'PASS' if row['ok'] else 'FAIL'} {row['check']} {row['detail']}".rstrip()
    if kind == "period":
        return f"f={row['poly']} pi({row['modulus']})={row['period']} [{row['method']}]"
    return json.dumps(row)


def _cmd_check_monogenic(args):
    f = parse_poly(args.poly, characteristic=True)
    report = is_monogenic(f, None, args.prime_budget, args.effort)
    row = report.to_dict()
    header = ("poly", "discriminant", "verdict")
    return [row], header, report.verdict is Verdict.UNKNOWN, False


def _cmd_period(args):
    f = parse_poly(args.poly, characteristic=True)
    report = period(f, args.mod, args.brute_cap)
    row = {"kind": "period", "poly": f.to_text(), **report.to_dict()}
    return [row], ("poly", "modulus", "period", "method"), False, False


def _pc_options(args):
    return {
        "prime_budget": args.prime_budget,
        "degree_cap": args.degree_cap,
        "brute_cap": args.brute_cap,
        "effort_bound": args.effort,
    }


def _cmd_pc_test(args):
    f = parse_poly(args.poly, characteristic=True)
    reports = [pc_verdict(f, p, **_pc_options(args)) for p in _primes_from(args.p)]
    rows = [_pc_row(r) for r in reports]
    unknown = any(r.verdict is Verdict.UNKNOWN for r in reports)
    return rows, CSV_HEADER, unknown, not all(r.consistent for r in reports)


def _cmd_scan(args):
    ranges = {}
    for key in FAMILY_PARAMS[args.family]:
        value = getattr(args, key)
        if value is None:
            raise MissingParam(f"{args.family} needs --{key}")
        ranges[key] = parse_range(value)
    rows = scan(args.family, ranges, _primes_from(args.p), _pc_options(args), workers=args.threads)
    unknown = any(r.report.verdict is Verdict.UNKNOWN for r in rows)
    inconsistent = not all(r.report.consistent for r in rows)
    if not args.all:
        rows = [r for r in rows if r.report.verdict is Verdict.NOT_MONOGENIC]
    return [r.to_dict() for r in rows], CSV_HEADER, unknown, inconsistent


def _selftest_cases(seed, count=40):
    rng = random.Random(seed)
    cases = []
    while len(cases) < count:
        n = rng.randint(2, 4)
        f = IntPoly([rng.randint(-9, 9) for _ in range(n)] + [1])
        p = rng.choice((2, 3, 5, 7))
        if f.coeffs[0] % p and is_irreducible_fp(reduce_mod(f, p)):
            cases.append((f, p))
    return cases


def _cmd_selftest(args):
    rows = []

    def record(name, ok, detail=""):
        rows.append({"kind": "selftest", "check": name, "ok": bool(ok), "detail": detail})

    intro = IntPoly.from_text("1,21,86,21,1")
    r = pc_verdict(intro, 37)
    record("quartic p=37 periods 137/137", (r.pi_p, r.pi_p2) == (137, 137), f"{r.pi_p}/{r.pi_p2}")
    record("quartic p=37 NotMonogenic", r.verdict is Verdict.NOT_MONOGENIC, r.verdict.value)
    record("x^2-5x-1 period mod 9", period(IntPoly.from_text("1,-5,-1"), 9).period == 8)
    g = IntPoly.from_text("1,-11,-43")
    for p, expect in ((2, Verdict.NOT_MONOGENIC), (3, Verdict.MONOGENIC), (5, Verdict.NOT_MONOGENIC)):
        r = pc_verdict(g, p)
        record(f"x^2-11x-43 p={p}", r.verdict is expect and r.consistent, r.verdict.value)

    for f, p in _selftest_cases(args.seed):
        pi_p = period_mod_p(f, p).period
        pi_p2 = period_mod_p2(f, p, pi_p).period
        ok = pi_p2 in (pi_p, p * pi_p) and galois_ring_test(f, p) == (pi_p2 == pi_p)
        ok = ok and period_bruteforce(f, p * p).period == pi_p2
        record(f"random {f.to_text()} p={p}", ok, f"{pi_p}/{pi_p2}")
    failed = not all(row["ok"] for row in rows)
    return rows, ("check", "ok", "detail"), False, failed


_COMMANDS = {
    "check-monogenic": _cmd_check_monogenic,
    "period": _cmd_period,
    "pc-test": _cmd_pc_test,
    "scan": _cmd_scan,
    "selftest": _cmd_selftest,
}


def _message(exc):
    # KeyError subclasses would otherwise print their message quoted
    return exc.args[0] if isinstance(exc, KeyError) and exc.args else str(exc)


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        rows, header, unknown, inconsistent = _COMMANDS[args.command](args)
    except (ParseError, NotMonic, DegreeTooSmall, MissingParam, UnknownFamily) as exc:
        err.write(f"pcmono: {_message(exc)}\n")
        return EXIT_USAGE
    except PcmonoError as exc:
        err.write(f"pcmono: {type(exc).__name__}: {_message(exc)}\n")
        return EXIT_ERROR
    _emit(rows, args.format, out, header)
    if inconsistent:
        err.write("pcmono: crosscheck disagreement (see crosschecks field)\n")
        return EXIT_INCONSISTENT
    if args.strict and unknown:
        err.write("pcmono: Unknown verdict under --strict\n")
        return EXIT_UNKNOWN
    return EXIT_OK


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
