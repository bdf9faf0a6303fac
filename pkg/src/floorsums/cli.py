"""Command-line surface: compute, verify, frobenius, bench.

All numeric I/O is decimal strings (rationals as "num/den" in lowest terms)
so values survive JSON consumers bit-exactly.  Exit codes: 0 ok, 1
verification mismatch, 2 invalid input.
"""

import argparse
import ast
import json
import math
import random
import sys
import time
from fractions import Fraction

from . import frobenius as frob
from .cross_sum import full_report, t2
from .errors import InvalidArgumentError
from .floor_sum import floor_sum, remainder_sum
from .models import Instance
from .numeric import sum_squares
from .oracle import oracle_report
from .square_sum import s_value, t1
from .trace import Trace

TARGETS = ("q", "r", "r2", "t1", "t2", "t3", "ir", "qr", "s")
DEFAULT_H_GRID = ("0", "1", "a//2", "a-1", "a", "2*a+3")


def _decimal_int(text: str) -> int:
    try:
        return int(text, 10)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a decimal integer: {text!r}")


def _fmt(value) -> str:
    """Integers and rationals as decimal strings; "num/den" when den > 1."""
    if isinstance(value, Fraction) and value.denominator != 1:
        return f"{value.numerator}/{value.denominator}"
    return str(int(value))


def _trace_json(trace: Trace, target: str) -> list:
    return [
        {
            "target": target,
            "rule": step.rule,
            "a": str(step.a),
            "b": str(step.b),
            "h": str(step.h),
            "derived": {k: str(v) for k, v in step.derived.items()},
            "contribution": _fmt(step.contribution),
        }
        for step in trace.steps
    ]


def _eval_h_token(token: str, a: int) -> int:
    """Evaluate an h-grid token: an integer expression in the variable a."""
    try:
        node = ast.parse(token.strip(), mode="eval").body
    except SyntaxError:
        raise InvalidArgumentError(f"bad h-grid token: {token!r}") from None

    def ev(n):
        if isinstance(n, ast.Constant) and isinstance(n.value, int):
            return n.value
        if isinstance(n, ast.Name) and n.id == "a":
            return a
        if isinstance(n, ast.UnaryOp) and isinstance(n.op, ast.USub):
            return -ev(n.operand)
        if isinstance(n, ast.BinOp):
            left, right = ev(n.left), ev(n.right)
            if isinstance(n.op, ast.Add):
                return left + right
            if isinstance(n.op, ast.Sub):
                return left - right
            if isinstance(n.op, ast.Mult):
                return left * right
            if isinstance(n.op, (ast.Div, ast.FloorDiv)):
                return left // right
        raise InvalidArgumentError(f"bad h-grid token: {token!r}")

    return max(ev(node), 0)


def cmd_compute(args) -> int:
    inst = Instance(args.a, args.b, args.h)
    canon, normalized = inst.canonical()
    a, b, h = canon.a, canon.b, canon.h

    targets = TARGETS if args.targets is None else tuple(args.targets.split(","))
    for target in targets:
        if target not in TARGETS:
            raise InvalidArgumentError(f"unknown target {target!r}")
    wanted = set(targets)

    sums = {}
    trace_rows = []
    q_sum = s = None
    if wanted & {"q", "r", "t1", "r2"}:
        q_sum = floor_sum(canon)
    if wanted & {"s", "t1", "r2"}:
        s_trace = Trace() if args.trace else None
        s = s_value(a, b, h, s_trace)
        if args.trace:
            trace_rows += _trace_json(s_trace, "s")
    t2v = t3v = None
    if wanted & {"t2", "t3", "ir", "qr"}:
        t2_trace = Trace() if args.trace else None
        t2v = t2(a, b, h, t2_trace)
        if args.trace:
            trace_rows += _trace_json(t2_trace, "t2")
    if wanted & {"t3", "qr"}:
        from .cross_sum import t3 as _t3

        t3v = _t3(a, b, h)

    for target in targets:
        if target == "q":
            sums["q"] = _fmt(q_sum)
        elif target == "r":
            sums["r"] = _fmt(remainder_sum(canon))
        elif target == "r2":
            t1v = Fraction(2 * s - (a + 2) * q_sum, a)
            sums["r2"] = _fmt(t1v * a * a)
        elif target == "t1":
            sums["t1"] = _fmt(Fraction(2 * s - (a + 2) * q_sum, a))
        elif target == "t2":
            sums["t2"] = _fmt(t2v)
        elif target == "t3":
            sums["t3"] = _fmt(t3v)
        elif target == "ir":
            sums["ir"] = _fmt(b * sum_squares(h) - a * t2v)
        elif target == "qr":
            sums["qr"] = _fmt(b * t2v - a * t3v)
        elif target == "s":
            sums["s"] = _fmt(s)

    doc = {
        "a": str(args.a),
        "b": str(args.b),
        "h": str(args.h),
        "normalized": normalized,
        "sums": sums,
    }
    if args.trace:
        doc["trace"] = trace_rows

    if args.format == "json":
        print(json.dumps(doc))
    else:
        if normalized:
            print(f"# normalized to a={a} b={b}")
        for key, value in sums.items():
            print(f"{key} = {value}")
        if args.trace:
            for row in trace_rows:
                derived = " ".join(f"{k}={v}" for k, v in row["derived"].items())
                print(
                    f"# [{row['target']}] {row['rule']} a={row['a']} b={row['b']} "
                    f"h={row['h']} {derived} contribution={row['contribution']}"
                )
    return 0


def _report_fields(report):
    return {
        "q": report.q_sum,
        "r": report.r_sum,
        "r2": report.r2_sum,
        "t1": report.t1,
        "t2": report.t2,
        "t3": report.t3,
        "ir": report.ir_sum,
        "qr": report.qr_sum,
        "s": report.s,
    }


def _verify_one(a: int, b: int, h: int) -> bool:
    inst = Instance(a, b, h)
    fast = _report_fields(full_report(inst))
    slow = _report_fields(oracle_report(inst))
    ok = True
    for key in fast:
        if fast[key] != slow[key]:
            ok = False
            print(
                f"MISMATCH a={a} b={b} h={h} field={key}: "
                f"fast={_fmt(fast[key])} oracle={_fmt(slow[key])}"
            )
    return ok


def cmd_verify(args) -> int:
    single = args.a is not None or args.b is not None or args.h is not None
    if single and None in (args.a, args.b, args.h):
        raise InvalidArgumentError("single-instance verify needs --a, --b and --h")
    if single and args.max is not None:
        raise InvalidArgumentError("give either --a/--b/--h or --max, not both")
    if not single and args.max is None:
        raise InvalidArgumentError("verify needs --a/--b/--h or --max")

    grid = DEFAULT_H_GRID if args.h_grid is None else tuple(args.h_grid.split(","))
    checked = 0
    failed = 0
    if single:
        checked = 1
        failed = 0 if _verify_one(args.a, args.b, args.h) else 1
    else:
        for a in range(2, args.max + 1):
            for b in range(2, args.max + 1):
                if math.gcd(a, b) != 1:
                    continue
                for token in grid:
                    h = _eval_h_token(token, a)
                    checked += 1
                    if not _verify_one(a, b, h):
                        failed += 1
    print(f"verified {checked} instance(s), {failed} mismatch(es)")
    return 0 if failed == 0 else 1


def cmd_frobenius(args) -> int:
    summary = frob.summary(args.a, args.b)
    doc = {
        "a": str(args.a),
        "b": str(args.b),
        "nonrep_count": str(summary.nonrep_count),
        "nonrep_sum": str(summary.nonrep_sum),
    }
    if args.n is not None:
        doc["n"] = str(args.n)
        doc["four_var_count"] = str(frob.four_var_count(args.a, args.b, args.n))
    if args.format == "json":
        print(json.dumps(doc))
    else:
        for key, value in doc.items():
            print(f"{key} = {value}")
    return 0


def _random_coprime(bits: int, rng: random.Random) -> tuple[int, int]:
    while True:
        a = rng.getrandbits(bits) | (1 << (bits - 1)) if bits > 1 else rng.randrange(2, 4)
        b = rng.getrandbits(bits) | (1 << (bits - 1)) if bits > 1 else 1
        if a < 2 or b < 1 or b >= a:
            continue
        if math.gcd(a, b) == 1:
            return a, b


def cmd_bench(args) -> int:
    try:
        bit_sizes = [int(tok) for tok in args.bits.split(",")]
    except ValueError:
        raise InvalidArgumentError(f"bad --bits list: {args.bits!r}") from None
    if args.reps < 1 or any(bits < 2 for bits in bit_sizes):
        raise InvalidArgumentError("--reps must be >= 1 and all --bits >= 2")

    rng = random.Random(args.seed)
    rows = []
    mismatches = 0
    for bits in bit_sizes:
        for rep in range(args.reps):
            a, b = _random_coprime(bits, rng)
            h = rng.randrange(1, a)

            tr1 = Trace()
            start = time.perf_counter_ns()
            t1_value = t1(a, b, h, tr1)
            t1_nanos = time.perf_counter_ns() - start
            rows.append((bits, rep, args.seed, "t1", len(tr1.steps), t1_nanos))

            tr2 = Trace()
            start = time.perf_counter_ns()
            t2_value = t2(a, b, h, tr2)
            t2_nanos = time.perf_counter_ns() - start
            rows.append((bits, rep, args.seed, "t2", tr2.total_steps(), t2_nanos))

            if h <= 10**6:
                start = time.perf_counter_ns()
                ref = oracle_report(Instance(a, b, h))
                oracle_nanos = time.perf_counter_ns() - start
                rows.append((bits, rep, args.seed, "oracle", h, oracle_nanos))
                if ref.t1 != t1_value or ref.t2 != t2_value:
                    mismatches += 1
                    print(f"MISMATCH vs oracle at bits={bits} rep={rep} a={a} b={b} h={h}",
                          file=sys.stderr)

    if args.format == "csv":
        print("bits,rep,seed,target,steps,nanos")
        for row in rows:
            print(",".join(str(field) for field in row))
    else:
        doc = [
            {
                "bits": str(bits),
                "rep": str(rep),
                "seed": str(seed),
                "target": target,
                "steps": str(steps),
                "nanos": str(nanos),
            }
            for bits, rep, seed, target, steps, nanos in rows
        ]
        print(json.dumps(doc))
    return 0 if mismatches == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="floorsums",
        description="Exact power sums of floors/remainders of i*b/a in log time.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="compute the requested sums for one instance")
    p.add_argument("--a", type=_decimal_int, required=True)
    p.add_argument("--b", type=_decimal_int, required=True)
    p.add_argument("--h", type=_decimal_int, required=True)
    p.add_argument("--targets", help=f"comma-separated subset of {','.join(TARGETS)}")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--trace", action="store_true", help="include the recursion trace")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("verify", help="compare the fast paths against the brute-force oracle")
    p.add_argument("--a", type=_decimal_int)
    p.add_argument("--b", type=_decimal_int)
    p.add_argument("--h", type=_decimal_int)
    p.add_argument("--max", type=int, help="sweep all coprime pairs 2 <= a,b <= MAX")
    p.add_argument("--h-grid", dest="h_grid",
                   help="comma-separated h expressions in a (default 0,1,a//2,a-1,a,2*a+3)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("frobenius", help="nonrepresentable count/sum and 4-variable solution count")
    p.add_argument("--a", type=_decimal_int, required=True)
    p.add_argument("--b", type=_decimal_int, required=True)
    p.add_argument("--n", type=_decimal_int)
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(func=cmd_frobenius)

    p = sub.add_parser("bench", help="scaling benchmark of the fast paths")
    p.add_argument("--bits", default="32,64,128", help="comma-separated bit sizes")
    p.add_argument("--reps", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=("json", "csv"), default="csv")
    p.set_defaults(func=cmd_bench)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InvalidArgumentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
