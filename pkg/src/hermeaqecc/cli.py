"""
Command-line front end.

Subcommands:
    table    parameter sweep over m, CSV or JSON
    params   one parameter record, optionally with the Phi(m) trace
    verify   reduction pipeline vs. linear-algebra oracle
    bench    timing sweep for the baseline / optimized / oracle routes
    gv-scan  entanglement range whose codes all exceed the GV bound

Exit codes: 0 success, 1 usage or infeasibility, 2 verification mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .curve import make_curve, m_perp
from .delta import delta, phi_basis_baseline, phi_basis_optimized
from .fields import is_prime
from .params import eaqecc_params, gv_scan
from .reduction import format_poly

CSV_HEADER = "q,m,n,k_classical,delta,K,c,d_lb,singleton_defect,exceeds_gv,flags"

SUPPORTED_Q = (2, 3, 4, 5, 7, 8, 9, 11, 13, 16)

ORACLE_DEFAULT_MAX_Q = 5
ORACLE_SLOW_MAX_Q = 8


def _factor_prime_power(q: int):
    for p in range(2, q + 1):
        if q % p == 0:
            if not is_prime(p):
                return None
            r = 0
            qq = q
            while qq % p == 0:
                qq //= p
                r += 1
            return (p, r) if qq == 1 else None
    return None


def _curve_for(q: int):
    fact = _factor_prime_power(q)
    if fact is None or q not in SUPPORTED_Q:
        raise ValueError(f"unsupported field size q={q}")
    return make_curve(*fact)


def _row_dict(rec):
    return {
        "q": rec.q,
        "m": rec.m,
        "n": rec.n,
        "k_classical": rec.k_classical,
        "delta": rec.delta,
        "K": rec.K,
        "c": rec.c,
        "d_lb": rec.d_lb,
        "singleton_defect": rec.singleton_defect,
        "exceeds_gv": rec.exceeds_gv,
        "flags": "|".join(rec.flags),
    }


def _row_csv(rec):
    d = _row_dict(rec)
    d["exceeds_gv"] = "true" if d["exceeds_gv"] else "false"
    return ",".join(str(d[name]) for name in CSV_HEADER.split(","))


def cmd_table(args) -> int:
    ctx = _curve_for(args.q)
    max_m = ctx.n + 2 * ctx.g - 2
    lo = 0 if args.min_m is None else args.min_m
    hi = max_m if args.max_m is None else args.max_m
    if not (0 <= lo <= hi <= max_m):
        print(f"invalid m range [{lo}, {hi}]", file=sys.stderr)
        return 1
    rows = [eaqecc_params(ctx, m) for m in range(lo, hi + 1)]
    if args.format == "csv":
        text = CSV_HEADER + "\n" + "".join(_row_csv(r) + "\n" for r in rows)
    else:
        text = json.dumps([_row_dict(r) for r in rows], indent=2) + "\n"
    if args.out:
        try:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"cannot write {args.out}: {exc}", file=sys.stderr)
            return 1
    else:
        sys.stdout.write(text)
    return 0


def cmd_params(args) -> int:
    ctx = _curve_for(args.q)
    if not (0 <= args.m <= ctx.n + 2 * ctx.g - 2):
        print(f"m={args.m} out of range", file=sys.stderr)
        return 1
    rec = eaqecc_params(ctx, args.m)
    print(rec)
    for key, val in _row_dict(rec).items():
        print(f"  {key} = {val}")
    if args.trace:
        m = args.m if args.m <= ctx.m_star else m_perp(ctx, args.m)
        if m <= ctx.q * ctx.q - 2:
            print("trace: shortcut range, no reduction performed")
        else:
            basis = phi_basis_optimized(ctx, m)
            print(f"trace: Phi({m}) orders and materialized bodies")
            for entry in basis.entries:
                body = "" if entry.body is None else f"  phi = {format_poly(entry.body)}"
                print(f"  nu(phi_{entry.index + 1}) = {entry.order}{body}")
    return 0


def cmd_verify(args) -> int:
    max_q = ORACLE_SLOW_MAX_Q if args.slow else ORACLE_DEFAULT_MAX_Q
    if args.q > max_q:
        print(f"oracle infeasible for q={args.q}", file=sys.stderr)
        return 1
    ctx = _curve_for(args.q)
    from . import oracle
    from .curve import ell

    mismatches = []
    for m in range(ctx.n + 2 * ctx.g - 1):
        fast = delta(ctx, m).delta
        slow = oracle.delta_oracle(ctx, m)
        c_fast = ctx.n - ell(ctx, m) - fast
        c_slow = oracle.c_oracle(ctx, m)
        if fast != slow or c_fast != c_slow:
            mismatches.append((m, fast, slow, c_fast, c_slow))
    if mismatches:
        for m, fast, slow, c_fast, c_slow in mismatches:
            print(
                f"mismatch at m={m}: delta {fast} vs {slow}, c {c_fast} vs {c_slow}"
            )
        return 2
    print(f"q={args.q}: all {ctx.n + 2 * ctx.g - 1} values agree")
    return 0


def cmd_bench(args) -> int:
    ctx = _curve_for(args.q)
    if args.algo == "oracle":
        max_q = ORACLE_SLOW_MAX_Q if args.slow else ORACLE_DEFAULT_MAX_Q
        if args.q > max_q:
            print(f"oracle infeasible for q={args.q}", file=sys.stderr)
            return 1
    results = []
    for _ in range(args.repeat):
        reductions = 0
        materialized = 0
        start = time.perf_counter()
        if args.algo == "oracle":
            from . import oracle

            for m in range(ctx.q * ctx.q - 1, ctx.m_star + 1):
                oracle.delta_oracle(ctx, m)
        else:
            builder = (
                phi_basis_baseline if args.algo == "baseline" else phi_basis_optimized
            )
            for m in range(ctx.q * ctx.q - 1, ctx.m_star + 1):
                basis = builder(ctx, m)
                reductions += basis.reduction_count
                materialized += basis.materialized_count
        elapsed = time.perf_counter() - start
        results.append(
            {
                "q": args.q,
                "algo": args.algo,
                "seconds": elapsed,
                "reduction_count": reductions,
                "materialized_count": materialized,
            }
        )
    if args.format == "json":
        print(json.dumps(results, indent=2))
    else:
        for res in results:
            print(
                f"q={res['q']} algo={res['algo']} time={res['seconds']:.3f}s "
                f"reductions={res['reduction_count']} "
                f"materialized={res['materialized_count']}"
            )
    return 0


def cmd_gv_scan(args) -> int:
    ctx = _curve_for(args.q)
    c_min, c_max = gv_scan(ctx)
    print(f"{ctx.q} {ctx.n} {c_min}--{c_max}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hermeaqecc",
        description="Parameters of entanglement-assisted quantum codes "
        "from one-point Hermitian codes",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_table = sub.add_parser("table", help="parameter sweep over m")
    p_table.add_argument("--q", type=int, required=True)
    p_table.add_argument("--format", choices=("csv", "json"), default="csv")
    p_table.add_argument("--out")
    p_table.add_argument("--min-m", type=int, dest="min_m")
    p_table.add_argument("--max-m", type=int, dest="max_m")
    p_table.set_defaults(func=cmd_table)

    p_params = sub.add_parser("params", help="one parameter record")
    p_params.add_argument("--q", type=int, required=True)
    p_params.add_argument("--m", type=int, required=True)
    p_params.add_argument("--trace", action="store_true")
    p_params.set_defaults(func=cmd_params)

    p_verify = sub.add_parser("verify", help="fast path vs. oracle")
    p_verify.add_argument("--q", type=int, required=True)
    p_verify.add_argument("--slow", action="store_true")
    p_verify.set_defaults(func=cmd_verify)

    p_bench = sub.add_parser("bench", help="timing sweep")
    p_bench.add_argument("--q", type=int, required=True)
    p_bench.add_argument(
        "--algo", choices=("baseline", "optimized", "oracle"), required=True
    )
    p_bench.add_argument("--repeat", type=int, default=1)
    p_bench.add_argument("--slow", action="store_true")
    p_bench.add_argument("--format", choices=("text", "json"), default="text")
    p_bench.set_defaults(func=cmd_bench)

    p_scan = sub.add_parser("gv-scan", help="GV-exceeding entanglement range")
    p_scan.add_argument("--q", type=int, required=True)
    p_scan.set_defaults(func=cmd_gv_scan)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
