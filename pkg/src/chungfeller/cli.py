"""Command-line front end.

    sojourn dist     --p 1/3 --n 6 --cond bridge
    sojourn verify   --p 1/3,1/2 --n-max 12 --suites routes,oracle
    sojourn limit    --rho -1 --t 1 --N 500 2000 --grid 0.1:0.9:9
    sojourn simulate --p 1/2 --n 4 --trials 1000000 --seed 7

Exit status: 0 on success, 1 when a verification check fails, 2 on bad usage.
Data goes to stdout, diagnostics to stderr.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from fractions import Fraction

from . import asymptotics as asy
from .conditioning import Conditioning
from .exceptions import DomainError, OracleCapError
from .oracle import enumerate_paths, simulate
from .sojourn import mass_table
from .verify import SUITES, run_suites
from .walk_laws import WalkParams, parse_rational

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _params(text: str) -> WalkParams:
    try:
        return WalkParams(parse_rational(text))
    except DomainError as e:
        raise UsageError(str(e)) from None


def _cond(text: str) -> Conditioning:
    try:
        return Conditioning.parse(text)
    except DomainError as e:
        raise UsageError(str(e)) from None


def _csv_text(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _record(k: int, n: int, cond: Conditioning, mass: Fraction) -> dict:
    return {
        "k": k,
        "n": n,
        "cond": cond.tag,
        "mass_num": mass.numerator,
        "mass_den": mass.denominator,
        "mass_float": float(mass),
    }


RECORD_FIELDS = ["k", "n", "cond", "mass_num", "mass_den", "mass_float"]


def cmd_dist(args, out) -> int:
    P = _params(args.p)
    cond = _cond(args.cond)
    if args.n < 0:
        raise UsageError("--n must be >= 0")
    if args.method == "oracle":
        table = enumerate_paths(P, args.n, cond)
    else:
        table = mass_table(P, args.n, cond, method=args.method)
    records = [_record(k, args.n, cond, m) for k, m in enumerate(table.masses)]
    if args.format == "json":
        doc = {
            "p": f"{P.p.numerator}/{P.p.denominator}",
            "n": args.n,
            "cond": cond.tag,
            "total_target": [table.total_target.numerator, table.total_target.denominator],
            "rows": records,
        }
        out.write(json.dumps(doc) + "\n")
    else:
        out.write(_csv_text(RECORD_FIELDS, ([r[f] for f in RECORD_FIELDS] for r in records)))
    return EXIT_OK


def cmd_verify(args, out) -> int:
    ps = [_params(x) for item in args.p for x in item.split(",") if x.strip()]
    suites = [s.strip() for s in args.suites.split(",") if s.strip()]
    bad = [s for s in suites if s not in SUITES]
    if bad:
        raise UsageError(f"unknown suites {bad}; choose from {', '.join(SUITES)}")
    if args.n_max < 0:
        raise UsageError("--n-max must be >= 0")
    results = run_suites(ps, args.n_max, suites)
    if args.format == "json":
        out.write(json.dumps([r.__dict__ for r in results]) + "\n")
    else:
        for r in results:
            out.write(r.line() + "\n")
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAIL


def _grid(text: str | None, t: float) -> list[float]:
    if text is None:
        return [t * i / 10 for i in range(1, 10)]
    try:
        lo, hi, m = text.split(":")
        lo, hi, m = float(lo), float(hi), int(m)
    except ValueError:
        raise UsageError(f"grid must look like lo:hi:count, got {text!r}") from None
    if m < 1 or not 0 < lo <= hi < t:
        raise UsageError("grid must satisfy 0 < lo <= hi < t and count >= 1")
    if m == 1:
        return [lo]
    return [lo + (hi - lo) * i / (m - 1) for i in range(m)]


def cmd_limit(args, out) -> int:
    Ns = [int(x) for item in args.N for x in str(item).split(",") if x.strip()]
    try:
        lp = asy.LimitParams(args.rho, args.t)
        for N in Ns:
            asy.p_of_N(args.rho, N)
    except DomainError as e:
        raise UsageError(str(e)) from None
    grid = _grid(args.grid, args.t)
    reports = [asy.convergence_experiment(args.rho, args.t, N, grid) for N in Ns]
    dens = [
        {
            "s": s,
            "density": asy.sojourn_density(lp, s),
            "density_minus": asy.conditioned_density(lp, s, "-"),
            "density_plus": asy.conditioned_density(lp, s, "+"),
        }
        for s in grid
    ]
    total = [{"s": s, "density": asy.total_sojourn_density(args.rho, s)} for s in grid] if args.rho < 0 else None
    if args.format == "json":
        doc = {"rho": args.rho, "t": args.t, "convergence": [r.to_dict() for r in reports], "density": dens}
        if total is not None:
            doc["total_sojourn_density"] = total
        out.write(json.dumps(doc) + "\n")
        return EXIT_OK
    blocks = []
    for r in reports:
        blocks.append(f"# convergence N={r.N} n={r.n} p_N={r.p_N!r} sup_gap={r.sup_gap!r}\n" + r.to_csv())
    fields = ["s", "density", "density_minus", "density_plus"]
    blocks.append("# density\n" + _csv_text(fields, ([repr(d[f]) for f in fields] for d in dens)))
    if total is not None:
        blocks.append("# total_sojourn_density\n" + _csv_text(["s", "density"], ([repr(d["s"]), repr(d["density"])] for d in total)))
    out.write("\n".join(blocks))
    return EXIT_OK


def cmd_simulate(args, out) -> int:
    P = _params(args.p)
    cond = _cond(args.cond)
    if args.n < 0 or args.trials < 1:
        raise UsageError("need --n >= 0 and --trials >= 1")
    emp = simulate(P, args.n, args.trials, args.seed, cond)
    exact = mass_table(P, args.n, cond).masses
    rows = []
    for k, (f, m) in enumerate(zip(emp.frequencies, exact)):
        rows.append(
            {
                "k": k,
                "empirical": f,
                "exact_num": m.numerator,
                "exact_den": m.denominator,
                "exact_float": float(m),
                "abs_dev": abs(f - float(m)),
            }
        )
    max_dev = max(r["abs_dev"] for r in rows)
    if args.format == "json":
        doc = {
            "p": f"{P.p.numerator}/{P.p.denominator}",
            "n": args.n,
            "cond": cond.tag,
            "trials": args.trials,
            "seed": args.seed,
            "retained": emp.retained,
            "max_abs_dev": max_dev,
            "rows": rows,
        }
        out.write(json.dumps(doc) + "\n")
    else:
        fields = ["k", "empirical", "exact_num", "exact_den", "exact_float", "abs_dev"]
        out.write(_csv_text(fields, ([r[f] if isinstance(r[f], int) else repr(r[f]) for f in fields] for r in rows)))
        print(f"retained={emp.retained} trials={args.trials} max_abs_dev={max_dev!r}", file=sys.stderr)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="sojourn", description="Sojourn-time laws of Bernoulli random walks.")
    sub = ap.add_subparsers(dest="command", required=True)

    def fmt(p):
        p.add_argument("--format", choices=["csv", "json"], default="csv")

    d = sub.add_parser("dist", help="exact law of T_n on {S_n in F}")
    d.add_argument("--p", required=True, help="step-up probability as num/den")
    d.add_argument("--n", type=int, required=True)
    d.add_argument("--cond", default="free", help="free, bridge, positive, negative or pinned:J")
    d.add_argument("--method", choices=["closed", "recursive", "oracle"], default="closed")
    fmt(d)

    v = sub.add_parser("verify", help="run the identity suites")
    v.add_argument("--p", action="append", required=True, help="num/den; repeat or comma-separate")
    v.add_argument("--n-max", type=int, default=12)
    v.add_argument("--suites", default=",".join(SUITES))
    fmt(v)

    lim = sub.add_parser("limit", help="limit densities and finite-N convergence")
    lim.add_argument("--rho", type=float, required=True)
    lim.add_argument("--t", type=float, default=1.0)
    lim.add_argument("--N", nargs="+", default=["2000"])
    lim.add_argument("--grid", default=None, help="lo:hi:count, default 0.1t:0.9t:9")
    fmt(lim)

    s = sub.add_parser("simulate", help="seeded Monte Carlo against the exact law")
    s.add_argument("--p", required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--trials", type=int, default=100_000)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--cond", default="free")
    fmt(s)
    return ap


_COMMANDS = {"dist": cmd_dist, "verify": cmd_verify, "limit": cmd_limit, "simulate": cmd_simulate}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args, sys.stdout)
    except (UsageError, DomainError, OracleCapError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
