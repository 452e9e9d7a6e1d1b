"""Command-line interface.

Verbs: dist, oracle build|query, hard gen|certify, bench oracle|approx3|exact.
Reports are emitted as JSON on stdout; benchmark rows go to --out as CSV
(schema: algorithm,n,m,d,phase,trial,time_ms,probes,value).  Exit codes:
0 success, 2 input/contract error, 3 certification failure.  FRECHET_SEED
in the environment overrides --seed.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import time

from . import bench as benchmod
from . import hardgen, oracle1d
from .approx import approx_value_detailed
from .curveio import read_curve, write_curve
from .reference import continuous_frechet_decide, discrete_frechet_exact

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_CERTIFY = 3


def _emit(report: dict):
    json.dump(report, sys.stdout, indent=2, default=str)
    sys.stdout.write("\n")


def _seed(args) -> int:
    env = os.environ.get("FRECHET_SEED")
    if env is not None:
        return int(env)
    return args.seed


def _grid(text: str):
    return [int(float(tok)) for tok in text.split(",") if tok.strip()]


def cmd_dist(args) -> int:
    P = read_curve(args.curve_p)
    Q = read_curve(args.curve_q)
    report = {
        "command": "dist",
        "mode": args.mode,
        "norm": args.norm,
        "n": P.n,
        "m": Q.n,
        "d": P.dim,
    }
    t0 = time.perf_counter()
    if args.mode == "discrete-exact":
        report["value"] = discrete_frechet_exact(P, Q, args.norm)
    elif args.mode == "continuous-decide":
        if args.delta is None:
            raise ValueError("--delta is required for continuous-decide")
        report["delta"] = args.delta
        report["decision"] = continuous_frechet_decide(P, Q, args.delta, args.norm)
    elif args.mode == "approx3":
        if args.eps is None:
            raise ValueError("--eps is required for approx3")
        interval, info = approx_value_detailed(P, Q, args.eps, args.norm, args.frechet)
        report["eps"] = args.eps
        report["frechet"] = args.frechet
        report["interval"] = {"lo": interval.lo, "hi": interval.hi}
        report["probes"] = info["probes"]
        report["zero_floor"] = info["zero_floor"]
    report["time_ms"] = (time.perf_counter() - t0) * 1e3
    _emit(report)
    return EXIT_OK


def cmd_oracle_build(args) -> int:
    P = read_curve(args.infile)
    t0 = time.perf_counter()
    handle = oracle1d.preprocess(P, args.m)
    build_ms = (time.perf_counter() - t0) * 1e3
    with open(args.out, "wb") as fh:
        fh.write(oracle1d.serialize(handle))
    _emit(
        {
            "command": "oracle build",
            "n": handle.n,
            "m": handle.m,
            "delta_m": handle.cs.delta_m,
            "runs": handle.cs.runs,
            "out": args.out,
            "time_ms": build_ms,
            "probes": handle.build_stats.get("greedy_probes", 0),
        }
    )
    return EXIT_OK


def cmd_oracle_query(args) -> int:
    with open(args.oracle, "rb") as fh:
        handle = oracle1d.deserialize(fh.read())
    Q = read_curve(args.query)
    t0 = time.perf_counter()
    interval, stats = oracle1d.query(handle, Q, with_stats=True)
    query_ms = (time.perf_counter() - t0) * 1e3
    _emit(
        {
            "command": "oracle query",
            "n": handle.n,
            "m": handle.m,
            "query_complexity": Q.n,
            "interval": {"lo": interval.lo, "hi": interval.hi},
            "time_ms": query_ms,
            "probes": stats["probes"],
        }
    )
    return EXIT_OK


def cmd_hard_gen(args) -> int:
    with open(args.ov, "r", encoding="utf-8") as fh:
        payload = json.load(fh)
    try:
        inst = hardgen.OVInstance(
            d=int(payload["d"]),
            U=tuple(tuple(v) for v in payload["U"]),
            V=tuple(tuple(v) for v in payload["V"]),
        )
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed OV instance file: {exc}") from exc
    P, Q = hardgen.build_hard_pair_1d(inst)
    write_curve(args.out_p, P)
    write_curve(args.out_q, Q)
    pair = hardgen.ov_brute(inst)
    sidecar = {
        "orthogonal_pair": list(pair) if pair else None,
        "certified_gap": True,
    }
    meta_path = args.out_meta or (args.out_p + ".meta.json")
    with open(meta_path, "w", encoding="utf-8") as fh:
        json.dump(sidecar, fh, indent=2)
    _emit(
        {
            "command": "hard gen",
            "n": inst.n,
            "m": inst.m,
            "d": inst.d,
            "curve_sizes": {"P": P.n, "Q": Q.n},
            "orthogonal_pair": sidecar["orthogonal_pair"],
            "out_p": args.out_p,
            "out_q": args.out_q,
            "out_meta": meta_path,
        }
    )
    return EXIT_OK


def cmd_hard_certify(args) -> int:
    t0 = time.perf_counter()
    report = hardgen.certify_gadgets(limits=(args.max_n, args.max_m, args.max_d))
    _emit(
        {
            "command": "hard certify",
            "limits": {"n": args.max_n, "m": args.max_m, "d": args.max_d},
            "instances_checked": report.instances_checked,
            "violations": report.violations,
            "ok": report.ok,
            "time_ms": (time.perf_counter() - t0) * 1e3,
        }
    )
    return EXIT_OK if report.ok else EXIT_CERTIFY


def cmd_bench(args) -> int:
    seed = _seed(args)
    if args.target == "oracle":
        rows = benchmod.bench_oracle(_grid(args.n_grid), args.m, args.trials, seed)
    elif args.target == "approx3":
        rows = benchmod.bench_approx3(
            _grid(args.n_grid), _grid(args.m_grid), args.eps, args.trials, seed,
            d=args.d, norm=args.norm, mode=args.frechet,
        )
    else:
        rows = benchmod.bench_exact(
            _grid(args.n_grid), _grid(args.m_grid), args.trials, seed,
            d=args.d, norm=args.norm,
        )
    if args.out:
        benchmod.write_rows_csv(rows, args.out)
    _emit(
        {
            "command": f"bench {args.target}",
            "rows": len(rows),
            "seed": seed,
            "out": args.out,
            "csv_fields": benchmod.CSV_FIELDS,
        }
    )
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="frechetkit",
        description=__doc__,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p_dist = sub.add_parser("dist", help="distance between two curve files")
    p_dist.add_argument("curve_p")
    p_dist.add_argument("curve_q")
    p_dist.add_argument(
        "--mode", required=True,
        choices=["discrete-exact", "continuous-decide", "approx3"],
    )
    p_dist.add_argument("--norm", default="l2", choices=["l1", "l2", "linf"])
    p_dist.add_argument("--delta", type=float, help="threshold for continuous-decide")
    p_dist.add_argument("--eps", type=float, help="approximation slack for approx3")
    p_dist.add_argument(
        "--frechet", default="continuous", choices=["continuous", "discrete"],
        help="distance variant for approx3",
    )
    p_dist.set_defaults(func=cmd_dist)

    p_oracle = sub.add_parser("oracle", help="1D discrete-distance oracle")
    oracle_sub = p_oracle.add_subparsers(dest="action", required=True)
    p_build = oracle_sub.add_parser("build", help="preprocess a 1D curve")
    p_build.add_argument("--m", type=int, required=True, help="query complexity budget")
    p_build.add_argument("--in", dest="infile", required=True, help="1D curve file")
    p_build.add_argument("--out", required=True, help="serialized oracle (JSON)")
    p_build.set_defaults(func=cmd_oracle_build)
    p_query = oracle_sub.add_parser("query", help="query a built oracle")
    p_query.add_argument("--oracle", required=True, help="serialized oracle file")
    p_query.add_argument("--query", required=True, help="1D query curve file")
    p_query.set_defaults(func=cmd_oracle_query)

    p_hard = sub.add_parser("hard", help="hard instance generation")
    hard_sub = p_hard.add_subparsers(dest="action", required=True)
    p_gen = hard_sub.add_parser("gen", help="build a hard pair from an OV file")
    p_gen.add_argument("--ov", required=True, help='JSON {"d":..,"U":[[..]],"V":[[..]]}')
    p_gen.add_argument("--out-p", required=True)
    p_gen.add_argument("--out-q", required=True)
    p_gen.add_argument("--out-meta", default=None, help="sidecar path (default: <out-p>.meta.json)")
    p_gen.set_defaults(func=cmd_hard_gen)
    p_cert = hard_sub.add_parser("certify", help="exhaustive gadget certification")
    p_cert.add_argument("--max-n", type=int, default=3)
    p_cert.add_argument("--max-m", type=int, default=3)
    p_cert.add_argument("--max-d", type=int, default=3)
    p_cert.set_defaults(func=cmd_hard_certify)

    p_bench = sub.add_parser("bench", help="timing grids (CSV output)")
    p_bench.add_argument("target", choices=["oracle", "approx3", "exact"])
    p_bench.add_argument("--n-grid", default="1000,10000", help="comma separated sizes")
    p_bench.add_argument("--m-grid", default="32", help="comma separated sizes")
    p_bench.add_argument("--m", type=int, default=64, help="budget for bench oracle")
    p_bench.add_argument("--trials", type=int, default=3)
    p_bench.add_argument("--seed", type=int, default=0)
    p_bench.add_argument("--eps", type=float, default=0.1)
    p_bench.add_argument("--d", type=int, default=1)
    p_bench.add_argument("--norm", default="l2", choices=["l1", "l2", "linf"])
    p_bench.add_argument("--frechet", default="continuous", choices=["continuous", "discrete"])
    p_bench.add_argument("--out", default=None, help="CSV output path")
    p_bench.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
