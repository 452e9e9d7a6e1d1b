"""Benchmark harness: seeded random-walk curves and timing grids.

Rows are plain dicts with a stable schema (algorithm, n, m, d, phase,
trial, time_ms, probes, value) suitable for CSV export; result payloads
are deterministic for a fixed seed, times of course are not.
"""
from __future__ import annotations

import csv
import time
from typing import Iterable, List, Sequence, Union

import numpy as np

from . import oracle1d
from .approx import MatchMode, approx_value_detailed
from .geometry import Norm, PolyCurve
from .reference import discrete_frechet_exact

__all__ = [
    "seeded_walk",
    "bench_oracle",
    "bench_approx3",
    "bench_exact",
    "write_rows_csv",
    "CSV_FIELDS",
]

CSV_FIELDS = ["algorithm", "n", "m", "d", "phase", "trial", "time_ms", "probes", "value"]


def seeded_walk(n: int, d: int = 1, seed: Union[int, Sequence[int]] = 0) -> PolyCurve:
    """Random-walk curve with i.i.d. uniform steps in [-1, 1] per coordinate."""
    rng = np.random.default_rng(seed)
    steps = rng.uniform(-1.0, 1.0, size=(n, d))
    return PolyCurve(np.cumsum(steps, axis=0))


def _row(algorithm, n, m, d, phase, trial, time_ms, probes, value):
    return {
        "algorithm": algorithm,
        "n": int(n),
        "m": int(m),
        "d": int(d),
        "phase": phase,
        "trial": int(trial),
        "time_ms": float(time_ms),
        "probes": int(probes),
        "value": value,
    }


def bench_oracle(
    n_grid: Iterable[int], m: int, trials: int = 3, seed: int = 0
) -> List[dict]:
    """Build/query timing rows for the 1D distance oracle."""
    rows = []
    for n in n_grid:
        for trial in range(trials):
            P = seeded_walk(int(n), 1, seed=[seed, int(n), trial, 0])
            t0 = time.perf_counter()
            handle = oracle1d.preprocess(P, m)
            t1 = time.perf_counter()
            rows.append(
                _row(
                    "oracle1d", n, m, 1, "build", trial,
                    (t1 - t0) * 1e3, handle.build_stats.get("greedy_probes", 0),
                    handle.cs.delta_m,
                )
            )
            Q = seeded_walk(m, 1, seed=[seed, int(n), trial, 1])
            t0 = time.perf_counter()
            interval, stats = oracle1d.query(handle, Q, with_stats=True)
            t1 = time.perf_counter()
            rows.append(
                _row(
                    "oracle1d", n, m, 1, "query", trial,
                    (t1 - t0) * 1e3, stats["probes"], interval.lo,
                )
            )
    return rows


def bench_approx3(
    n_grid: Iterable[int],
    m_grid: Iterable[int],
    eps: float = 0.1,
    trials: int = 3,
    seed: int = 0,
    d: int = 1,
    norm: Union[Norm, str] = Norm.L2,
    mode: Union[MatchMode, str] = MatchMode.CONTINUOUS,
) -> List[dict]:
    """Timing rows for the (3+eps)-approximation; the O(n) simplification
    and the O(m^2) decision on the simplified pair are reported as
    separate phases (summed over the value-search probes)."""
    rows = []
    for n in n_grid:
        for m in m_grid:
            for trial in range(trials):
                P = seeded_walk(int(n), d, seed=[seed, int(n), int(m), trial, 0])
                Q = seeded_walk(int(m), d, seed=[seed, int(n), int(m), trial, 1])
                t0 = time.perf_counter()
                interval, info = approx_value_detailed(P, Q, eps, norm, mode)
                t1 = time.perf_counter()
                rows.append(
                    _row(
                        "approx3", n, m, d, "total", trial,
                        (t1 - t0) * 1e3, info["probes"], interval.lo,
                    )
                )
                rows.append(
                    _row(
                        "approx3", n, m, d, "simplify", trial,
                        info["simplify_s"] * 1e3, info["probes"], interval.lo,
                    )
                )
                rows.append(
                    _row(
                        "approx3", n, m, d, "decide", trial,
                        info["decide_s"] * 1e3, info["probes"], interval.hi,
                    )
                )
    return rows


def bench_exact(
    n_grid: Iterable[int],
    m_grid: Iterable[int],
    trials: int = 3,
    seed: int = 0,
    d: int = 1,
    norm: Union[Norm, str] = Norm.L2,
) -> List[dict]:
    """Timing rows for the exact discrete reference DP."""
    rows = []
    for n in n_grid:
        for m in m_grid:
            for trial in range(trials):
                P = seeded_walk(int(n), d, seed=[seed, int(n), int(m), trial, 0])
                Q = seeded_walk(int(m), d, seed=[seed, int(n), int(m), trial, 1])
                t0 = time.perf_counter()
                value = discrete_frechet_exact(P, Q, norm)
                t1 = time.perf_counter()
                rows.append(
                    _row(
                        "discrete-exact", n, m, d, "value", trial,
                        (t1 - t0) * 1e3, 0, value,
                    )
                )
    return rows


def write_rows_csv(rows: List[dict], path) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.DictWriter(fh, fieldnames=CSV_FIELDS)
        writer.writeheader()
        for row in rows:
            writer.writerow(row)
