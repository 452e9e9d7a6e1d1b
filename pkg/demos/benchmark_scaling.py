"""Desk-scale scaling measurements.

Builds the oracle over a size grid and runs the (3+eps) value search,
printing per-phase medians; the CLI exposes the same harness as
`frechetkit bench oracle|approx3|exact` with CSV output.
"""
import numpy as np

from frechetkit.bench import bench_approx3, bench_exact, bench_oracle


def medians(rows, phase):
    by_size = {}
    for row in rows:
        if row["phase"] == phase:
            by_size.setdefault((row["n"], row["m"]), []).append(row["time_ms"])
    return {k: float(np.median(v)) for k, v in sorted(by_size.items())}


print("=== oracle build/query vs n (m = 64) ===")
rows = bench_oracle([10_000, 100_000, 1_000_000], m=64, trials=3, seed=7)
builds = medians(rows, "build")
queries = medians(rows, "query")
print(f"{'n':>9} {'build ms':>10} {'query ms':>10} {'build/(n log n) * 1e9':>22}")
for (n, m), b in builds.items():
    q = queries[(n, m)]
    print(f"{n:>9} {b:>10.2f} {q:>10.3f} {b / (n * np.log(n)) * 1e6:>22.3f}")
print("build grows ~ n log n; query time does not depend on n.")

print()
print("=== (3+eps) value search vs n (m = 64) ===")
rows = bench_approx3([50_000, 100_000, 200_000], [64], eps=0.1, trials=3, seed=7)
for (n, m), t in medians(rows, "total").items():
    print(f"n = {n:>7}: total {t:8.1f} ms")

print()
print("=== exact DP for scale (the bound the oracle beats) ===")
rows = bench_exact([10_000, 100_000], [64], trials=3, seed=7)
for (n, m), t in medians(rows, "value").items():
    print(f"n = {n:>7}, m = {m}: {t:8.1f} ms")
