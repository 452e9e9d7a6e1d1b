"""The 1D discrete-distance oracle.

Preprocess a long 1D curve once for a query budget m, then answer
distance queries against short curves within a factor of 2 without
re-reading the long curve.  Every step of the preprocessing is shown:
the budgeted simplification, its tolerance, and the run-compressed
curve the queries actually scan.
"""
import numpy as np

import frechetkit as fk

print("=== the running example ===")
P = fk.curve([0, 4, 1, 9, 8, 10])
delta_m, pstar = fk.select_delta_m(P, m=2)
print("P                 :", P.values.tolist())
print("budget m          : 2")
print("tolerance delta_m :", delta_m)
print("simplification    :", pstar.centers.tolist(), "ends at", pstar.breakpoints.tolist())

cs = fk.build_compressed(P, pstar, delta_m)
print("compressed runs   : centers", cs.centers.tolist(), "counts", cs.counts.tolist(),
      "signs", cs.signs.tolist())
print("expanded          :", fk.expand_compressed(cs).values.tolist())

handle = fk.preprocess(P, m=2)
for q in ([2, 9], [1, 10], [100, 200]):
    iv = fk.query(handle, fk.curve(q))
    exact = fk.discrete_frechet_exact(P, fk.curve(q))
    print(f"query {q!s:>12}: interval [{iv.lo:.4f}, {iv.hi:.4f}]  exact {exact:.4f}")

print()
print("=== a long random walk ===")
rng = np.random.default_rng(42)
walk = fk.PolyCurve(np.cumsum(rng.uniform(-1, 1, 200_000)))
handle = fk.preprocess(walk, m=64)
print(f"n = {walk.n}, stored runs = {handle.cs.runs}, delta_m = {handle.cs.delta_m:.4f}")
print(f"build took {handle.build_stats['build_ms']:.1f} ms "
      f"({handle.build_stats['greedy_probes']} simplification probes)")

Q = fk.PolyCurve(np.cumsum(rng.uniform(-1, 1, 64)))
iv = fk.query(handle, Q)
exact = fk.discrete_frechet_exact(walk, Q)
print(f"query interval [{iv.lo:.4f}, {iv.hi:.4f}], exact {exact:.4f}, "
      f"ratio to lo {exact / iv.lo:.3f}")

blob = fk.serialize(handle)
print(f"serialized to {len(blob)} bytes; round-trip equal:",
      fk.deserialize(blob) == handle)
