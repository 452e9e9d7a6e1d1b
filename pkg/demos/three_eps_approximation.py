"""The (3+eps)-approximation for curves in any dimension.

The decision step simplifies the long curve against the query in O(n),
then decides exactly on the small simplified pair; a geometric value
grid turns the decision into a certified interval.
"""
import numpy as np

import frechetkit as fk

print("=== query-dependent simplification ===")
P = fk.curve([(0, 0), (4, 0)])
Q = fk.curve([(0, 3), (4, 3)])
out = fk.simplify_against_query(P, Q, delta=3.0)
print("P within 3 of Q's line:", not out.exceeds_delta,
      "-> P' =", out.simplified.vertices.tolist())

out = fk.simplify_against_query(fk.curve([0, 10]), fk.curve([10, 0]), delta=1.0)
print("opposite directions at delta=1 ->", "exceeds" if out.exceeds_delta else "ok")

print()
print("=== 3-approximate decision ===")
for delta in (0.5, 1.0, 3.0, 10.0):
    decision = fk.decide_3approx(fk.curve([0, 10]), fk.curve([10, 0]), delta)
    print(f"delta {delta:>5}: {decision.value}")

print()
print("=== certified value intervals ===")
rng = np.random.default_rng(3)
for d in (1, 2, 3):
    P = fk.PolyCurve(rng.normal(0, 3, (400, d)))
    Q = fk.PolyCurve(rng.normal(0, 3, (20, d)))
    for mode in (fk.MatchMode.CONTINUOUS, fk.MatchMode.DISCRETE):
        iv = fk.approx_value(P, Q, eps=0.1, norm=fk.Norm.L2, mode=mode)
        if mode is fk.MatchMode.DISCRETE:
            ref = fk.discrete_frechet_exact(P, Q)
        else:
            ref = fk.continuous_frechet_value_ref(P, Q, rel_tol=1e-9)
        inside = iv.lo * (1 - 1e-9) <= ref <= iv.hi * (1 + 1e-9)
        print(f"d={d} {mode.value:>10}: [{iv.lo:8.4f}, {iv.hi:8.4f}] "
              f"ratio {iv.ratio:.3f}  reference {ref:8.4f}  contained: {inside}")

print()
print("=== a translate attains the factor-3 worst case ===")
P = fk.curve([(0, 0), (1, 2), (3, 1)])
Q = fk.curve([(0, 5), (1, 7), (3, 6)])
iv = fk.approx_value(P, Q, eps=0.1)
print(f"true distance 5, interval [{iv.lo}, {iv.hi}], ratio {iv.ratio}")
