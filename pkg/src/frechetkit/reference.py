"""Exact reference algorithms: discrete distance DP, continuous decision via
free-space reachability, and brute-force oracles for the test suites."""
from __future__ import annotations

from typing import Union

from . import _kernels
from .geometry import Norm, PolyCurve, as_norm, bbox_diagonal, norm_dist

__all__ = [
    "discrete_frechet_exact",
    "discrete_frechet_decide",
    "continuous_frechet_decide",
    "continuous_frechet_value_ref",
    "brute_force_discrete",
]

BRUTE_FORCE_LIMIT = 14


def _check_pair(P: PolyCurve, Q: PolyCurve):
    if P.dim != Q.dim:
        raise ValueError(f"dimension mismatch: {P.dim} != {Q.dim}")


def discrete_frechet_exact(P: PolyCurve, Q: PolyCurve, norm: Union[Norm, str] = Norm.L2) -> float:
    """Discrete Frechet distance via the O(nm) min-max dynamic program."""
    _check_pair(P, Q)
    return float(_kernels.dfd_value(P.vertices, Q.vertices, as_norm(norm).code))


def discrete_frechet_decide(
    P: PolyCurve, Q: PolyCurve, delta: float, norm: Union[Norm, str] = Norm.L2
) -> bool:
    """True iff the discrete Frechet distance is at most delta."""
    _check_pair(P, Q)
    if delta < 0:
        raise ValueError("delta must be nonnegative")
    return bool(_kernels.dfd_decide(P.vertices, Q.vertices, float(delta), as_norm(norm).code))


def continuous_frechet_decide(
    P: PolyCurve, Q: PolyCurve, delta: float, norm: Union[Norm, str] = Norm.L2
) -> bool:
    """True iff the continuous Frechet distance is at most delta.

    Row-by-row propagation of reachable boundary intervals through the
    free-space diagram; zero-length edges degenerate gracefully.
    """
    _check_pair(P, Q)
    if delta < 0:
        raise ValueError("delta must be nonnegative")
    return bool(
        _kernels.continuous_decide(P.vertices, Q.vertices, float(delta), as_norm(norm).code)
    )


def continuous_frechet_value_ref(
    P: PolyCurve, Q: PolyCurve, norm: Union[Norm, str] = Norm.L2, rel_tol: float = 1e-9
) -> float:
    """Reference continuous distance, bisected to relative tolerance.

    Returns v with decide(v) true and decide(v / (1 + rel_tol)) false, or 0
    when the distance is exactly zero.  Test oracle only; not an exact solver.
    """
    _check_pair(P, Q)
    if rel_tol <= 0:
        raise ValueError("rel_tol must be positive")
    tag = as_norm(norm)
    if continuous_frechet_decide(P, Q, 0.0, tag):
        return 0.0
    lb = max(
        norm_dist(P.vertices[0], Q.vertices[0], tag),
        norm_dist(P.vertices[-1], Q.vertices[-1], tag),
    )
    ub = norm_dist(P.vertices[0], Q.vertices[0], tag) + bbox_diagonal(P, tag) + bbox_diagonal(Q, tag)
    if lb > 0 and continuous_frechet_decide(P, Q, lb, tag):
        return lb
    if lb == 0.0:
        # distance is positive but the endpoint bound is void: grow a floor
        lb = ub * 2.0**-60
        while not continuous_frechet_decide(P, Q, lb, tag):
            lb *= 2.0
            if lb > ub:
                break
        if continuous_frechet_decide(P, Q, lb, tag):
            lo = lb / 2.0
            hi = lb
        else:
            lo, hi = lb / 2.0, ub
    else:
        lo, hi = lb, ub
    while hi > lo * (1.0 + rel_tol):
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        if continuous_frechet_decide(P, Q, mid, tag):
            hi = mid
        else:
            lo = mid
    return hi


def brute_force_discrete(P: PolyCurve, Q: PolyCurve, norm: Union[Norm, str] = Norm.L2) -> float:
    """Discrete distance by exhaustive enumeration of monotone matchings.

    Only for n + m <= 14; this is the independent oracle the DP is checked
    against.
    """
    _check_pair(P, Q)
    if P.n + Q.n > BRUTE_FORCE_LIMIT:
        raise ValueError(f"brute force limited to n + m <= {BRUTE_FORCE_LIMIT}")
    return float(_kernels.dfd_brute(P.vertices, Q.vertices, as_norm(norm).code))
