import numpy as np
import pytest

from frechetkit import _kernels
from frechetkit.geometry import PolyCurve


@pytest.fixture(scope="session", autouse=True)
def warm_kernels():
    """Touch every compiled kernel once so JIT cost never lands inside a
    timing-sensitive test."""
    P = np.array([[0.0], [1.0], [0.5]])
    Q = np.array([[0.0], [1.0]])
    for code in (0, 1, 2):
        _kernels.dfd_value(P, Q, code)
        _kernels.dfd_decide(P, Q, 1.0, code)
        _kernels.dfd_brute(P, Q, code)
        _kernels.continuous_decide(P, Q, 1.0, code)
        _kernels.ball_segment_interval(np.array([0.5]), np.array([0.0]), np.array([1.0]), 1.0, code)
        _kernels.scan_next_anchor(P, Q, 1.0, code, P[0], 1)
        _kernels.extend_continuous(P, Q, 1.0, code, 1.0, 1, 0.0)
    vals = np.array([0.0, 1.0, 0.0])
    centers = np.empty(3)
    breaks = np.empty(3, np.int64)
    _kernels.greedy_blocks(vals, 0.5, centers, breaks)
    _kernels.greedy_block_count(vals, 0.5)
    _kernels.smallest_diff_above(np.sort(vals), 0.0)
    counts = np.array([1], np.int64)
    signs = np.array([1], np.int64)
    _kernels.compress_runs(vals, np.array([0.5]), np.array([3], np.int64), 0.5, counts, signs)
    _kernels.expand_runs(np.array([0.5]), np.array([2], np.int64), signs, 0.25)
    _kernels.scan_compressed(np.array([0.5]), np.array([2], np.int64), signs, 0.25, vals, 1.0)
    _kernels.min_complexity_restricted(vals, 0.5, np.array([0.0, 0.5, 1.0]))
    _kernels.greedy_optimality_scan(2, 2)


def random_curve(rng, n, d=1, scale=3.0, integer=False):
    if integer:
        pts = rng.integers(-4, 5, size=(n, d)).astype(np.float64)
    else:
        pts = rng.normal(0.0, scale, size=(n, d))
    return PolyCurve(pts)
