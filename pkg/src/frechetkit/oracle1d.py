"""Preprocess-once distance oracle for 1-dimensional curves.

Preprocessing computes the tightest budgeted simplification of P (the
smallest tolerance at which the greedy block simplification fits the
budget m), stores a run-compressed curve within half that tolerance of P,
and answers discrete-distance queries against curves of complexity at
most m within a factor of 2, in O(m^2 log m) per query.
"""
from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from typing import Tuple

import numpy as np

from . import _kernels
from .common import ApproxInterval
from .geometry import PolyCurve

__all__ = [
    "SimplificationResult",
    "CompressedSimplification",
    "OracleHandle",
    "simplify_delta",
    "select_delta_m",
    "build_compressed",
    "expand_compressed",
    "decide_compressed",
    "preprocess",
    "query",
    "serialize",
    "deserialize",
]

SERIAL_FORMAT_VERSION = 1


def _values_1d(P: PolyCurve) -> np.ndarray:
    if P.dim != 1:
        raise ValueError("the oracle handles 1-dimensional curves only")
    return P.values


@dataclass(frozen=True)
class SimplificationResult:
    """Greedy block simplification: centers plus 1-based block end indices."""

    centers: np.ndarray
    breakpoints: np.ndarray
    delta: float

    @property
    def complexity(self) -> int:
        return int(self.centers.shape[0])


@dataclass(frozen=True)
class CompressedSimplification:
    """Run-compressed curve: run j holds counts[j] vertices alternating
    between centers[j] +- delta_m/2, starting on the signs[j] side."""

    delta_m: float
    centers: np.ndarray
    counts: np.ndarray
    signs: np.ndarray

    def __post_init__(self):
        if not (
            self.centers.shape == self.counts.shape == self.signs.shape
            and self.centers.ndim == 1
            and self.centers.shape[0] >= 1
        ):
            raise ValueError("inconsistent run arrays")
        if np.any(self.counts < 1):
            raise ValueError("run counts must be >= 1")
        if not np.all(np.isin(self.signs, (-1, 1))):
            raise ValueError("run signs must be +-1")

    @property
    def runs(self) -> int:
        return int(self.centers.shape[0])

    @property
    def expanded_complexity(self) -> int:
        return int(self.counts.sum())

    def __eq__(self, other) -> bool:
        if not isinstance(other, CompressedSimplification):
            return NotImplemented
        return (
            self.delta_m == other.delta_m
            and np.array_equal(self.centers, other.centers)
            and np.array_equal(self.counts, other.counts)
            and np.array_equal(self.signs, other.signs)
        )


@dataclass(frozen=True)
class OracleHandle:
    """A built oracle: compressed simplification plus build metadata."""

    cs: CompressedSimplification
    m: int
    n: int
    build_stats: dict = field(default_factory=dict, compare=False)

    def __eq__(self, other) -> bool:
        if not isinstance(other, OracleHandle):
            return NotImplemented
        return self.cs == other.cs and self.m == other.m and self.n == other.n


def simplify_delta(P: PolyCurve, delta: float) -> SimplificationResult:
    """Greedy maximal-block simplification of a 1D curve at tolerance delta.

    Blocks are longest prefixes whose value range fits in 2*delta; each
    center is the midpoint of its block's min/max.  The result has minimum
    complexity among curves within discrete distance delta of P.
    """
    vals = _values_1d(P)
    if delta < 0:
        raise ValueError("delta must be nonnegative")
    centers = np.empty(vals.shape[0], np.float64)
    breaks = np.empty(vals.shape[0], np.int64)
    ell = int(_kernels.greedy_blocks(vals, float(delta), centers, breaks))
    return SimplificationResult(
        centers=centers[:ell].copy(), breakpoints=breaks[:ell].copy(), delta=float(delta)
    )


def select_delta_m(P: PolyCurve, m: int) -> Tuple[float, SimplificationResult]:
    """Smallest candidate tolerance at which the greedy simplification has
    at most m blocks, together with that simplification.

    Candidates are half the pairwise value differences of P.  The search
    bisects on the value axis down to float resolution with an infeasible
    lower and a feasible upper bound, then marches the exact candidate
    successors of the lower bound; the greedy block count is monotone in
    the tolerance, so the first feasible candidate found is the minimum.
    """
    delta_m, pstar, _ = _select_delta_m_stats(P, m)
    return delta_m, pstar


def _select_delta_m_stats(P: PolyCurve, m: int) -> Tuple[float, SimplificationResult, int]:
    if m < 1:
        raise ValueError("budget m must be >= 1")
    vals = _values_1d(P)
    probes = 0

    def blocks_at(delta: float) -> int:
        nonlocal probes
        probes += 1
        return int(_kernels.greedy_block_count(vals, float(delta)))

    if blocks_at(0.0) <= m:
        return 0.0, simplify_delta(P, 0.0), probes
    s = np.sort(vals)
    lo = 0.0
    hi = float(s[-1] - s[0])
    while blocks_at(hi / 2.0) > m:
        # the full value range can round a hair short of covering everything
        hi = np.nextafter(hi * 2.0, np.inf)
    # invariant: blocks_at(lo/2) > m and every candidate <= lo is infeasible
    while True:
        mid = 0.5 * (lo + hi)
        if not (lo < mid < hi):
            break
        if blocks_at(mid / 2.0) <= m:
            hi = mid
        else:
            lo = mid
    while True:
        d1 = float(_kernels.smallest_diff_above(s, lo))
        if not np.isfinite(d1):
            raise AssertionError("no feasible candidate found")
        if blocks_at(d1 / 2.0) <= m:
            return d1 / 2.0, simplify_delta(P, d1 / 2.0), probes
        lo = d1


def build_compressed(
    P: PolyCurve, pstar: SimplificationResult, delta_m: float
) -> CompressedSimplification:
    """Run-compressed curve within delta_m/2 of P, from its simplification.

    Every vertex of P snaps to its block center offset by delta_m/2 toward
    the vertex (ties snap to the + side); consecutive equal snapped values
    merge, and each block's survivors form one alternating run.
    """
    vals = _values_1d(P)
    n = vals.shape[0]
    breaks = np.asarray(pstar.breakpoints, dtype=np.int64)
    if breaks[-1] != n or np.any(np.diff(breaks) <= 0) or breaks[0] < 1:
        raise ValueError("breakpoints do not cover the curve")
    half = 0.5 * float(delta_m)
    ell = pstar.complexity
    counts = np.zeros(ell, np.int64)
    signs = np.zeros(ell, np.int64)
    _kernels.compress_runs(
        vals, np.asarray(pstar.centers, np.float64), breaks, half, counts, signs
    )
    return CompressedSimplification(
        delta_m=float(delta_m),
        centers=np.asarray(pstar.centers, dtype=np.float64).copy(),
        counts=counts,
        signs=signs,
    )


def expand_compressed(cs: CompressedSimplification) -> PolyCurve:
    """Explicit curve described by a compressed simplification."""
    vals = _kernels.expand_runs(cs.centers, cs.counts, cs.signs, 0.5 * cs.delta_m)
    return PolyCurve(vals)


def _scan(cs: CompressedSimplification, qvals: np.ndarray, threshold: float) -> bool:
    return bool(
        _kernels.scan_compressed(
            cs.centers, cs.counts, cs.signs, 0.5 * cs.delta_m, qvals, float(threshold)
        )
    )


def decide_compressed(cs: CompressedSimplification, Q: PolyCurve, delta: float) -> bool:
    """Decide d_dF(expand(cs), Q) <= (3/2)*delta in O(|Q| * runs) time.

    Requires delta >= delta_m: below that the run structure no longer
    matches the alternating reachability pattern the scan exploits.
    """
    qvals = _values_1d(Q)
    if delta < cs.delta_m:
        raise ValueError(f"delta {delta} below the simplification tolerance {cs.delta_m}")
    return _scan(cs, qvals, 1.5 * float(delta))


def preprocess(P: PolyCurve, m: int) -> OracleHandle:
    """Build the oracle for query curves of complexity at most m."""
    vals = _values_1d(P)
    t0 = time.perf_counter()
    delta_m, pstar, probes = _select_delta_m_stats(P, m)
    t1 = time.perf_counter()
    cs = build_compressed(P, pstar, delta_m)
    t2 = time.perf_counter()
    stats = {
        "select_ms": (t1 - t0) * 1e3,
        "compress_ms": (t2 - t1) * 1e3,
        "build_ms": (t2 - t0) * 1e3,
        "greedy_probes": probes,
    }
    return OracleHandle(cs=cs, m=int(m), n=int(vals.shape[0]), build_stats=stats)


def query(oracle: OracleHandle, Q: PolyCurve, with_stats: bool = False):
    """2-approximate the discrete distance between the preprocessed curve
    and Q: the returned [lo, 2*lo] contains the exact value.

    Requires |Q| <= m; the lower-bound guarantee of the preprocessing
    tolerance only covers query curves within the budget.
    """
    qvals = _values_1d(Q)
    if Q.n > oracle.m:
        raise ValueError(
            f"query complexity {Q.n} exceeds the oracle budget m={oracle.m}"
        )
    cs = oracle.cs
    probes = 0
    if cs.delta_m == 0.0:
        exact = float(_kernels.dfd_value(expand_compressed(cs).vertices, Q.vertices, 2))
        result = ApproxInterval(exact, exact)
        return (result, {"probes": 0, "branch": "exact"}) if with_stats else result
    probes += 1
    if _scan(cs, qvals, 1.5 * cs.delta_m):
        result = ApproxInterval(cs.delta_m, 2.0 * cs.delta_m)
        return (result, {"probes": probes, "branch": "floor"}) if with_stats else result
    # the distance to the compressed curve is attained by a vertex pair;
    # bisect over those candidate values above the floor
    half = 0.5 * cs.delta_m
    vhi = cs.centers + half
    vlo = cs.centers - half
    cand = np.abs(np.concatenate([vhi, vlo])[:, None] - qvals[None, :]).ravel()
    cand = np.unique(cand[cand > 1.5 * cs.delta_m])
    lo_i, hi_i = 0, cand.shape[0] - 1
    # invariant: scan at cand[hi_i] is true (the distance is a candidate)
    while lo_i < hi_i:
        mid = (lo_i + hi_i) // 2
        probes += 1
        if _scan(cs, qvals, float(cand[mid])):
            hi_i = mid
        else:
            lo_i = mid + 1
    v = float(cand[lo_i])
    lo = v * (2.0 / 3.0)
    result = ApproxInterval(lo, 2.0 * lo)
    return (result, {"probes": probes, "branch": "search", "compressed_dist": v}) if with_stats else result


def serialize(oracle: OracleHandle) -> bytes:
    """Versioned JSON serialization; floats keep full round-trip precision."""
    payload = {
        "format_version": SERIAL_FORMAT_VERSION,
        "n": oracle.n,
        "m": oracle.m,
        "delta_m": oracle.cs.delta_m,
        "centers": [float(x) for x in oracle.cs.centers],
        "counts": [int(x) for x in oracle.cs.counts],
        "signs": [int(x) for x in oracle.cs.signs],
    }
    return json.dumps(payload).encode("utf-8")


def deserialize(blob: bytes) -> OracleHandle:
    try:
        payload = json.loads(blob.decode("utf-8"))
    except (UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise ValueError(f"malformed oracle payload: {exc}") from exc
    if not isinstance(payload, dict):
        raise ValueError("malformed oracle payload: not an object")
    version = payload.get("format_version")
    if version != SERIAL_FORMAT_VERSION:
        raise ValueError(f"unsupported oracle format_version: {version!r}")
    try:
        cs = CompressedSimplification(
            delta_m=float(payload["delta_m"]),
            centers=np.asarray(payload["centers"], dtype=np.float64),
            counts=np.asarray(payload["counts"], dtype=np.int64),
            signs=np.asarray(payload["signs"], dtype=np.int64),
        )
        return OracleHandle(cs=cs, m=int(payload["m"]), n=int(payload["n"]))
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed oracle payload: {exc}") from exc
