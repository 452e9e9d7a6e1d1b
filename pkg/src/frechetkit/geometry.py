"""Polygonal curves, L_p norms, and exact ball-segment intersection.

A curve with n vertices is parametrized over [1, n]; the point at
parameter i + a (integer i, 0 <= a <= 1) is the affine interpolation
between vertices i and i + 1.  All coordinates are float64 and every
operation here is a pure function of immutable inputs.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional, Tuple, Union

import numpy as np

__all__ = [
    "Norm",
    "as_norm",
    "PolyCurve",
    "curve",
    "norm_dist",
    "curve_eval",
    "concat",
    "repeat",
    "subcurve",
    "ball_segment_params",
    "bbox_diagonal",
]


class Norm(enum.Enum):
    """Supported norms; only p in {1, 2, inf}."""

    L1 = "l1"
    L2 = "l2"
    LINF = "linf"

    @property
    def code(self) -> int:
        """Integer tag shared with the compiled kernels (0=Linf, 1=L1, 2=L2)."""
        return _NORM_CODES[self]


_NORM_CODES = {Norm.L1: 1, Norm.L2: 2, Norm.LINF: 0}


def as_norm(norm: Union[Norm, str]) -> Norm:
    """Coerce a Norm or a string tag ('l1', 'l2', 'linf') into a Norm."""
    if isinstance(norm, Norm):
        return norm
    try:
        return Norm(str(norm).lower())
    except ValueError:
        raise ValueError(f"unknown norm tag {norm!r}; expected one of l1, l2, linf")


def _as_vertex_array(vertices) -> np.ndarray:
    arr = np.asarray(vertices, dtype=np.float64)
    if arr.ndim == 0:
        arr = arr.reshape(1, 1)
    elif arr.ndim == 1:
        # a sequence of scalars is a 1-dimensional curve
        arr = arr.reshape(-1, 1)
    elif arr.ndim != 2:
        raise ValueError("vertices must be a sequence of points")
    if arr.shape[0] == 0:
        raise ValueError("a curve needs at least one vertex")
    if arr.shape[1] == 0:
        raise ValueError("points need at least one coordinate")
    if not np.all(np.isfinite(arr)):
        raise ValueError("coordinates must be finite")
    return arr


@dataclass(frozen=True)
class PolyCurve:
    """Immutable polygonal curve stored as an (n, d) float64 array."""

    vertices: np.ndarray

    def __post_init__(self):
        arr = _as_vertex_array(self.vertices)
        arr = np.ascontiguousarray(arr)
        arr.setflags(write=False)
        object.__setattr__(self, "vertices", arr)

    @property
    def n(self) -> int:
        return self.vertices.shape[0]

    def __len__(self) -> int:
        return self.n

    @property
    def dim(self) -> int:
        return self.vertices.shape[1]

    @property
    def values(self) -> np.ndarray:
        """Vertex values of a 1-dimensional curve as a flat array."""
        if self.dim != 1:
            raise ValueError("values is only defined for 1-dimensional curves")
        return self.vertices[:, 0]

    def __eq__(self, other) -> bool:
        if not isinstance(other, PolyCurve):
            return NotImplemented
        return self.vertices.shape == other.vertices.shape and bool(
            np.all(self.vertices == other.vertices)
        )


def curve(vertices) -> PolyCurve:
    """Build a PolyCurve from scalars (1D) or point sequences."""
    return PolyCurve(vertices)


def _point(p) -> np.ndarray:
    arr = np.asarray(p, dtype=np.float64).reshape(-1)
    if arr.size == 0:
        raise ValueError("points need at least one coordinate")
    if not np.all(np.isfinite(arr)):
        raise ValueError("coordinates must be finite")
    return arr


def _check_same_dim(da: int, db: int):
    if da != db:
        raise ValueError(f"dimension mismatch: {da} != {db}")


def norm_dist(a, b, norm: Union[Norm, str] = Norm.L2) -> float:
    """Distance between two points under the given norm."""
    pa, pb = _point(a), _point(b)
    _check_same_dim(pa.size, pb.size)
    diff = pa - pb
    tag = as_norm(norm)
    if tag is Norm.L2:
        return float(np.sqrt(np.dot(diff, diff)))
    if tag is Norm.L1:
        return float(np.sum(np.abs(diff)))
    return float(np.max(np.abs(diff)))


def curve_eval(P: PolyCurve, t: float) -> np.ndarray:
    """Point of P at parameter t in [1, n]; exact at integer parameters."""
    n = P.n
    if not (1.0 <= t <= n):
        raise ValueError(f"parameter {t} outside curve domain [1, {n}]")
    i = int(np.floor(t))
    if i >= n:
        return P.vertices[n - 1].copy()
    a = t - i
    if a == 0.0:
        return P.vertices[i - 1].copy()
    return (1.0 - a) * P.vertices[i - 1] + a * P.vertices[i]


def concat(*parts: Optional[PolyCurve]) -> PolyCurve:
    """Concatenate curves in order; None entries (empty compositions) vanish."""
    pieces = [p for p in parts if p is not None]
    if not pieces:
        raise ValueError("empty composition is not a curve")
    dim = pieces[0].dim
    for p in pieces[1:]:
        _check_same_dim(dim, p.dim)
    return PolyCurve(np.concatenate([p.vertices for p in pieces], axis=0))


def repeat(P: PolyCurve, k: int) -> Optional[PolyCurve]:
    """k-fold composition of P; k == 0 yields the identity element (None)."""
    if k < 0:
        raise ValueError("repeat count must be nonnegative")
    if k == 0:
        return None
    return PolyCurve(np.tile(P.vertices, (k, 1)))


def subcurve(P: PolyCurve, s: float, t: float) -> PolyCurve:
    """Restriction of P to [s, t]: interpolated endpoints plus interior vertices."""
    n = P.n
    if not (1.0 <= s <= t <= n):
        raise ValueError(f"invalid subcurve range [{s}, {t}] for domain [1, {n}]")
    first = curve_eval(P, s)
    last = curve_eval(P, t)
    lo = int(np.floor(s)) + 1
    hi = int(np.ceil(t)) - 1
    inner = [P.vertices[i - 1] for i in range(lo, hi + 1) if s < i < t]
    return PolyCurve(np.vstack([first] + inner + [last])) if s < t else PolyCurve(first.reshape(1, -1))


def ball_segment_params(
    center,
    r: float,
    seg_start,
    seg_end,
    norm: Union[Norm, str] = Norm.L2,
) -> Optional[Tuple[float, float]]:
    """Parameters tau in [0, 1] with dist(center, lerp(seg_start, seg_end, tau)) <= r.

    Returns the closed interval (lo, hi) or None when the ball misses the
    segment.  Closed forms per norm: quadratic for L2, per-coordinate
    constraints for Linf, breakpoint scan of the piecewise-linear distance
    for L1.
    """
    c = _point(center)
    a = _point(seg_start)
    b = _point(seg_end)
    _check_same_dim(c.size, a.size)
    _check_same_dim(a.size, b.size)
    if r < 0:
        raise ValueError("radius must be nonnegative")
    from ._kernels import ball_segment_interval

    ok, lo, hi = ball_segment_interval(c, a, b, float(r), as_norm(norm).code)
    if not ok:
        return None
    return (lo, hi)


def bbox_diagonal(P: PolyCurve, norm: Union[Norm, str] = Norm.L2) -> float:
    """Norm-length of the axis-aligned bounding-box diagonal of P's vertices."""
    ext = P.vertices.max(axis=0) - P.vertices.min(axis=0)
    return norm_dist(ext, np.zeros_like(ext), norm)
