"""Hard 1D instance pairs from orthogonal-vectors inputs.

Given binary vector sets U (size m) and V (size n), the generator emits a
pair of integer 1D curves whose discrete Frechet distance is at most 1
exactly when some u in U and v in V are orthogonal, and at least 2
otherwise.  The gadget coordinates are frozen constants validated by an
exhaustive certification harness at small scale; see certify_gadgets.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

import numpy as np

from . import _kernels
from .geometry import PolyCurve

__all__ = [
    "OVInstance",
    "GadgetSet1D",
    "DEFAULT_GADGETS",
    "ov_brute",
    "build_hard_pair_1d",
    "certify_gadgets",
    "CertificationReport",
    "hard_pair_sizes",
]


@dataclass(frozen=True)
class OVInstance:
    """Orthogonal-vectors input: U (m vectors) and V (n vectors) in {0,1}^d.

    Roles are swapped on construction when |U| > |V| so that m <= n; the
    problem is symmetric.
    """

    d: int
    U: Tuple[Tuple[int, ...], ...]
    V: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        U = tuple(tuple(int(b) for b in u) for u in self.U)
        V = tuple(tuple(int(b) for b in v) for v in self.V)
        if self.d < 1:
            raise ValueError("dimension must be positive")
        if not U or not V:
            raise ValueError("U and V must be non-empty")
        for vec in itertools.chain(U, V):
            if len(vec) != self.d:
                raise ValueError(f"vector {vec} does not have length {self.d}")
            if any(b not in (0, 1) for b in vec):
                raise ValueError(f"vector {vec} has non-binary entries")
        if len(U) > len(V):
            U, V = V, U
        object.__setattr__(self, "U", U)
        object.__setattr__(self, "V", V)

    @property
    def m(self) -> int:
        return len(self.U)

    @property
    def n(self) -> int:
        return len(self.V)


def ov_brute(inst: OVInstance) -> Optional[Tuple[int, int]]:
    """First orthogonal pair as 1-based (i, j) with <V[i], U[j]> = 0."""
    for i, v in enumerate(inst.V, start=1):
        for j, u in enumerate(inst.U, start=1):
            if sum(a * b for a, b in zip(v, u)) == 0:
                return (i, j)
    return None


@dataclass(frozen=True)
class GadgetSet1D:
    """Integer gadget curves composing the hard pair.

    p0/p1 encode V-bits against q0/q1 encoding U-bits: the main values are
    chosen so the (1,1) bit pair sits at distance 2 while every orthogonal
    combination stays within 1, with -1/-2 beacons at every second vertex
    forcing synchronized traversal.  q_c absorbs whole bit blocks of P;
    p_null/q_null separate and pin the blocks.  The padding curves p_star/
    q_star mirror one whole block and therefore grow with d; p_s caps the
    ends of P (its reverse caps the tail).
    """

    p0: Tuple[int, ...] = (1, -1)
    p1: Tuple[int, ...] = (0, -1)
    q0: Tuple[int, ...] = (1, -2)
    q1: Tuple[int, ...] = (2, -2)
    q_c: Tuple[int, ...] = (0,)
    p_null: int = 3
    q_null: int = 2
    p_s: Tuple[int, ...] = (2, 1)
    p_star_cap: Tuple[int, ...] = (3, 0)
    p_star_wild: Tuple[int, ...] = (1, -1)
    q_star_cap: Tuple[int, ...] = (2, 0)
    q_star_wild: Tuple[int, ...] = (1, 0)

    def p_bit(self, bit: int) -> Tuple[int, ...]:
        return self.p1 if bit else self.p0

    def q_bit(self, bit: int) -> Tuple[int, ...]:
        return self.q1 if bit else self.q0

    def p_star(self, d: int) -> Tuple[int, ...]:
        """Padding curve matching one whole U-block regardless of its bits."""
        mid = self.p_star_wild * (2 * d + 3)
        return self.p_star_cap + mid + tuple(reversed(self.p_star_cap))

    def q_star(self, d: int) -> Tuple[int, ...]:
        """Padding curve matched by p_s or by one p_star."""
        mid = self.q_star_wild * (2 * d + 3)
        return self.q_star_cap + mid + tuple(reversed(self.q_star_cap))


DEFAULT_GADGETS = GadgetSet1D()


def _p_vertices(inst: OVInstance, g: GadgetSet1D) -> List[int]:
    star = g.p_star(inst.d)
    out: List[int] = []
    out.extend(g.p_s)
    for _ in range(inst.m - 1):
        out.extend(star)
    out.append(g.p_null)
    for v in inst.V:
        for _ in range(inst.d + 1):
            out.extend(g.p0)
        out.extend(g.p1)
        for bit in v:
            out.extend(g.p_bit(bit))
        out.extend(g.p1)
    out.append(g.p_null)
    for _ in range(inst.m - 1):
        out.extend(star)
    out.extend(reversed(g.p_s))
    return out


def _q_vertices(inst: OVInstance, g: GadgetSet1D) -> List[int]:
    star = g.q_star(inst.d)
    out: List[int] = []
    for _ in range(inst.m - 1):
        out.extend(star)
    for u in inst.U:
        out.append(g.q_null)
        out.extend(g.q_c)
        for _ in range(inst.d + 1):
            out.extend(g.q1)
        out.extend(g.q0)
        for bit in u:
            out.extend(g.q_bit(bit))
        out.extend(g.q0)
        out.extend(g.q_c)
    out.append(g.q_null)
    for _ in range(inst.m - 1):
        out.extend(star)
    return out


def hard_pair_sizes(inst: OVInstance, g: GadgetSet1D = DEFAULT_GADGETS) -> Tuple[int, int]:
    """Exact vertex counts (|P|, |Q|) from the composition structure."""
    m, n, d = inst.m, inst.n, inst.d
    star_len = 2 * len(g.p_star_cap) + len(g.p_star_wild) * (2 * d + 3)
    p_block = len(g.p0) * (d + 1) + len(g.p1) * 2 + 2 * d
    p_total = 2 * len(g.p_s) + 2 * (m - 1) * star_len + 2 + n * p_block
    q_star_len = 2 * len(g.q_star_cap) + len(g.q_star_wild) * (2 * d + 3)
    q_block = 1 + 2 * len(g.q_c) + len(g.q1) * (d + 1) + 2 * len(g.q0) + 2 * d
    q_total = 2 * (m - 1) * q_star_len + m * q_block + 1
    return p_total, q_total


def build_hard_pair_1d(
    inst: OVInstance, gadgets: GadgetSet1D = DEFAULT_GADGETS
) -> Tuple[PolyCurve, PolyCurve]:
    """Curve pair with d_dF <= 1 iff the instance has an orthogonal pair,
    and d_dF >= 2 otherwise (for certified gadget sets)."""
    P = PolyCurve(np.asarray(_p_vertices(inst, gadgets), dtype=np.float64))
    Q = PolyCurve(np.asarray(_q_vertices(inst, gadgets), dtype=np.float64))
    return P, Q


@dataclass
class CertificationReport:
    """Outcome of the exhaustive gadget certification."""

    instances_checked: int = 0
    violations: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def _dfd_int(a: Sequence[float], b: Sequence[float]) -> float:
    return float(
        _kernels.dfd_value(
            np.asarray(a, np.float64).reshape(-1, 1),
            np.asarray(b, np.float64).reshape(-1, 1),
            2,
        )
    )


def _structural_checks(g: GadgetSet1D, report: CertificationReport, d_max: int):
    def fail(msg: str):
        report.violations.append(f"structure: {msg}")

    all_q_values = set(g.q0) | set(g.q1) | set(g.q_c) | {g.q_null}
    all_q_values |= set(g.q_star_cap) | set(g.q_star_wild)
    all_p_values = set(g.p0) | set(g.p1) | set(g.p_s) | {g.p_null}
    all_p_values |= set(g.p_star_cap) | set(g.p_star_wild)
    for value in all_p_values | all_q_values:
        if value != int(value):
            fail(f"non-integer coordinate {value}")
    for d in range(1, d_max + 1):
        if _dfd_int(g.p_star(d), g.q_star(d)) > 1:
            fail(f"d_dF(p_star, q_star) > 1 at d={d}")
        if _dfd_int(g.p_s, g.q_star(d)) > 1:
            fail(f"d_dF(p_s, q_star) > 1 at d={d}")
    for x in (0, 1):
        for y in (0, 1):
            dist = _dfd_int(g.p_bit(x), g.q_bit(y))
            if x * y == 0 and dist > 1:
                fail(f"d_dF(p{x}, q{y}) > 1 although {x}*{y} == 0")
            if x * y == 1 and dist < 2:
                fail(f"d_dF(p{x}, q{y}) < 2 although {x}*{y} == 1")
    # every second vertex of any bit-gadget composition must be the -2
    # beacon, and only the -1 vertices of p-gadgets may come within 2 of it
    for bits in itertools.product((0, 1), repeat=2):
        comp = [v for b in bits for v in g.q_bit(b)]
        if any(comp[i] != -2 for i in range(1, len(comp), 2)):
            fail(f"q composition {bits} lacks -2 at every second vertex")
    for bit in (0, 1):
        gad = g.p_bit(bit)
        for pos, v in enumerate(gad):
            near = abs(v - (-2)) < 2
            if near and pos % 2 == 0:
                fail(f"p{bit} vertex {v} at even offset is within 2 of -2")
            if not near and pos % 2 == 1:
                fail(f"p{bit} vertex {v} at odd offset is not within 2 of -2")
    # p_null pairs with q_null, and every Q value close enough to p_null to
    # matter (distance < 2) must equal q_null, so any Q point near p_null
    # lies on an edge incident to the value q_null
    if abs(g.p_null - g.q_null) > 1:
        fail("p_null does not match q_null at threshold 1")
    if any(value > g.q_null for value in all_q_values):
        fail("q values above q_null break the p_null edge-incidence argument")
    for value in all_q_values - {g.q_null}:
        if abs(g.p_null - value) < 2:
            fail(f"p_null within 2 of non-null q value {value}")


def certify_gadgets(
    gadgets: GadgetSet1D = DEFAULT_GADGETS,
    limits: Tuple[int, int, int] = (3, 3, 3),
) -> CertificationReport:
    """Exhaustively verify the gap semantics of a gadget set.

    For every instance with n <= limits[0], m <= limits[1], d <= limits[2]:
    an orthogonal pair must force d_dF(P, Q) <= 1 and its absence must
    force d_dF(P, Q) >= 2.  Structural gadget invariants are checked
    directly.  All violations are collected in the report.
    """
    n_max, m_max, d_max = limits
    report = CertificationReport()
    _structural_checks(gadgets, report, d_max)
    for d in range(1, d_max + 1):
        vectors = list(itertools.product((0, 1), repeat=d))
        for m in range(1, m_max + 1):
            for n in range(1, n_max + 1):
                for U in itertools.product(vectors, repeat=m):
                    for V in itertools.product(vectors, repeat=n):
                        inst = OVInstance(d=d, U=U, V=V)
                        P, Q = build_hard_pair_1d(inst, gadgets)
                        dist = float(_kernels.dfd_value(P.vertices, Q.vertices, 2))
                        has_pair = ov_brute(inst) is not None
                        report.instances_checked += 1
                        if has_pair and dist > 1.0:
                            report.violations.append(
                                f"d={d} m={m} n={n} U={U} V={V}: orthogonal pair but d_dF={dist}"
                            )
                        if not has_pair and dist < 2.0:
                            report.violations.append(
                                f"d={d} m={m} n={n} U={U} V={V}: no pair but d_dF={dist}"
                            )
    return report
