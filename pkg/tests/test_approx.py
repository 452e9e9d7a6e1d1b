import numpy as np
import pytest

from frechetkit.approx import (
    Decision3,
    MatchMode,
    approx_value,
    approx_value_detailed,
    decide_3approx,
    simplify_against_query,
)
from frechetkit.geometry import Norm, curve
from frechetkit.reference import (
    continuous_frechet_decide,
    continuous_frechet_value_ref,
    discrete_frechet_decide,
    discrete_frechet_exact,
)

from conftest import random_curve

ALL_NORMS = [Norm.L1, Norm.L2, Norm.LINF]
BOTH_MODES = [MatchMode.CONTINUOUS, MatchMode.DISCRETE]


def ref_decide(P, Q, delta, norm, mode):
    if mode is MatchMode.DISCRETE:
        return discrete_frechet_decide(P, Q, delta, norm)
    return continuous_frechet_decide(P, Q, delta, norm)


class TestSimplify:
    def test_monotone_on_edge(self):
        out = simplify_against_query(curve([0, 5, 10]), curve([0, 10]), 0.0)
        assert not out.exceeds_delta
        assert out.simplified.values.tolist() == [0.0, 10.0]

    def test_opposite_directions_exceed(self):
        out = simplify_against_query(curve([0, 10]), curve([10, 0]), 1.0)
        assert out.exceeds_delta
        out = simplify_against_query(
            curve([0, 10]), curve([10, 0]), 1.0, mode=MatchMode.DISCRETE
        )
        assert out.exceeds_delta

    def test_parallel_translate(self):
        out = simplify_against_query(
            curve([(0, 0), (4, 0)]), curve([(0, 3), (4, 3)]), 3.0
        )
        assert not out.exceeds_delta
        assert out.simplified.vertices.tolist() == [[0.0, 3.0], [4.0, 3.0]]

    def test_anchor_ordering(self):
        rng = np.random.default_rng(97)
        for _ in range(300):
            d = int(rng.integers(1, 4))
            mode = BOTH_MODES[int(rng.integers(0, 2))]
            P = random_curve(rng, int(rng.integers(2, 20)), d)
            Q = random_curve(rng, int(rng.integers(1, 8)), d)
            delta = abs(rng.normal(0, 4))
            out = simplify_against_query(P, Q, delta, Norm.L2, mode)
            if out.exceeds_delta:
                continue
            flat = [p for st in out.anchors for p in st]
            assert all(a <= b + 1e-12 for a, b in zip(flat, flat[1:]))
            # anchors stay on the same Q-edge: t_i <= floor(s_i) + 1
            for s, t in out.anchors:
                assert t <= np.floor(s) + 1 + 1e-12
            assert out.simplified.n <= 2 * Q.n

    @pytest.mark.parametrize("mode", BOTH_MODES)
    @pytest.mark.parametrize("norm", ALL_NORMS)
    def test_soundness(self, norm, mode):
        rng = np.random.default_rng(101)
        for _ in range(250):
            d = int(rng.integers(1, 4))
            P = random_curve(rng, int(rng.integers(2, 20)), d)
            Q = random_curve(rng, int(rng.integers(1, 9)), d)
            delta = abs(rng.normal(0, 4))
            out = simplify_against_query(P, Q, delta, norm, mode)
            if out.exceeds_delta:
                assert not ref_decide(P, Q, delta, norm, mode)
            else:
                assert out.simplified.n <= 2 * Q.n
                if mode is MatchMode.DISCRETE:
                    assert discrete_frechet_decide(P, out.simplified, delta, norm)
                else:
                    assert continuous_frechet_decide(
                        P, out.simplified, delta * (1 + 1e-9), norm
                    )


class TestDecide:
    def test_identity(self):
        P = curve([0, 1, 2])
        assert decide_3approx(P, P, 0.5) is Decision3.AT_MOST_3DELTA

    def test_far(self):
        assert (
            decide_3approx(curve([0, 10]), curve([10, 0]), 1.0)
            is Decision3.GREATER_THAN_DELTA
        )

    def test_translate(self):
        assert (
            decide_3approx(curve([(0, 0), (4, 0)]), curve([(0, 3), (4, 3)]), 3.0)
            is Decision3.AT_MOST_3DELTA
        )

    @pytest.mark.parametrize("mode", BOTH_MODES)
    @pytest.mark.parametrize("norm", ALL_NORMS)
    def test_soundness(self, norm, mode):
        rng = np.random.default_rng(103)
        for _ in range(250):
            d = int(rng.integers(1, 4))
            P = random_curve(rng, int(rng.integers(2, 18)), d)
            Q = random_curve(rng, int(rng.integers(1, 8)), d)
            delta = abs(rng.normal(0, 4))
            decision = decide_3approx(P, Q, delta, norm, mode)
            if decision is Decision3.AT_MOST_3DELTA:
                assert ref_decide(P, Q, 3 * delta * (1 + 1e-9), norm, mode)
            else:
                slack = (1 - 1e-9) if mode is MatchMode.CONTINUOUS else 1.0
                assert not ref_decide(P, Q, delta * slack, norm, mode)


class TestApproxValue:
    def test_identical(self):
        # non-degenerate identical pair: the zero-floor probe certifies a
        # vanishing upper bound
        P = curve([(0, 0), (1, 2), (3, 1)])
        iv, info = approx_value_detailed(P, P, 0.1)
        assert iv.lo == 0.0
        assert iv.hi <= 3.0 * info["ub0"] * 2.0**-50

    def test_identical_degenerate(self):
        P = curve([(2, 3)])
        iv = approx_value(P, P, 0.1)
        assert iv.lo == 0.0 and iv.hi == 0.0

    def test_translate_ratio_three(self):
        P = curve([(0, 0), (1, 2), (3, 1)])
        Q = curve([(0, 5), (1, 7), (3, 6)])
        iv = approx_value(P, Q, 0.1)
        assert iv.lo == 5.0
        assert iv.hi == 15.0
        assert 5.0 in iv

    def test_zero_floor_probe(self):
        # same endpoints, tiny positive distance: takes the zero-floor path
        P = curve([0.0, 1.0, 0.0])
        Q = curve([0.0, 1.0 + 1e-13, 0.0])
        iv, info = approx_value_detailed(P, Q, 0.1)
        assert info["zero_floor"]
        assert iv.lo <= 1e-13 <= iv.hi or iv.hi >= 1e-13

    def test_eps_contract(self):
        with pytest.raises(ValueError):
            approx_value(curve([0]), curve([0]), 0.0)

    @pytest.mark.parametrize("mode", BOTH_MODES)
    def test_sandwich_fuzz(self, mode):
        rng = np.random.default_rng(107)
        for _ in range(120):
            d = int(rng.integers(1, 4))
            norm = ALL_NORMS[int(rng.integers(0, 3))]
            P = random_curve(rng, int(rng.integers(2, 20)), d)
            Q = random_curve(rng, int(rng.integers(1, 9)), d)
            iv = approx_value(P, Q, 0.1, norm, mode)
            if mode is MatchMode.DISCRETE:
                ref = discrete_frechet_exact(P, Q, norm)
            else:
                ref = continuous_frechet_value_ref(P, Q, norm, 1e-9)
            assert iv.lo * (1 - 1e-6) <= ref <= iv.hi * (1 + 1e-6)
            if iv.lo > 0:
                assert iv.hi <= 3.1 * iv.lo * (1 + 1e-6)
