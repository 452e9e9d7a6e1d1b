import numpy as np
import pytest

from frechetkit.geometry import Norm, concat, curve
from frechetkit.reference import (
    brute_force_discrete,
    continuous_frechet_decide,
    continuous_frechet_value_ref,
    discrete_frechet_decide,
    discrete_frechet_exact,
)

from conftest import random_curve

ALL_NORMS = [Norm.L1, Norm.L2, Norm.LINF]


class TestDiscreteExact:
    def test_single_pair(self):
        assert discrete_frechet_exact(curve([0]), curve([5])) == 5.0

    def test_identity(self):
        P = curve([(0, 1), (2, 3), (1, 0)])
        assert discrete_frechet_exact(P, P) == 0.0

    def test_zigzag(self):
        assert discrete_frechet_exact(curve([0, 1, 0, 1]), curve([0, 1])) == 1.0

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            discrete_frechet_exact(curve([0]), curve([(0, 1)]))

    @pytest.mark.parametrize("norm", ALL_NORMS)
    def test_symmetry(self, norm):
        rng = np.random.default_rng(5)
        for _ in range(200):
            P = random_curve(rng, int(rng.integers(1, 10)), 2)
            Q = random_curve(rng, int(rng.integers(1, 10)), 2)
            assert discrete_frechet_exact(P, Q, norm) == discrete_frechet_exact(Q, P, norm)


class TestBruteForce:
    def test_equal(self):
        assert brute_force_discrete(curve([0, 1]), curve([0, 1])) == 0.0

    def test_zigzag(self):
        assert brute_force_discrete(curve([0, 1, 0, 1]), curve([0, 1])) == 1.0

    def test_singleton(self):
        assert brute_force_discrete(curve([3]), curve([0, 6])) == 3.0

    def test_size_limit(self):
        with pytest.raises(ValueError):
            brute_force_discrete(curve(list(range(10))), curve(list(range(6))))

    @pytest.mark.parametrize("norm", ALL_NORMS)
    def test_oracle_agreement(self, norm):
        rng = np.random.default_rng(17)
        for _ in range(1000):
            d = int(rng.integers(1, 4))
            P = random_curve(rng, int(rng.integers(1, 8)), d)
            Q = random_curve(rng, int(rng.integers(1, 8)), d)
            assert discrete_frechet_exact(P, Q, norm) == brute_force_discrete(P, Q, norm)


class TestDiscreteDecide:
    def test_worked_examples(self):
        P, Q = curve([0, 1, 0, 1]), curve([0, 1])
        assert discrete_frechet_decide(P, Q, 1.0)
        assert not discrete_frechet_decide(P, Q, 0.99)
        assert discrete_frechet_decide(P, P, 0.0)

    @pytest.mark.parametrize("norm", ALL_NORMS)
    def test_consistent_with_value(self, norm):
        rng = np.random.default_rng(23)
        for _ in range(300):
            P = random_curve(rng, int(rng.integers(1, 12)), 1)
            Q = random_curve(rng, int(rng.integers(1, 12)), 1)
            v = discrete_frechet_exact(P, Q, norm)
            assert discrete_frechet_decide(P, Q, v, norm)
            if v > 0:
                assert not discrete_frechet_decide(P, Q, v * (1 - 1e-12) - 1e-300, norm)


class TestContinuousDecide:
    def test_unit_translation(self):
        P = curve([(0, 0), (2, 0)])
        Q = curve([(0, 1), (2, 1)])
        assert continuous_frechet_decide(P, Q, 1.0)
        assert not continuous_frechet_decide(P, Q, 0.5)

    def test_forced_endpoint(self):
        P, Q = curve([0, 2, 0]), curve([0, 2])
        assert not continuous_frechet_decide(P, Q, 1.9)
        assert continuous_frechet_decide(P, Q, 2.0)

    def test_degenerate_edges(self):
        P = curve([0, 0, 1, 1, 2])
        Q = curve([0, 1, 2])
        assert continuous_frechet_decide(P, Q, 0.0)

    @pytest.mark.parametrize("norm", ALL_NORMS)
    def test_monotone_in_delta(self, norm):
        rng = np.random.default_rng(29)
        for _ in range(300):
            d = int(rng.integers(1, 4))
            P = random_curve(rng, int(rng.integers(2, 8)), d)
            Q = random_curve(rng, int(rng.integers(2, 8)), d)
            d1 = abs(rng.normal(0, 3))
            d2 = d1 + abs(rng.normal(0, 3))
            if continuous_frechet_decide(P, Q, d1, norm):
                assert continuous_frechet_decide(P, Q, d2, norm)

    @pytest.mark.parametrize("norm", ALL_NORMS)
    def test_below_discrete(self, norm):
        # the continuous distance never exceeds the discrete one
        rng = np.random.default_rng(31)
        for _ in range(300):
            d = int(rng.integers(1, 3))
            P = random_curve(rng, int(rng.integers(1, 9)), d)
            Q = random_curve(rng, int(rng.integers(1, 9)), d)
            v = discrete_frechet_exact(P, Q, norm)
            assert continuous_frechet_decide(P, Q, v, norm)


class TestComposition:
    @pytest.mark.parametrize("norm", ALL_NORMS)
    def test_discrete_composition_bound(self, norm):
        rng = np.random.default_rng(37)
        for _ in range(200):
            d = int(rng.integers(1, 3))
            P1 = random_curve(rng, int(rng.integers(1, 6)), d)
            P2 = random_curve(rng, int(rng.integers(1, 6)), d)
            Q1 = random_curve(rng, int(rng.integers(1, 6)), d)
            Q2 = random_curve(rng, int(rng.integers(1, 6)), d)
            bound = max(
                discrete_frechet_exact(P1, Q1, norm),
                discrete_frechet_exact(P2, Q2, norm),
            )
            assert discrete_frechet_exact(concat(P1, P2), concat(Q1, Q2), norm) <= bound

    @pytest.mark.parametrize("norm", ALL_NORMS)
    def test_continuous_composition_bound(self, norm):
        rng = np.random.default_rng(43)
        for _ in range(150):
            d = int(rng.integers(1, 3))
            P1 = random_curve(rng, int(rng.integers(2, 5)), d)
            P2 = random_curve(rng, int(rng.integers(2, 5)), d)
            Q1 = random_curve(rng, int(rng.integers(2, 5)), d)
            Q2 = random_curve(rng, int(rng.integers(2, 5)), d)
            deltas = [
                abs(rng.normal(0, 4)),
            ]
            for delta in deltas:
                if continuous_frechet_decide(P1, Q1, delta, norm) and continuous_frechet_decide(
                    P2, Q2, delta, norm
                ):
                    assert continuous_frechet_decide(
                        concat(P1, P2), concat(Q1, Q2), delta, norm
                    )


class TestContinuousValueRef:
    def test_identity(self):
        P = curve([(0, 0), (1, 1)])
        assert continuous_frechet_value_ref(P, P) == 0.0

    def test_forced_endpoint(self):
        v = continuous_frechet_value_ref(curve([0, 2, 0]), curve([0, 2]), rel_tol=1e-9)
        assert abs(v - 2.0) <= 4e-9

    def test_single_edges_match_discrete(self):
        rng = np.random.default_rng(47)
        for _ in range(100):
            P = random_curve(rng, 2, 1)
            Q = random_curve(rng, 2, 1)
            v = continuous_frechet_value_ref(P, Q, rel_tol=1e-9)
            dv = discrete_frechet_exact(P, Q)
            assert abs(v - dv) <= 1e-8 * max(1.0, dv)

    def test_bracketing_contract(self):
        rng = np.random.default_rng(53)
        for _ in range(50):
            P = random_curve(rng, int(rng.integers(2, 7)), 2)
            Q = random_curve(rng, int(rng.integers(2, 7)), 2)
            v = continuous_frechet_value_ref(P, Q, rel_tol=1e-9)
            assert continuous_frechet_decide(P, Q, v)
            if v > 0:
                assert not continuous_frechet_decide(P, Q, v / (1 + 1e-9) * (1 - 1e-12))
