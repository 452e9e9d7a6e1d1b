import numpy as np
import pytest

from frechetkit.hardgen import (
    GadgetSet1D,
    OVInstance,
    build_hard_pair_1d,
    certify_gadgets,
    hard_pair_sizes,
    ov_brute,
)
from frechetkit.oracle1d import preprocess, query
from frechetkit.reference import discrete_frechet_exact


class TestOVInstance:
    def test_role_swap(self):
        inst = OVInstance(d=1, U=((0,), (1,), (0,)), V=((1,),))
        assert inst.m == 1 and inst.n == 3

    def test_validation(self):
        with pytest.raises(ValueError):
            OVInstance(d=2, U=((0, 1),), V=((1,),))
        with pytest.raises(ValueError):
            OVInstance(d=1, U=((2,),), V=((1,),))
        with pytest.raises(ValueError):
            OVInstance(d=1, U=(), V=((1,),))


class TestOVBrute:
    def test_orthogonal_singletons(self):
        assert ov_brute(OVInstance(2, U=((1, 0),), V=((0, 1),))) == (1, 1)

    def test_no_pair(self):
        assert ov_brute(OVInstance(2, U=((1, 1),), V=((1, 0),))) is None

    def test_first_pair_in_scan_order(self):
        inst = OVInstance(2, U=((1, 1), (0, 1)), V=((1, 0), (1, 1)))
        assert ov_brute(inst) == (1, 2)


class TestBuildPair:
    def test_gap_orthogonal_smallest(self):
        inst = OVInstance(1, U=((0,),), V=((0,),))
        P, Q = build_hard_pair_1d(inst)
        assert discrete_frechet_exact(P, Q) <= 1.0

    def test_gap_no_pair_smallest(self):
        inst = OVInstance(1, U=((1,),), V=((1,),))
        P, Q = build_hard_pair_1d(inst)
        assert discrete_frechet_exact(P, Q) >= 2.0

    def test_integer_coordinates(self):
        inst = OVInstance(3, U=((1, 0, 1), (0, 1, 1)), V=((1, 1, 0), (0, 0, 1)))
        P, Q = build_hard_pair_1d(inst)
        assert np.all(P.values == np.round(P.values))
        assert np.all(Q.values == np.round(Q.values))

    def test_size_formula(self):
        for d, m, n in [(1, 1, 1), (2, 2, 3), (3, 3, 2), (2, 1, 3)]:
            rng = np.random.default_rng(d * 100 + m * 10 + n)
            U = tuple(tuple(int(b) for b in rng.integers(0, 2, d)) for _ in range(m))
            V = tuple(tuple(int(b) for b in rng.integers(0, 2, d)) for _ in range(n))
            inst = OVInstance(d=d, U=U, V=V)
            P, Q = build_hard_pair_1d(inst)
            assert (P.n, Q.n) == hard_pair_sizes(inst)

    def test_q_size_independent_of_n(self):
        d, m = 2, 2
        sizes = set()
        for n in (2, 3, 4):
            inst = OVInstance(d=d, U=((0, 1),) * m, V=((1, 0),) * n)
            sizes.add(hard_pair_sizes(inst)[1])
        assert len(sizes) == 1

    def test_p_size_linear_in_n(self):
        d, m = 2, 2
        p2 = hard_pair_sizes(OVInstance(d, ((0, 1),) * m, ((1, 0),) * 2))[0]
        p3 = hard_pair_sizes(OVInstance(d, ((0, 1),) * m, ((1, 0),) * 3))[0]
        p4 = hard_pair_sizes(OVInstance(d, ((0, 1),) * m, ((1, 0),) * 4))[0]
        assert p3 - p2 == p4 - p3 > 0


class TestCertify:
    def test_default_gadgets_small(self):
        report = certify_gadgets(limits=(2, 2, 2))
        assert report.instances_checked == 436
        assert report.ok, report.violations[:5]

    def test_smallest_limits_count(self):
        report = certify_gadgets(limits=(1, 1, 1))
        assert report.instances_checked == 4
        assert report.ok

    def test_broken_gadgets_detected(self):
        # bring p1 within distance 1 of q1 so the 1*1 bit pair matches
        broken = GadgetSet1D(p1=(1, -1))
        report = certify_gadgets(broken, limits=(1, 1, 1))
        assert not report.ok
        assert any("no pair" in v for v in report.violations)

    def test_structural_violation_reported(self):
        shifted = GadgetSet1D(p_null=9)
        report = certify_gadgets(shifted, limits=(1, 1, 1))
        assert any(v.startswith("structure") for v in report.violations)


class TestOracleCrossCheck:
    def test_oracle_interval_on_hard_pairs(self):
        # the 2-approximate oracle must stay consistent on adversarial pairs
        rng = np.random.default_rng(113)
        for _ in range(20):
            d = int(rng.integers(1, 4))
            m = int(rng.integers(1, 4))
            n = int(rng.integers(m, 4))
            U = tuple(tuple(int(b) for b in rng.integers(0, 2, d)) for _ in range(m))
            V = tuple(tuple(int(b) for b in rng.integers(0, 2, d)) for _ in range(n))
            inst = OVInstance(d=d, U=U, V=V)
            P, Q = build_hard_pair_1d(inst)
            exact = discrete_frechet_exact(P, Q)
            handle = preprocess(P, Q.n)
            iv = query(handle, Q)
            assert iv.lo <= exact <= iv.hi
