import numpy as np
import pytest

from frechetkit.geometry import (
    Norm,
    PolyCurve,
    as_norm,
    ball_segment_params,
    bbox_diagonal,
    concat,
    curve,
    curve_eval,
    norm_dist,
    repeat,
    subcurve,
)

ALL_NORMS = [Norm.L1, Norm.L2, Norm.LINF]


class TestNormDist:
    def test_345_triangle(self):
        assert norm_dist((0, 0), (3, 4), Norm.L2) == 5.0
        assert norm_dist((0, 0), (3, 4), Norm.LINF) == 4.0
        assert norm_dist((0, 0), (3, 4), Norm.L1) == 7.0

    def test_identity(self):
        assert norm_dist((1.5, -2.0), (1.5, -2.0), Norm.L2) == 0.0

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            norm_dist((0, 0), (1, 2, 3))

    def test_string_tags(self):
        assert as_norm("l2") is Norm.L2
        with pytest.raises(ValueError):
            as_norm("l3")

    @pytest.mark.parametrize("norm", ALL_NORMS)
    def test_triangle_inequality(self, norm):
        rng = np.random.default_rng(41)
        for _ in range(500):
            d = int(rng.integers(1, 5))
            a, b, c = rng.normal(0, 10, (3, d))
            ab = norm_dist(a, b, norm)
            bc = norm_dist(b, c, norm)
            ac = norm_dist(a, c, norm)
            slack = 4 * np.spacing(max(ab, bc, ac, 1.0))
            assert ac <= ab + bc + slack


class TestCurveEval:
    def test_midpoint(self):
        P = curve([0, 10])
        assert curve_eval(P, 1.5)[0] == 5.0

    def test_vertex_exact(self):
        P = curve([(0, 0), (2, 2)])
        assert np.array_equal(curve_eval(P, 2.0), [2.0, 2.0])

    def test_affine(self):
        P = curve([0, 4, 8])
        assert curve_eval(P, 2.25)[0] == 5.0

    def test_out_of_domain(self):
        with pytest.raises(ValueError):
            curve_eval(curve([0, 1]), 2.5)
        with pytest.raises(ValueError):
            curve_eval(curve([0, 1]), 0.5)

    def test_lipschitz_continuity(self):
        rng = np.random.default_rng(7)
        P = PolyCurve(rng.normal(0, 5, (12, 2)))
        L = max(
            norm_dist(P.vertices[i], P.vertices[i + 1]) for i in range(P.n - 1)
        )
        for _ in range(300):
            t = rng.uniform(1, P.n - 1e-9)
            h = rng.uniform(0, min(0.3, P.n - t))
            gap = norm_dist(curve_eval(P, t), curve_eval(P, t + h))
            assert gap <= L * h + 1e-9


class TestCompose:
    def test_concat(self):
        assert concat(curve([0, 1]), curve([2])) == curve([0, 1, 2])

    def test_repeat(self):
        assert repeat(curve([0, 1]), 3) == curve([0, 1, 0, 1, 0, 1])

    def test_empty_identity(self):
        P = curve([3, 4])
        assert concat(P, repeat(curve([9]), 0)) == P

    def test_standalone_empty_rejected(self):
        assert repeat(curve([1]), 0) is None
        with pytest.raises(ValueError):
            concat(repeat(curve([1]), 0))

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            concat(curve([0, 1]), curve([(0, 1)]))


class TestSubcurve:
    def test_linear_restriction(self):
        got = subcurve(curve([0, 10]), 1.2, 1.8)
        assert np.allclose(got.vertices, [[2], [8]], atol=1e-12)

    def test_full_domain(self):
        P = curve([0, 5, 10])
        assert subcurve(P, 1, 3) == P

    def test_interpolation(self):
        got = subcurve(curve([0, 5, 10]), 1.5, 2.5)
        assert np.allclose(got.vertices, [[2.5], [5], [7.5]], atol=1e-12)

    def test_out_of_domain(self):
        with pytest.raises(ValueError):
            subcurve(curve([0, 1]), 0.5, 1.5)


class TestBallSegment:
    def test_tangency(self):
        assert ball_segment_params((0, 1), 1, (-2, 0), (2, 0)) == (0.5, 0.5)

    def test_chord(self):
        assert ball_segment_params((0, 0), 1, (-2, 0), (2, 0)) == (0.25, 0.75)

    def test_disjoint(self):
        assert ball_segment_params((0, 5), 1, (-2, 0), (2, 0)) is None

    def test_degenerate_segment(self):
        assert ball_segment_params((0,), 1, (0.5,), (0.5,)) == (0.0, 1.0)
        assert ball_segment_params((0,), 1, (5.0,), (5.0,)) is None

    @pytest.mark.parametrize("norm", ALL_NORMS)
    def test_boundary_distance(self, norm):
        rng = np.random.default_rng(11)
        hits = 0
        for _ in range(800):
            d = int(rng.integers(1, 4))
            c = rng.normal(0, 2, d)
            a = rng.normal(0, 2, d)
            b = rng.normal(0, 2, d)
            r = abs(rng.normal(0, 2))
            iv = ball_segment_params(c, r, a, b, norm)
            if iv is None:
                continue
            lo, hi = iv
            seg = lambda t: a + t * (b - a)
            if 0.0 < lo:
                assert abs(norm_dist(c, seg(lo), norm) - r) < 1e-9
                hits += 1
            if hi < 1.0:
                assert abs(norm_dist(c, seg(hi), norm) - r) < 1e-9
                hits += 1
            mid = 0.5 * (lo + hi)
            assert norm_dist(c, seg(mid), norm) <= r + 1e-12
        assert hits > 50

    @pytest.mark.parametrize("norm", ALL_NORMS)
    def test_interval_matches_dense_scan(self, norm):
        rng = np.random.default_rng(12)
        for _ in range(200):
            d = int(rng.integers(1, 4))
            c = rng.normal(0, 2, d)
            a = rng.normal(0, 2, d)
            b = rng.normal(0, 2, d)
            r = abs(rng.normal(0, 2))
            iv = ball_segment_params(c, r, a, b, norm)
            ts = np.linspace(0, 1, 41)
            inside = [t for t in ts if norm_dist(c, a + t * (b - a), norm) <= r]
            if iv is None:
                assert not inside
            else:
                lo, hi = iv
                for t in inside:
                    assert lo - 1e-9 <= t <= hi + 1e-9


class TestPolyCurve:
    def test_nonfinite_rejected(self):
        with pytest.raises(ValueError):
            curve([0.0, np.nan])
        with pytest.raises(ValueError):
            curve([0.0, np.inf])

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            curve([])

    def test_immutability(self):
        P = curve([0, 1])
        with pytest.raises(ValueError):
            P.vertices[0] = 5.0

    def test_repeated_vertices_allowed(self):
        P = curve([1, 1, 2, 2])
        assert P.n == 4

    def test_bbox_diagonal(self):
        P = curve([(0, 0), (3, 4)])
        assert bbox_diagonal(P, Norm.L2) == 5.0
        assert bbox_diagonal(P, Norm.L1) == 7.0
