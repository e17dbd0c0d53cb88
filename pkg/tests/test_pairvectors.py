import math

import numpy as np
import pytest

import reference as ref
from pairsphere.pairvectors import (PairVector, PoleError, ProductKernel,
                                    ZeroVectorError, angular_distance,
                                    concentration_approx,
                                    correlation_distance, hypersphere_project,
                                    inner, inner_with_ones, latitude,
                                    meridian_angle, norm, num_pairs,
                                    parallel_project, summarize)
from pairsphere.clusterings import Clustering, to_pair_vector


def ones(n):
    return PairVector.constant(n, 1.0)


def minus_ones(n):
    return PairVector.constant(n, -1.0)


class TestConstruction:
    def test_invalid_sparse_key(self):
        with pytest.raises(ValueError):
            PairVector.build(4, {(2, 1): 1.0})
        with pytest.raises(ValueError):
            PairVector.build(4, {(1, 4): 1.0})

    def test_kernel_length_mismatch(self):
        with pytest.raises(ValueError):
            PairVector.build(4, kernels=(ProductKernel(1.0, np.ones(3)),))

    def test_constant_kernels_merge(self):
        v = ones(5) + ones(5) + PairVector.constant(5, -0.5)
        assert len(v.kernels) == 1
        assert v.kernels[0].coefficient == pytest.approx(1.5)

    def test_dense_matches_reference(self):
        rng = np.random.default_rng(7)
        for n in range(2, 13):
            v = ref.random_pair_vector(rng, n, kernels=2, sparse=8)
            np.testing.assert_allclose(v.dense(), ref.expand(v), rtol=0,
                                       atol=1e-14)

    def test_algebra_closure_is_linear(self):
        rng = np.random.default_rng(8)
        x = ref.random_pair_vector(rng, 9, kernels=2, sparse=12)
        y = ref.random_pair_vector(rng, 9, kernels=1, sparse=5)
        np.testing.assert_allclose((x + y).dense(), ref.expand(x) + ref.expand(y),
                                   atol=1e-12)
        np.testing.assert_allclose((x * -2.5).dense(), -2.5 * ref.expand(x),
                                   atol=1e-12)


class TestInner:
    def test_clustering_vector_squared_length_is_pair_count(self):
        for labels in ([0, 0, 1, 2], [0] * 6, list(range(5))):
            b = to_pair_vector(Clustering(labels))
            assert inner(b, b) == pytest.approx(num_pairs(len(labels)))

    def test_uniform_vector_mass(self):
        x = PairVector.constant(3, 2.0)
        assert inner(x, ones(3)) == pytest.approx(6.0)
        assert inner_with_ones(x) == pytest.approx(6.0)

    def test_matches_dense_dot(self):
        rng = np.random.default_rng(42)
        v = ref.random_pair_vector(rng, 10, kernels=2, sparse=20)
        w = ref.random_pair_vector(rng, 10, kernels=2, sparse=20)
        expected = ref.d_inner(ref.expand(v), ref.expand(w))
        assert inner(v, w) == pytest.approx(expected, rel=1e-12)

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            inner(ones(3), ones(4))


class TestStructuredVsDenseOracle:
    """inner, norms, latitude and both distances against dense references."""

    def test_all_quantities(self):
        rng = np.random.default_rng(3)
        for trial in range(60):
            n = int(rng.integers(3, 13))
            x = ref.random_pair_vector(rng, n, kernels=int(rng.integers(0, 3)),
                                       sparse=int(rng.integers(0, 12)))
            y = ref.random_pair_vector(rng, n, kernels=int(rng.integers(0, 3)),
                                       sparse=int(rng.integers(0, 12)))
            dx, dy = ref.expand(x), ref.expand(y)
            if ref.d_norm(dx) == 0 or ref.d_norm(dy) == 0:
                continue
            assert inner(x, y) == pytest.approx(ref.d_inner(dx, dy),
                                                rel=1e-12, abs=1e-12)
            assert norm(x) == pytest.approx(ref.d_norm(dx), rel=1e-12)
            assert latitude(x) == pytest.approx(ref.d_latitude(dx), rel=1e-12,
                                                abs=1e-12)
            assert angular_distance(x, y) == pytest.approx(
                ref.d_angular(dx, dy), rel=1e-12, abs=1e-12)
            assert correlation_distance(x, y) == pytest.approx(
                ref.d_correlation(dx, dy), rel=1e-9, abs=1e-9)


class TestAngularDistance:
    def test_self_distance_zero(self):
        # acos(1 - eps) floors at ~1e-8, the inherent float resolution here
        rng = np.random.default_rng(0)
        x = ref.random_pair_vector(rng, 8)
        assert angular_distance(x, x) == pytest.approx(0.0, abs=1e-7)

    def test_opposite_poles(self):
        assert angular_distance(ones(6), minus_ones(6)) == pytest.approx(math.pi)

    def test_zero_vector_rejected(self):
        with pytest.raises(ZeroVectorError):
            angular_distance(PairVector.zero(4), ones(4))

    def test_triangle_inequalities(self):
        rng = np.random.default_rng(11)
        for _ in range(50):
            n = int(rng.integers(4, 10))
            vecs = [ref.random_pair_vector(rng, n) for _ in range(3)]
            dxy = angular_distance(vecs[0], vecs[1])
            dyz = angular_distance(vecs[1], vecs[2])
            dxz = angular_distance(vecs[0], vecs[2])
            assert dxz <= dxy + dyz + 1e-12
            assert dxz >= abs(dxy - dyz) - 1e-12


class TestCorrelationDistance:
    def test_scale_invariance_off_pole(self):
        rng = np.random.default_rng(5)
        x = ref.random_pair_vector(rng, 7)
        assert correlation_distance(x, x * 2.0) == pytest.approx(0.0, abs=1e-7)

    def test_one_argument_on_pole(self):
        rng = np.random.default_rng(6)
        x = ref.random_pair_vector(rng, 7)
        assert correlation_distance(ones(7), x) == pytest.approx(math.pi / 2)

    def test_pole_pairs(self):
        assert correlation_distance(ones(5), ones(5) * 3.0) == 0.0
        assert correlation_distance(ones(5), minus_ones(5)) == math.pi
        assert correlation_distance(minus_ones(5), minus_ones(5) * 0.5) == 0.0


class TestMeridianAngle:
    def test_coincides_with_correlation_distance(self):
        rng = np.random.default_rng(13)
        for _ in range(200):
            n = int(rng.integers(4, 17))
            x = ref.random_pair_vector(rng, n)
            y = ref.random_pair_vector(rng, n)
            assert abs(meridian_angle(x, y)
                       - correlation_distance(x, y)) < 1e-9

    def test_self_angle_zero(self):
        rng = np.random.default_rng(14)
        x = ref.random_pair_vector(rng, 9)
        assert meridian_angle(x, x) == pytest.approx(0.0, abs=2e-7)

    def test_pole_conventions_match(self):
        rng = np.random.default_rng(15)
        x = ref.random_pair_vector(rng, 6)
        assert meridian_angle(ones(6), x) == math.pi / 2
        assert meridian_angle(ones(6), minus_ones(6)) == math.pi
        assert meridian_angle(ones(6) * 0.1, ones(6)) == 0.0


class TestLatitude:
    def test_poles(self):
        assert latitude(minus_ones(8)) == pytest.approx(0.0, abs=1e-7)
        assert latitude(ones(8)) == pytest.approx(math.pi, abs=1e-7)

    def test_half_intra_clustering_sits_on_equator(self):
        # n=4: N=6, two clusters of 2 plus... m_C = 3 needs sizes (2,2) -> 2.
        # Use n=5 with sizes (3,1,1): m_C = 3, N = 10 -> not half. Build the
        # equator case directly: n=4, one cluster of 3 (m_C=3, N=6).
        c = Clustering([0, 0, 0, 1])
        assert c.intra_pairs * 2 == num_pairs(4)
        assert latitude(to_pair_vector(c)) == pytest.approx(math.pi / 2)

    def test_zero_vector_rejected(self):
        with pytest.raises(ZeroVectorError):
            latitude(PairVector.zero(5))

    def test_summary_invariant(self):
        rng = np.random.default_rng(21)
        x = ref.random_pair_vector(rng, 8)
        s = summarize(x)
        expected = math.acos(-s.inner_with_ones
                             / (math.sqrt(num_pairs(8)) * s.norm))
        assert s.latitude == pytest.approx(expected, rel=1e-12)


class TestHypersphereProjection:
    def test_clustering_vectors_fixed(self):
        b = to_pair_vector(Clustering([0, 1, 0, 2, 1]))
        np.testing.assert_allclose(hypersphere_project(b).dense(), b.dense(),
                                   rtol=1e-12)

    def test_positive_constant_maps_to_coarse_pole(self):
        h = hypersphere_project(PairVector.constant(3, 2.0))
        np.testing.assert_allclose(h.dense(), np.ones(3), rtol=1e-12)

    def test_norm_and_idempotence(self):
        rng = np.random.default_rng(10)
        x = ref.random_pair_vector(rng, 10)
        h = hypersphere_project(x)
        assert norm(h) == pytest.approx(math.sqrt(num_pairs(10)), rel=1e-12)
        np.testing.assert_allclose(hypersphere_project(h).dense(), h.dense(),
                                   rtol=1e-12)


class TestParallelProjection:
    def test_equator_projection_has_zero_mass(self):
        rng = np.random.default_rng(17)
        x = ref.random_pair_vector(rng, 9)
        assert inner_with_ones(parallel_project(x, math.pi / 2)) \
            == pytest.approx(0.0, abs=1e-9)

    def test_projecting_to_own_parallel_is_hypersphere_projection(self):
        rng = np.random.default_rng(18)
        x = ref.random_pair_vector(rng, 9)
        p = parallel_project(x, latitude(x))
        np.testing.assert_allclose(p.dense(), hypersphere_project(x).dense(),
                                   atol=1e-9)

    def test_latitude_meridian_idempotence(self):
        rng = np.random.default_rng(19)
        for lam in (0.1 * math.pi, 0.5 * math.pi, 0.9 * math.pi):
            x = ref.random_pair_vector(rng, 11)
            p = parallel_project(x, lam)
            assert latitude(p) == pytest.approx(lam, abs=1e-12)
            assert correlation_distance(p, x) == pytest.approx(0.0, abs=1e-6)
            np.testing.assert_allclose(parallel_project(p, lam).dense(),
                                       p.dense(), atol=1e-12)

    def test_structured_form_is_preserved(self):
        rng = np.random.default_rng(23)
        x = ref.random_pair_vector(rng, 8, kernels=1, sparse=6)
        p = parallel_project(x, 0.4 * math.pi)
        assert set(p.sparse) == set(x.sparse)
        assert len(p.kernels) <= len(x.kernels) + 1

    def test_exact_poles_at_grid_ends(self):
        rng = np.random.default_rng(20)
        x = ref.random_pair_vector(rng, 7)
        np.testing.assert_array_equal(parallel_project(x, 0.0).dense(),
                                      -np.ones(num_pairs(7)))
        np.testing.assert_array_equal(parallel_project(x, math.pi).dense(),
                                      np.ones(num_pairs(7)))

    def test_pole_input_rejected(self):
        with pytest.raises(PoleError):
            parallel_project(ones(6), 0.3)
        with pytest.raises(ValueError):
            parallel_project(PairVector.constant(6, 0.5), 4.0)


class TestConcentrationApprox:
    def test_single_member_communities(self):
        est = concentration_approx(1, 100)
        assert est.exact == 0.0
        assert est.approximation == 0.0

    def test_direct_evaluation(self):
        est = concentration_approx(20, 400)
        assert est.exact == pytest.approx(math.acos(1 - 38 / 399))
        assert est.approximation == pytest.approx(2 * math.sqrt(19 / 399))

    def test_ratio_tends_to_one(self):
        # acos(1-2r) exceeds 2*sqrt(r), so the ratio falls monotonically to 1
        ratios = []
        for n in (10 ** 3, 10 ** 4, 10 ** 5):
            est = concentration_approx(5, n)
            ratios.append(est.exact / est.approximation)
        assert all(r > 1.0 for r in ratios)
        assert ratios[0] > ratios[1] > ratios[2]
        assert ratios[2] == pytest.approx(1.0, abs=1e-4)

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            concentration_approx(0, 10)
