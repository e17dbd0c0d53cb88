import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import reference as ref
from pairsphere import clusterings as cl
from pairsphere.clusterings import (Clustering, PairCounts,
                                    clustering_latitude,
                                    correlation_coefficient, from_pair_vector,
                                    hubert_index, is_clustering_vector,
                                    jaccard_index, pair_counts, rand_index,
                                    read_clustering, to_pair_vector,
                                    write_clustering)
from pairsphere.pairvectors import (PairVector, PoleError, inner, latitude,
                                    num_pairs, correlation_distance)

label_lists = st.lists(st.integers(min_value=0, max_value=5), min_size=2,
                       max_size=10)


class TestClustering:
    def test_canonical_relabeling(self):
        assert Clustering(["b", "a", "b"]) == Clustering([5, 2, 5])
        assert Clustering([0, 1]) != Clustering([0, 0])

    def test_counts(self):
        c = Clustering([0, 0, 1, 1, 1])
        assert c.num_clusters == 2
        assert c.sizes == (2, 3)
        assert c.intra_pairs == 1 + 3

    def test_pole_counts(self):
        n = 6
        assert Clustering.singletons(n).intra_pairs == 0
        assert Clustering.single_cluster(n).intra_pairs == num_pairs(n)
        assert Clustering.singletons(n).num_clusters == n

    def test_from_clusters_must_partition(self):
        with pytest.raises(ValueError):
            Clustering.from_clusters([[0, 1], [1, 2]])


class TestPairVectorBridge:
    def test_singletons_map_to_fine_pole(self):
        v = to_pair_vector(Clustering.singletons(4))
        np.testing.assert_array_equal(v.dense(), -np.ones(6))

    def test_single_cluster_maps_to_coarse_pole(self):
        v = to_pair_vector(Clustering.single_cluster(4))
        np.testing.assert_array_equal(v.dense(), np.ones(6))

    def test_three_node_example(self):
        v = to_pair_vector(Clustering([0, 0, 1]))
        np.testing.assert_array_equal(v.dense(), [1.0, -1.0, -1.0])

    @given(label_lists)
    @settings(max_examples=60, deadline=None)
    def test_roundtrip_bijection(self, labels):
        c = Clustering(labels)
        assert from_pair_vector(to_pair_vector(c)) == c

    def test_dense_is_binary_and_transitive(self):
        rng = np.random.default_rng(2)
        for _ in range(20):
            labels = rng.integers(0, 4, 8).tolist()
            dense = to_pair_vector(Clustering(labels)).dense()
            np.testing.assert_array_equal(np.abs(dense), np.ones(len(dense)))
            np.testing.assert_array_equal(dense, ref.clustering_dense(labels))

    def test_intransitive_vector_rejected(self):
        v = PairVector.build(3, {(0, 1): 2.0, (0, 2): 2.0},
                             kernels=(to_pair_vector(Clustering([0, 1, 2])).kernels))
        # pairs (01, 02, 12) = (+1, +1, -1): transitivity violated
        np.testing.assert_array_equal(v.dense(), [1.0, 1.0, -1.0])
        assert not is_clustering_vector(v)
        with pytest.raises(ValueError):
            from_pair_vector(v)

    def test_nonbinary_vector_rejected(self):
        assert not is_clustering_vector(PairVector.constant(4, 0.5))

    def test_random_sign_vectors_against_unionfind_oracle(self):
        rng = np.random.default_rng(3)
        pairs = ref.dense_pairs(6)
        hits = 0
        for _ in range(200):
            signs = rng.choice([-1.0, 1.0], size=len(pairs))
            v = PairVector.build(6, {p: s for p, s in zip(pairs, signs)})
            # oracle: union positive pairs, check consistency by re-scan
            parent = list(range(6))

            def find(a):
                while parent[a] != a:
                    a = parent[a]
                return a

            for (i, j), s in zip(pairs, signs):
                if s > 0:
                    parent[find(i)] = find(j)
            ok = all((find(i) == find(j)) == (s > 0)
                     for (i, j), s in zip(pairs, signs))
            assert is_clustering_vector(v) == ok
            hits += ok
        assert 0 < hits < 200  # both outcomes exercised


class TestPairCounts:
    def test_equal_clusterings(self):
        c = Clustering([0, 0, 1, 2, 2])
        counts = pair_counts(c, c)
        assert counts.m_t == counts.m_c == counts.m_tc == c.intra_pairs

    def test_three_node_example(self):
        t = Clustering([0, 0, 1])
        c = Clustering([0, 1, 1])
        assert pair_counts(t, c) == PairCounts(3, 1, 1, 0)

    def test_against_pair_scan(self):
        rng = np.random.default_rng(4)
        for _ in range(30):
            t = rng.integers(0, 4, 10).tolist()
            c = rng.integers(0, 3, 10).tolist()
            counts = pair_counts(Clustering(t), Clustering(c))
            assert tuple(counts) == ref.pair_scan_counts(t, c)

    def test_size_mismatch(self):
        with pytest.raises(ValueError):
            pair_counts(Clustering([0, 1]), Clustering([0, 1, 2]))

    @given(label_lists, label_lists)
    @settings(max_examples=60, deadline=None)
    def test_inner_product_identity(self, t_labels, c_labels):
        n = min(len(t_labels), len(c_labels))
        t, c = Clustering(t_labels[:n]), Clustering(c_labels[:n])
        counts = pair_counts(t, c)
        ip = inner(to_pair_vector(t), to_pair_vector(c))
        expected = counts.n_pairs - 2 * (counts.m_t + counts.m_c) \
            + 4 * counts.m_tc
        assert ip == pytest.approx(expected, abs=1e-9)


class TestIndices:
    def test_identical_nondegenerate(self):
        c = Clustering([0, 0, 1])
        counts = pair_counts(c, c)
        assert correlation_coefficient(counts) == 1.0
        assert rand_index(counts) == 1.0
        assert jaccard_index(counts) == 1.0
        assert hubert_index(counts) == 1.0

    def test_three_node_example_values(self):
        counts = PairCounts(3, 1, 1, 0)
        assert correlation_coefficient(counts) == pytest.approx(-0.5)
        assert rand_index(counts) == pytest.approx(1 / 3)
        assert jaccard_index(counts) == 0.0
        assert hubert_index(counts) == pytest.approx(-1 / 3)

    def test_degenerate_raises(self):
        with pytest.raises(PoleError):
            correlation_coefficient(PairCounts(3, 0, 1, 0))
        with pytest.raises(PoleError):
            jaccard_index(PairCounts(3, 0, 0, 0))

    def test_hubert_is_cosine_of_angular_distance(self):
        rng = np.random.default_rng(5)
        for _ in range(40):
            t = Clustering(rng.integers(0, 3, 9).tolist())
            c = Clustering(rng.integers(0, 4, 9).tolist())
            h = hubert_index(pair_counts(t, c))
            da = ref.d_angular(ref.clustering_dense(t.labels),
                               ref.clustering_dense(c.labels))
            assert h == pytest.approx(math.cos(da), abs=1e-12)
            assert h == pytest.approx(2 * rand_index(pair_counts(t, c)) - 1)

    def test_rand_euclidean_bridge(self):
        rng = np.random.default_rng(6)
        for _ in range(30):
            t = Clustering(rng.integers(0, 3, 8).tolist())
            c = Clustering(rng.integers(0, 3, 8).tolist())
            d_e = np.linalg.norm(ref.clustering_dense(t.labels)
                                 - ref.clustering_dense(c.labels))
            expected = 1 - d_e ** 2 / (4 * num_pairs(8))
            assert rand_index(pair_counts(t, c)) == pytest.approx(expected)

    def test_correlation_matches_geometry(self):
        rng = np.random.default_rng(7)
        for _ in range(40):
            t = Clustering(rng.integers(0, 3, 9).tolist())
            c = Clustering(rng.integers(0, 4, 9).tolist())
            counts = pair_counts(t, c)
            if counts.m_t in (0, counts.n_pairs) \
                    or counts.m_c in (0, counts.n_pairs):
                continue
            via_counts = math.acos(correlation_coefficient(counts))
            via_vectors = correlation_distance(to_pair_vector(t),
                                               to_pair_vector(c))
            assert via_counts == pytest.approx(via_vectors, abs=1e-9)
            assert cl.correlation_distance(t, c) \
                == pytest.approx(via_vectors, abs=1e-9)

    def test_clustering_level_pole_conventions(self):
        fine = Clustering.singletons(5)
        coarse = Clustering.single_cluster(5)
        mid = Clustering([0, 0, 1, 1, 2])
        assert cl.correlation_distance(fine, fine) == 0.0
        assert cl.correlation_distance(fine, coarse) == math.pi
        assert cl.correlation_distance(fine, mid) == math.pi / 2
        assert cl.correlation_distance(mid, coarse) == math.pi / 2


class TestLatitude:
    def test_singletons(self):
        assert clustering_latitude(Clustering.singletons(7)) == 0.0

    def test_ppm_truth_latitude(self):
        c = Clustering([k // 100 for k in range(1000)])
        assert clustering_latitude(c) / math.pi == pytest.approx(0.204,
                                                                 abs=5e-4)

    def test_matches_vector_latitude(self):
        rng = np.random.default_rng(8)
        for _ in range(20):
            c = Clustering(rng.integers(0, 4, 9).tolist())
            assert clustering_latitude(c) == pytest.approx(
                latitude(to_pair_vector(c)), abs=1e-7)

    def test_monotone_in_intra_pairs(self):
        rows = []
        for labels in ref.rgs_partitions(6):
            c = Clustering(labels)
            rows.append((c.intra_pairs, clustering_latitude(c)))
        rows.sort()
        for (m1, l1), (m2, l2) in zip(rows, rows[1:]):
            if m1 < m2:
                assert l1 < l2
            else:
                assert l1 == l2


class TestFileFormat:
    def test_roundtrip(self, tmp_path):
        path = tmp_path / "c.truth"
        c = Clustering(["x", "y", "x", "z"])
        nodes = ["n1", "n2", "n3", "n4"]
        write_clustering(path, c, nodes)
        assert read_clustering(path, nodes) == c

    def test_unknown_node_rejected(self, tmp_path):
        path = tmp_path / "c.truth"
        path.write_text("a\t0\nb\t1\n")
        with pytest.raises(ValueError, match="unknown node"):
            read_clustering(path, ["a", "c"])

    def test_missing_assignment_rejected(self, tmp_path):
        path = tmp_path / "c.truth"
        path.write_text("a\t0\n")
        with pytest.raises(ValueError, match="no cluster assignment"):
            read_clustering(path, ["a", "b"])

    def test_duplicate_rejected(self, tmp_path):
        path = tmp_path / "c.truth"
        path.write_text("a\t0\na\t1\nb\t0\n")
        with pytest.raises(ValueError, match="duplicate"):
            read_clustering(path, ["a", "b"])
