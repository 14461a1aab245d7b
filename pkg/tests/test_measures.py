import numpy as np
import pytest

from netstab import (
    DegenerateVariableError,
    DependenceMatrix,
    MatrixFormatError,
    MeasureKind,
    MeasureRangeError,
    SampleMatrix,
    ShapeMismatchError,
    hypothesis_count_market_graph,
    load_dependence_csv,
    pearson_sample,
    pearson_true,
    save_dependence_csv,
    sign_probability,
    sign_sample,
    sign_true,
    spanning_tree_count,
)


def pearson_matrix(rho: float) -> DependenceMatrix:
    values = np.array([[1.0, rho], [rho, 1.0]])
    return DependenceMatrix(kind=MeasureKind.PEARSON, values=values)


class TestDependenceMatrix:
    def test_rejects_asymmetric(self):
        with pytest.raises(ValueError, match="symmetric"):
            DependenceMatrix(MeasureKind.PEARSON, np.array([[1.0, 0.2], [0.1, 1.0]]))

    def test_rejects_bad_diagonal(self):
        with pytest.raises(ValueError, match="diagonal"):
            DependenceMatrix(MeasureKind.PEARSON, np.array([[0.9, 0.2], [0.2, 1.0]]))

    def test_rejects_out_of_range_for_kind(self):
        values = np.array([[1.0, -0.5], [-0.5, 1.0]])
        DependenceMatrix(MeasureKind.PEARSON, values)  # fine for correlations
        with pytest.raises(MeasureRangeError):
            DependenceMatrix(MeasureKind.SIGN, values)

    def test_upper_triangle_order(self):
        values = np.array([[1.0, 0.1, 0.2], [0.1, 1.0, 0.3], [0.2, 0.3, 1.0]])
        m = DependenceMatrix(MeasureKind.PEARSON, values)
        assert np.array_equal(m.upper_triangle(), [0.1, 0.2, 0.3])


class TestTrueMeasures:
    def test_pearson_true_normalizes_covariance(self):
        cov = np.array([[4.0, 1.2], [1.2, 9.0]])
        rho = pearson_true(cov)
        assert rho.values[0, 1] == pytest.approx(1.2 / 6.0)
        assert rho.values[0, 0] == 1.0

    def test_pearson_true_of_correlation_is_identity_map(self, uk2010_scale):
        rho = pearson_true(uk2010_scale)
        assert np.allclose(rho.values, uk2010_scale, atol=1e-15)

    def test_pearson_true_rejects_zero_variance(self):
        cov = np.array([[1.0, 0.0], [0.0, 0.0]])
        with pytest.raises(DegenerateVariableError) as excinfo:
            pearson_true(cov)
        assert excinfo.value.index == 1

    def test_arcsine_identity_endpoints(self):
        assert sign_probability(0.0) == pytest.approx(0.5, abs=1e-15)
        assert sign_probability(1.0) == pytest.approx(1.0, abs=1e-15)
        assert sign_probability(-1.0) == pytest.approx(0.0, abs=1e-15)
        assert sign_probability(0.5) == pytest.approx(2.0 / 3.0, abs=1e-15)

    def test_sign_true_maps_elementwise(self):
        m = pearson_matrix(0.49)
        s = sign_true(m)
        assert s.kind is MeasureKind.SIGN
        assert s.values[0, 1] == pytest.approx(0.5 + np.arcsin(0.49) / np.pi)

    def test_sign_true_requires_pearson_input(self):
        s = sign_true(pearson_matrix(0.2))
        with pytest.raises(ValueError, match="Pearson"):
            sign_true(s)


class TestSampleMeasures:
    def test_pearson_sample_matches_numpy(self):
        rng = np.random.default_rng(3)
        data = rng.standard_normal((4, 200))
        est = pearson_sample(SampleMatrix(data=data, n=200))
        assert np.allclose(est.values, np.corrcoef(data), atol=1e-12)
        assert est.n_source == 200

    def test_pearson_sample_degenerate_names_index(self):
        data = np.vstack([np.ones(10), np.arange(10.0)])
        with pytest.raises(DegenerateVariableError) as excinfo:
            pearson_sample(SampleMatrix(data=data, n=10))
        assert excinfo.value.index == 0

    def test_pearson_sample_diagonal_exactly_one(self):
        rng = np.random.default_rng(4)
        est = pearson_sample(SampleMatrix(data=rng.standard_normal((3, 50)), n=50))
        assert np.array_equal(np.diag(est.values), np.ones(3))

    def test_sign_sample_counts_strict_coincidences(self):
        # products: (+,+) and (-,-) coincide; zero deviations never count
        data = np.array(
            [
                [1.0, -1.0, 2.0, 0.0],
                [2.0, -3.0, -1.0, 5.0],
            ]
        )
        est = sign_sample(SampleMatrix(data=data, n=4), center=np.zeros(2))
        # coincidences at t=0 and t=1 only -> 2/4
        assert est.values[0, 1] == pytest.approx(0.5)

    def test_sign_sample_center_shifts_signs(self):
        data = np.array([[10.0, 12.0, 8.0, 14.0], [5.0, 7.0, 3.0, 9.0]])
        centered = sign_sample(SampleMatrix(data=data, n=4), center=np.array([11.0, 6.0]))
        assert centered.values[0, 1] == pytest.approx(1.0)

    def test_sign_sample_rejects_wrong_center_length(self):
        data = np.zeros((3, 5)) + np.arange(5.0)
        with pytest.raises(ShapeMismatchError):
            sign_sample(SampleMatrix(data=data, n=5), center=np.zeros(2))

    def test_sign_sample_converges_to_arcsine_value(self):
        rho = 0.6
        scale = np.array([[1.0, rho], [rho, 1.0]])
        rng = np.random.default_rng(8)
        z = np.linalg.cholesky(scale) @ rng.standard_normal((2, 10**5))
        est = sign_sample(SampleMatrix(data=z, n=10**5), center=np.zeros(2))
        assert abs(est.values[0, 1] - sign_probability(rho)) < 0.01


class TestCounting:
    def test_market_graph_hypothesis_count(self):
        assert hypothesis_count_market_graph(3) == 8
        assert hypothesis_count_market_graph(10) == 2**45
        # N=50 must not overflow: exact big integer expected
        assert hypothesis_count_market_graph(50) == 2**1225

    def test_cayley_tree_count(self):
        assert spanning_tree_count(2) == 1
        assert spanning_tree_count(3) == 3
        assert spanning_tree_count(10) == 10**8
        assert spanning_tree_count(50) == 50**48

    def test_counts_reject_degenerate_sizes(self):
        with pytest.raises(ValueError):
            hypothesis_count_market_graph(0)
        with pytest.raises(ValueError):
            spanning_tree_count(1)


class TestCsv:
    def test_dependence_round_trip_with_kind(self, tmp_path):
        m = sign_true(pearson_matrix(0.3))
        path = tmp_path / "sign.csv"
        save_dependence_csv(path, m)
        loaded = load_dependence_csv(path)
        assert loaded.kind is MeasureKind.SIGN
        assert np.array_equal(loaded.values, m.values)

    def test_missing_kind_header_defaults_to_pearson(self, tmp_path):
        path = tmp_path / "plain.csv"
        path.write_text("1.0,0.2\n0.2,1.0\n")
        assert load_dependence_csv(path).kind is MeasureKind.PEARSON

    def test_unknown_kind_rejected(self, tmp_path):
        path = tmp_path / "odd.csv"
        path.write_text("# kind: kendall\n1.0,0.2\n0.2,1.0\n")
        with pytest.raises(MatrixFormatError, match="kendall"):
            load_dependence_csv(path)
