import itertools

import numpy as np
import pytest

from linemix.baselines.kmeans import KMeansConfig, kmeans, kmeans_fit
from linemix.baselines.knn import KnnConfig, knn, stratified_split
from linemix.core.types import Dataset
from linemix.errors import ConfigError, DatasetError
from linemix.scenarios.catalog import builtin
from linemix.scenarios.generate import generate


def _inertia(points, labels):
    total = 0.0
    for k in np.unique(labels):
        members = points[labels == k]
        total += float(((members - members.mean(axis=0)) ** 2).sum())
    return total


class TestKMeans:
    def test_optimal_on_separated_clusters(self):
        d = Dataset(
            x=[0.0, 1.0, 0.5, 20.0, 21.0, 20.5, 0.2],
            y=[0.0, 0.5, 1.0, 20.0, 20.5, 21.0, 0.8],
        )
        points = d.xy()
        best = min(
            _inertia(points, np.array((0,) + bits))
            for bits in itertools.product((0, 1), repeat=d.n - 1)
            if 1 in bits
        )
        result = kmeans_fit(d, KMeansConfig(K=2, seed=4))
        assert result.inertia_trace[-1] == pytest.approx(best)

    def test_inertia_never_increases(self, scenario1_batch):
        trace = kmeans_fit(scenario1_batch, KMeansConfig(K=5, seed=1)).inertia_trace
        for before, after in zip(trace, trace[1:]):
            assert after <= before * (1 + 1e-12)

    def test_single_cluster(self, two_lines):
        result = kmeans_fit(two_lines, KMeansConfig(K=1))
        assert set(result.labeling.labels) == {1}
        np.testing.assert_allclose(result.centroids[0], two_lines.xy().mean(axis=0))

    def test_deterministic_for_seed(self, scenario1_batch):
        a = kmeans(scenario1_batch, KMeansConfig(K=5, seed=3))
        b = kmeans(scenario1_batch, KMeansConfig(K=5, seed=3))
        np.testing.assert_array_equal(a.labels, b.labels)

    def test_more_clusters_than_points(self):
        with pytest.raises(ConfigError):
            kmeans(Dataset(x=[1.0, 2.0], y=[1.0, 2.0]), KMeansConfig(K=3))


class TestKnn:
    @pytest.fixture
    def train(self):
        return Dataset(
            x=[0.0, 1.0, 0.0, 10.0, 11.0, 10.0],
            y=[0.0, 0.0, 1.0, 10.0, 10.0, 11.0],
            truth=[1, 1, 1, 2, 2, 2],
        )

    def test_majority_vote(self, train):
        test = Dataset(x=[0.5, 10.5, 2.0], y=[0.5, 10.5, 1.0])
        np.testing.assert_array_equal(knn(train, test, KnnConfig(k=3)).labels, [1, 2, 1])

    def test_relabeling_training_truth_relabels_predictions(self, train):
        test = Dataset(x=[0.5, 10.5, 9.0], y=[0.5, 10.5, 8.0])
        swapped = Dataset(x=train.x, y=train.y, truth=3 - train.truth)
        a = knn(train, test, KnnConfig(k=3)).labels
        b = knn(swapped, test, KnnConfig(k=3)).labels
        np.testing.assert_array_equal(b, 3 - a)

    def test_k_one_returns_the_coincident_label(self, train):
        test = Dataset(x=[11.0], y=[10.0])
        np.testing.assert_array_equal(knn(train, test, KnnConfig(k=1)).labels, [2])

    def test_k_equal_to_training_size_gives_global_majority(self):
        train = Dataset(x=[0.0, 1.0, 5.0, 6.0, 7.0], y=[0.0] * 5, truth=[1, 1, 2, 2, 2])
        test = Dataset(x=[0.0, 7.0], y=[0.0, 0.0])
        np.testing.assert_array_equal(knn(train, test, KnnConfig(k=5)).labels, [2, 2])

    def test_k_larger_than_training_set(self, train):
        with pytest.raises(ConfigError):
            knn(train, train, KnnConfig(k=7))

    def test_training_set_needs_truth(self):
        d = Dataset(x=[0.0, 1.0], y=[0.0, 1.0])
        with pytest.raises(DatasetError):
            knn(d, d, KnnConfig(k=1))

    def test_stratified_split(self):
        d = generate(builtin("scenario1", seed=3))
        train, test = stratified_split(d, 0.4, seed=3)
        assert np.intersect1d(train, test).size == 0
        assert train.size + test.size == d.n
        for t in range(1, 6):
            members = np.flatnonzero(d.truth == t)
            n_train = np.isin(members, train).sum()
            assert n_train == round(0.4 * members.size)

    def test_split_keeps_a_point_on_each_side(self):
        d = Dataset(x=[0.0, 1.0, 2.0], y=[0.0, 1.0, 2.0], truth=[1, 1, 2])
        train, test = stratified_split(d, 0.9, seed=0)
        np.testing.assert_array_equal(np.sort(d.truth[train]), [1, 2])
        np.testing.assert_array_equal(d.truth[test], [1])

    def test_invalid_config(self):
        with pytest.raises(ConfigError):
            KnnConfig(train_fraction=1.0)
