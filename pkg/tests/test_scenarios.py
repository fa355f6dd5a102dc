import numpy as np
import pytest

from linemix.errors import ScenarioError
from linemix.scenarios.catalog import BUILTIN_NAMES, ScenarioSpec, TargetSpec, builtin
from linemix.scenarios.generate import generate
from linemix.scenarios.rng import box_muller, make_rng, trial_seed


class TestCatalog:
    def test_builtin_names(self):
        assert BUILTIN_NAMES == ("scenario1", "scenario2", "scenario3")

    def test_builtin_tables(self):
        s1 = builtin("scenario1")
        assert s1.n_targets == 5
        assert all(t.sigma2 == 50.0 for t in s1.targets)
        assert s1.true_params[0] == (-1.4826, 671.0)
        assert builtin("scenario2").n_targets == 10
        s3 = builtin("scenario3", seed=9)
        assert s3.n_targets == 3
        assert s3.l_max == 10
        assert s3.seed == 9

    def test_table_entries(self):
        t = builtin("scenario2").targets[1]
        assert (t.a, t.b, t.sigma2) == (14.3007, -6230.0, 50.0)
        t = builtin("scenario3").targets[2]
        assert (t.a, t.b, t.sigma2) == (1.0, -129.0, 50.0)
        assert builtin("scenario1").n_range == (60, 90)

    def test_unknown_builtin_lists_valid_names(self):
        with pytest.raises(ScenarioError, match="scenario1"):
            builtin("scenario7")

    def test_invalid_specs(self):
        with pytest.raises(ScenarioError):
            TargetSpec(a=1.0, b=0.0, sigma2=0.0)
        with pytest.raises(ScenarioError):
            ScenarioSpec(targets=())
        with pytest.raises(ScenarioError):
            ScenarioSpec(targets=(TargetSpec(1.0, 0.0, 1.0),), n_range=(10, 5))


class TestRng:
    def test_trial_seed(self):
        assert trial_seed(100, 7) == 107

    def test_stream_is_reproducible(self):
        np.testing.assert_array_equal(make_rng(3).random(5), make_rng(3).random(5))

    def test_box_muller_odd_size(self):
        z = box_muller(make_rng(1), 7)
        assert z.shape == (7,)
        assert np.all(np.isfinite(z))
        assert box_muller(make_rng(1), 0).size == 0

    def test_box_muller_moments(self):
        z = box_muller(make_rng(2), 200_000)
        assert abs(z.mean()) < 0.02
        assert abs(z.var() - 1.0) < 0.02


class TestGenerate:
    def test_same_seed_same_batch(self):
        a = generate(builtin("scenario1", seed=7))
        b = generate(builtin("scenario1", seed=7))
        np.testing.assert_array_equal(a.x, b.x)
        np.testing.assert_array_equal(a.y, b.y)
        np.testing.assert_array_equal(a.truth, b.truth)

    def test_different_seed_different_batch(self):
        a = generate(builtin("scenario1", seed=7))
        b = generate(builtin("scenario1", seed=8))
        assert a.n != b.n or not np.array_equal(a.y, b.y)

    def test_batch_layout(self):
        spec = builtin("scenario1", seed=7)
        d = generate(spec)
        counts = np.bincount(d.truth)[1:]
        assert counts.size == 5
        assert np.all((counts >= 60) & (counts <= 90))
        assert d.n == counts.sum()
        assert np.all(d.x == np.round(d.x))
        assert d.x.min() >= 1 and d.x.max() <= d.n

    def test_three_points_on_the_diagonal(self):
        d = generate(ScenarioSpec(targets=(TargetSpec(a=1.0, b=0.0, sigma2=1e-40),), n_range=(3, 3)))
        np.testing.assert_array_equal(d.y, d.x)
        np.testing.assert_array_equal(d.truth, [1, 1, 1])

    def test_noiseless_target_lies_on_its_line(self):
        spec = ScenarioSpec(targets=(TargetSpec(a=2.0, b=3.0, sigma2=1e-40),), n_range=(25, 25))
        d = generate(spec)
        assert d.n == 25
        np.testing.assert_array_equal(d.y, 2.0 * d.x + 3.0)
