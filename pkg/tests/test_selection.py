import math

import numpy as np
import pytest

from linemix.core.types import ComponentParams, Dataset, MixtureModel, Responsibilities
from linemix.em.config import EmConfig, FitReport
from linemix.em.fit import FitResult
from linemix.errors import ConfigError, OrderSelectionError
from linemix.selection.criteria import Criterion, CriterionKind, n_params, penalty, score
from linemix.selection.order import degenerate_component, fit_orders, score_orders, select_order


def _fake_fit(loglik: float) -> FitResult:
    model = MixtureModel(components=(ComponentParams(0.0, 0.0, 1.0),))
    report = FitReport(
        loglik_trace=(loglik,),
        delta_trace=(),
        iterations_used=0,
        converged=True,
        final_delta=0.0,
    )
    return FitResult(model=model, responsibilities=Responsibilities(np.ones((4, 1))), report=report)


def _fit_with(components, columns) -> FitResult:
    model = MixtureModel(components=tuple(ComponentParams(*c) for c in components))
    matrix = np.asarray(columns, dtype=np.float64)
    report = FitReport(loglik_trace=(-1.0,), delta_trace=(), iterations_used=1, converged=True, final_delta=0.0)
    return FitResult(model=model, responsibilities=Responsibilities(matrix), report=report)


@pytest.fixture
def tiny() -> Dataset:
    return Dataset(x=[1.0, 2.0, 3.0, 4.0], y=[1.0, 2.0, 3.5, 4.0])


class TestCriteria:
    def test_penalties(self):
        assert n_params(3) == 12
        assert penalty(3, 100, Criterion(CriterionKind.AIC)) == 24.0
        assert penalty(3, 100, Criterion(CriterionKind.GIC)) == 36.0
        assert penalty(3, 100, Criterion(CriterionKind.GIC, rho=4.0)) == 60.0
        assert penalty(3, 100, Criterion(CriterionKind.BIC)) == pytest.approx(12 * math.log(100))

    def test_score(self):
        c = Criterion("bic")
        assert c.kind is CriterionKind.BIC
        assert score(-50.0, 2, 10, c) == pytest.approx(100.0 + 8 * math.log(10))

    def test_gic_needs_rho_at_least_one(self):
        with pytest.raises(ConfigError):
            Criterion(CriterionKind.GIC, rho=0.5)

    def test_unknown_kind(self):
        with pytest.raises(ValueError):
            Criterion("hqc")


class TestScoreOrders:
    def test_tie_goes_to_smaller_order(self, tiny):
        # AIC: -2*0 + 8 == -2*4 + 16
        fits = {1: (_fake_fit(0.0), None), 2: (_fake_fit(4.0), None)}
        result = score_orders(tiny, fits, Criterion(CriterionKind.AIC))
        assert result.scores[0].score == result.scores[1].score
        assert result.chosen_L == 1

    def test_picks_minimum(self, tiny):
        fits = {1: (_fake_fit(-100.0), None), 2: (_fake_fit(-10.0), None), 3: (_fake_fit(-9.0), None)}
        result = score_orders(tiny, fits, Criterion(CriterionKind.AIC))
        assert result.chosen_L == 2
        assert result.chosen_fit is fits[2][0]

    def test_infeasible_orders_score_infinity(self, tiny):
        fits = {1: (_fake_fit(-10.0), None), 2: (None, "not enough points")}
        result = score_orders(tiny, fits, Criterion(CriterionKind.BIC))
        assert result.chosen_L == 1
        assert math.isinf(result.scores[1].score)
        assert not result.scores[1].feasible
        assert result.scores[1].reason == "not enough points"

    def test_all_infeasible(self, tiny):
        with pytest.raises(OrderSelectionError):
            score_orders(tiny, {1: (None, "x")}, Criterion(CriterionKind.BIC))


class TestSelectOrder:
    def test_l_max_one(self, two_lines):
        assert select_order(two_lines, 1, Criterion(CriterionKind.BIC)).chosen_L == 1

    def test_large_orders_are_infeasible_not_fatal(self):
        d = Dataset(x=[1.0, 2.0, 3.0, 4.0, 5.0, 6.0], y=[1.0, 2.1, 2.9, 4.2, 5.0, 6.1])
        fits = fit_orders(d, 4)
        assert fits[4][0] is None
        assert "need at least 8" in fits[4][1]
        assert fits[1][0] is not None

    def test_threads_match_serial(self, two_lines):
        serial = fit_orders(two_lines, 3, EmConfig())
        threaded = fit_orders(two_lines, 3, EmConfig(), workers=3)
        for L in serial:
            a, b = serial[L][0], threaded[L][0]
            if a is None:
                assert b is None
                continue
            assert a.report.loglik_trace == b.report.loglik_trace

    def test_rejects_l_max_zero(self, two_lines):
        with pytest.raises(OrderSelectionError):
            fit_orders(two_lines, 0)


class TestDegenerateFits:
    def _columns(self, n_first: int, n_second: int) -> np.ndarray:
        first = np.r_[np.ones(n_first), np.zeros(n_second)]
        return np.column_stack([first, 1.0 - first])

    def test_single_component_is_never_degenerate(self):
        fit = _fit_with([(1.0, 0.0, 1e-6)], np.ones((3, 1)))
        assert degenerate_component(fit, EmConfig()) is None

    def test_healthy_pair_passes(self):
        fit = _fit_with([(1.0, 0.0, 50.0), (-1.0, 400.0, 45.0)], self._columns(60, 70))
        assert degenerate_component(fit, EmConfig()) is None

    def test_component_on_few_points_is_rejected(self):
        fit = _fit_with([(1.0, 0.0, 50.0), (0.8, -112.5, 40.0)], self._columns(80, 3))
        reason = degenerate_component(fit, EmConfig())
        assert reason is not None
        assert reason.startswith("component 2 holds 3.00 effective points")

    def test_collapsed_variance_is_rejected(self):
        # enough support, but sigma2 four orders of magnitude below the other line
        fit = _fit_with([(-1.74, 763.1, 0.004), (1.0, -129.0, 50.0)], self._columns(20, 80))
        reason = degenerate_component(fit, EmConfig())
        assert reason is not None
        assert reason.startswith("component 1 variance")

    def test_thresholds_can_be_disabled(self):
        fit = _fit_with([(-1.74, 763.1, 0.004), (1.0, -129.0, 50.0)], self._columns(2, 80))
        assert degenerate_component(fit, EmConfig(min_component_support=0.0, min_variance_ratio=0.0)) is None

    def test_threshold_validation(self):
        with pytest.raises(ConfigError):
            EmConfig(min_variance_ratio=1.0)
        with pytest.raises(ConfigError):
            EmConfig(min_component_support=-1.0)

    def test_fit_orders_only_keeps_healthy_fits(self, scenario1_batch):
        cfg = EmConfig()
        fits = fit_orders(scenario1_batch, 7, cfg)
        for L, (result, reason) in fits.items():
            if result is None:
                assert reason
            else:
                assert degenerate_component(result, cfg) is None
        assert fits[1][0] is not None
