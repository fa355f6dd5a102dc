import json

import pytest

from linemix.baselines.knn import KnnConfig
from linemix.em.config import EmConfig
from linemix.io import schemas
from linemix.methods.factory import MethodSettings, build_method, parse_methods
from linemix.methods.gateway import MethodName
from linemix.errors import ConfigError
from linemix.services.bench_service import (
    PLOT_FILES,
    BenchConfig,
    BenchReport,
    BenchService,
    aggregate,
    run_trial,
    to_schema,
    write_outputs,
)


def _config(spec, methods="em,kmeans,knn", trials=2, **kw) -> BenchConfig:
    return BenchConfig(
        scenario=spec,
        methods=parse_methods(methods),
        trials=trials,
        seed=spec.seed,
        em=EmConfig(),
        l_max=kw.pop("l_max", 3),
        method_settings=MethodSettings(knn=KnnConfig(k=5)),
        **kw,
    )


def _without_timestamp(report: BenchReport) -> dict:
    data = json.loads(schemas.dump_json(to_schema(report)))
    data.pop("generated_at")
    return data


class TestMethods:
    def test_parse_methods(self):
        assert parse_methods("em, KNN,em") == (MethodName.EM, MethodName.KNN)
        assert MethodName.MOS_BIC.selects_order
        assert not MethodName.KMEANS.selects_order

    def test_unknown_method(self):
        with pytest.raises(ConfigError, match="mos-bic"):
            parse_methods("em,svm")

    def test_empty_method_list(self):
        with pytest.raises(ConfigError):
            parse_methods(" , ")

    def test_build_method_names(self):
        for name in MethodName:
            assert build_method(name, MethodSettings()).name is name


class TestTrial:
    def test_one_record_per_method(self, small_spec):
        cfg = _config(small_spec, "em,kmeans,knn,mos-bic")
        records = run_trial(cfg, 0)
        assert [r.method for r in records] == list(cfg.methods)
        for r in records:
            assert r.seed == small_spec.seed
            if r.failed:
                assert r.reason
                continue
            assert 0.0 <= r.consistency_percent <= 100.0
            assert len(r.per_target_error_percent) == 2

        by_method = {r.method: r for r in records}
        assert by_method[MethodName.KMEANS].components is None
        assert by_method[MethodName.KNN].components is None
        em = by_method[MethodName.EM]
        if not em.failed:
            assert len(em.components) == 2
            assert em.chosen_L is None
        bic = by_method[MethodName.MOS_BIC]
        if not bic.failed:
            assert 1 <= bic.chosen_L <= 3

    def test_failures_are_recorded(self, small_spec):
        cfg = BenchConfig(
            scenario=small_spec,
            methods=(MethodName.KNN,),
            trials=1,
            seed=small_spec.seed,
            method_settings=MethodSettings(knn=KnnConfig(k=500)),
        )
        (record,) = run_trial(cfg, 0)
        assert record.failed
        assert "k=500" in record.reason


class TestAggregation:
    def test_single_trial_fold_identity(self, small_spec):
        cfg = _config(small_spec, trials=1)
        report = BenchService(cfg).run()
        for agg in report.aggregates:
            (record,) = [r for r in report.records if r.method is agg.method]
            if record.failed:
                assert agg.consistency_percent is None
                continue
            assert agg.consistency_percent == record.consistency_percent
            assert agg.per_target_error_percent == record.per_target_error_percent
        assert report.total_trials == 1

    def test_merging_trial_ranges_matches_one_run(self, small_spec):
        cfg = _config(small_spec, trials=4)
        service = BenchService(cfg)
        whole = aggregate(cfg, service.run_trials(0, 4))
        merged = aggregate(cfg, service.run_trials(0, 2) + service.run_trials(2, 2))
        assert merged.aggregates == whole.aggregates
        assert merged.failed_trials == whole.failed_trials

    def test_aggregate_is_the_mean_of_records(self, small_spec):
        cfg = _config(small_spec, trials=3)
        report = BenchService(cfg).run()
        for agg in report.aggregates:
            ok = [r for r in report.records if r.method is agg.method and not r.failed]
            if ok:
                expected = sum(r.consistency_percent for r in ok) / len(ok)
                assert agg.consistency_percent == pytest.approx(expected)

    def test_parallel_matches_serial(self, small_spec):
        cfg = _config(small_spec, trials=3)
        serial = BenchService(cfg, workers=1).run()
        parallel = BenchService(cfg, workers=2).run()
        assert _without_timestamp(serial) == _without_timestamp(parallel)

    def test_failure_budget(self, small_spec):
        cfg = _config(small_spec, trials=20)
        report = BenchReport(config=cfg, records=(), aggregates=(), total_trials=20, failed_trials=1)
        assert not report.failure_budget_exceeded
        report = BenchReport(config=cfg, records=(), aggregates=(), total_trials=20, failed_trials=2)
        assert report.failure_budget_exceeded


class TestOutputs:
    def test_known_order_outputs(self, small_spec, tmp_path):
        report = BenchService(_config(small_spec, trials=2)).run()
        names = {p.name for p in write_outputs(report, tmp_path)}
        assert "report.json" in names
        assert PLOT_FILES["consistency"] in names
        assert PLOT_FILES["target_error"] in names
        assert PLOT_FILES["rmse_L"] not in names

        data = json.loads((tmp_path / "report.json").read_text())
        assert data["config"]["methods"] == ["em", "kmeans", "knn"]
        assert data["config"]["trials"] == 2
        assert len(data["trials"]) == 6
        header = (tmp_path / PLOT_FILES["consistency"]).read_text().splitlines()[0]
        assert header == "method,consistency_percent"

    def test_order_selection_outputs(self, small_spec, tmp_path):
        report = BenchService(_config(small_spec, "mos-aic,mos-bic", trials=2)).run()
        names = {p.name for p in write_outputs(report, tmp_path)}
        if any(a.rmse_L is not None for a in report.aggregates):
            assert PLOT_FILES["rmse_L"] in names
            rows = (tmp_path / PLOT_FILES["rmse_L"]).read_text().splitlines()
            assert rows[0] == "method,rmse_L"
