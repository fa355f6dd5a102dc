"""
File: linemix/services/bench_service.py

Project: linemix

Purpose:
Monte-Carlo benchmark orchestration.

Responsibilities:
- Derive one seed per trial (base seed + trial index) and generate the batch
- Run every requested method on the same batch
- Record one TrialRecord per (trial, method); failures are recorded, not raised
- Fold the records, in trial order, into per-method aggregates
- Emit the JSON report and the plot-data tables

Rules:
- Trials are independent; with workers > 1 they run in a process pool and
  the result is identical to a serial run
- Aggregates depend on the records only, so runs over disjoint trial
  ranges can be merged
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import partial
from pathlib import Path
from typing import Optional, Sequence

import numpy as np

from linemix.em.config import EmConfig
from linemix.errors import LineMixError
from linemix.evaluation.labels import Labeling
from linemix.evaluation.metrics import consistency, per_target_error, prmse, rmse_count
from linemix.io import schemas
from linemix.io.csv_codec import write_table
from linemix.methods.factory import MethodSettings, build_method
from linemix.methods.gateway import MethodName, TrialContext
from linemix.scenarios.catalog import ScenarioSpec
from linemix.scenarios.generate import generate
from linemix.scenarios.rng import trial_seed

logger = logging.getLogger("bench_service")

# ------------------------------------------------------------------
# Failure policy
# ------------------------------------------------------------------
MAX_FAILED_FRACTION = 0.05

DEFAULT_L_MAX = 10

REPORT_NOTES = (
    "consistency and per-target error use the optimal cluster-to-target assignment "
    "(maximum agreements); unmatched predicted clusters count as errors",
    "KNN is trained on a stratified 40% of each batch and scored on the remaining 60%",
    "PRMSE takes, per trial and per parameter, the nearest fitted line",
    "averaged delta curves carry each trial's last delta forward after it stops",
    "order selection scores an L > 1 fit as infeasible when a component collapses "
    "(too few effective points, or a variance far below the widest component)",
    "PRMSE scale is set by the abscissa draw and the deterministic initialization; "
    "for crossing targets it is not calibrated against external reference tables",
)

PLOT_FILES = {
    "delta": "fig2_deltaL.csv",
    "consistency": "fig5_consistency.csv",
    "target_error": "fig4_target_error.csv",
    "prmse": "table1_prmse.csv",
    "rmse_L": "fig11_rmseL.csv",
}


@dataclass(frozen=True)
class BenchConfig:
    scenario: ScenarioSpec
    methods: tuple[MethodName, ...]
    trials: int
    seed: int
    em: EmConfig = EmConfig()
    l_max: int = DEFAULT_L_MAX
    method_settings: MethodSettings = MethodSettings()
    first_trial: int = 0


@dataclass(frozen=True)
class TrialRecord:
    trial: int
    seed: int
    scenario: str
    method: MethodName
    failed: bool
    reason: Optional[str] = None
    labeling: Optional[Labeling] = field(default=None, repr=False)
    consistency_percent: Optional[float] = None
    per_target_error_percent: Optional[tuple[float, ...]] = None
    components: Optional[tuple[tuple[float, float, float], ...]] = None
    iterations_used: Optional[int] = None
    chosen_L: Optional[int] = None
    delta_trace: Optional[tuple[float, ...]] = field(default=None, repr=False)


@dataclass(frozen=True)
class MethodAggregate:
    method: MethodName
    trials: int
    failed: int
    consistency_percent: Optional[float]
    per_target_error_percent: Optional[tuple[float, ...]]
    prmse_a: Optional[tuple[float, ...]] = None
    prmse_b: Optional[tuple[float, ...]] = None
    prmse_absolute_a: Optional[tuple[bool, ...]] = None
    prmse_absolute_b: Optional[tuple[bool, ...]] = None
    rmse_L: Optional[float] = None
    mean_iterations: Optional[float] = None
    delta_curve: Optional[tuple[float, ...]] = None


@dataclass(frozen=True)
class BenchReport:
    config: BenchConfig
    records: tuple[TrialRecord, ...]
    aggregates: tuple[MethodAggregate, ...]
    total_trials: int
    failed_trials: int

    @property
    def failure_budget_exceeded(self) -> bool:
        return self.failed_trials > MAX_FAILED_FRACTION * self.total_trials


# ------------------------------------------------------------------
# One trial (top level so it can be shipped to worker processes)
# ------------------------------------------------------------------
def run_trial(cfg: BenchConfig, trial: int) -> list[TrialRecord]:
    seed = trial_seed(cfg.seed, trial)
    spec = cfg.scenario.with_seed(seed)
    d = generate(spec)
    ctx = TrialContext(d, seed=seed, n_targets=spec.n_targets, l_max=cfg.l_max, em=cfg.em)

    records: list[TrialRecord] = []
    for name in cfg.methods:
        method = build_method(name, cfg.method_settings)
        try:
            outcome = method.run(ctx)
        except LineMixError as exc:
            logger.warning("trial %d, %s failed: %s", trial, name.value, exc)
            records.append(TrialRecord(trial, seed, spec.name, name, failed=True, reason=str(exc)))
            continue

        records.append(
            TrialRecord(
                trial=trial,
                seed=seed,
                scenario=spec.name,
                method=name,
                failed=False,
                labeling=outcome.labeling,
                consistency_percent=consistency(outcome.labeling, outcome.truth),
                per_target_error_percent=per_target_error(
                    outcome.labeling, outcome.truth, n_targets=spec.n_targets
                ),
                components=outcome.components,
                iterations_used=outcome.iterations_used,
                chosen_L=outcome.chosen_L,
                delta_trace=outcome.delta_trace,
            )
        )
    return records


# ------------------------------------------------------------------
# Aggregation
# ------------------------------------------------------------------
def _mean_curve(traces: Sequence[Sequence[float]]) -> tuple[float, ...]:
    traces = [t for t in traces if t]
    if not traces:
        return ()
    length = max(len(t) for t in traces)
    padded = np.array([list(t) + [t[-1]] * (length - len(t)) for t in traces])
    total = np.zeros(length)
    for row in padded:
        total += row
    return tuple(float(v) for v in total / len(traces))


def _aggregate_method(
    method: MethodName,
    records: Sequence[TrialRecord],
    spec: ScenarioSpec,
) -> MethodAggregate:
    ok = [r for r in records if not r.failed]
    failed = len(records) - len(ok)
    if not ok:
        return MethodAggregate(method, len(records), failed, None, None)

    cons = 0.0
    errors = np.zeros(spec.n_targets)
    for r in ok:
        cons += r.consistency_percent
        errors += np.asarray(r.per_target_error_percent)

    agg = dict(
        consistency_percent=cons / len(ok),
        per_target_error_percent=tuple(float(e) for e in errors / len(ok)),
    )

    fitted = [r for r in ok if r.components]
    if fitted:
        result = prmse(spec.true_params, [[(c[0], c[1]) for c in r.components] for r in fitted])
        iterations = 0
        for r in fitted:
            iterations += r.iterations_used
        agg.update(
            prmse_a=result.prmse_a,
            prmse_b=result.prmse_b,
            prmse_absolute_a=result.absolute_a,
            prmse_absolute_b=result.absolute_b,
            mean_iterations=iterations / len(fitted),
            delta_curve=_mean_curve([r.delta_trace for r in fitted]),
        )

    if method.selects_order:
        agg["rmse_L"] = rmse_count([r.chosen_L for r in ok], spec.n_targets)

    return MethodAggregate(method=method, trials=len(records), failed=failed, **agg)


def aggregate(cfg: BenchConfig, records: Sequence[TrialRecord]) -> BenchReport:
    order = {m: i for i, m in enumerate(cfg.methods)}
    ordered = tuple(sorted(records, key=lambda r: (r.trial, order[r.method])))
    aggregates = tuple(
        _aggregate_method(m, [r for r in ordered if r.method is m], cfg.scenario) for m in cfg.methods
    )
    trials = sorted({r.trial for r in ordered})
    failed = sorted({r.trial for r in ordered if r.failed})
    return BenchReport(
        config=cfg,
        records=ordered,
        aggregates=aggregates,
        total_trials=len(trials),
        failed_trials=len(failed),
    )


# ------------------------------------------------------------------
# Service
# ------------------------------------------------------------------
class BenchService:
    def __init__(self, cfg: BenchConfig, *, workers: int = 1) -> None:
        self._cfg = cfg
        self._workers = max(1, workers)

    def run_trials(self, first: int, count: int) -> list[TrialRecord]:
        indices = range(first, first + count)
        job = partial(run_trial, self._cfg)
        if self._workers > 1 and count > 1:
            with ProcessPoolExecutor(max_workers=self._workers) as pool:
                batches = list(pool.map(job, indices))
        else:
            batches = [job(i) for i in indices]
        return [record for batch in batches for record in batch]

    def run(self) -> BenchReport:
        cfg = self._cfg
        logger.info(
            "bench %s: %d trials from %d, methods=%s, workers=%d",
            cfg.scenario.name,
            cfg.trials,
            cfg.first_trial,
            ",".join(m.value for m in cfg.methods),
            self._workers,
        )
        report = aggregate(cfg, self.run_trials(cfg.first_trial, cfg.trials))
        for agg in report.aggregates:
            logger.info(
                "%s: consistency=%s failed=%d rmse_L=%s",
                agg.method.value,
                "n/a" if agg.consistency_percent is None else f"{agg.consistency_percent:.2f}%",
                agg.failed,
                "n/a" if agg.rmse_L is None else f"{agg.rmse_L:.4f}",
            )
        if report.failed_trials:
            logger.warning("%d of %d trials had a failed method", report.failed_trials, report.total_trials)
        return report


# ------------------------------------------------------------------
# Output
# ------------------------------------------------------------------
def _opt(values) -> Optional[list]:
    return None if values is None else list(values)


def to_schema(report: BenchReport) -> schemas.BenchReportOut:
    cfg = report.config
    ms = cfg.method_settings
    config = schemas.BenchConfigOut(
        scenario=cfg.scenario.name,
        targets=[(t.a, t.b, t.sigma2) for t in cfg.scenario.targets],
        n_range=cfg.scenario.n_range,
        methods=[m.value for m in cfg.methods],
        trials=cfg.trials,
        first_trial=cfg.first_trial,
        seed=cfg.seed,
        epsilon=cfg.em.epsilon,
        max_iterations=cfg.em.max_iterations,
        l_max=cfg.l_max,
        rho=ms.rho,
        knn_k=ms.knn.k,
        knn_train_fraction=ms.knn.train_fraction,
        kmeans_max_iterations=ms.kmeans.max_iterations,
        kmeans_tolerance=ms.kmeans.tolerance,
    )
    methods = [
        schemas.MethodAggregateOut(
            method=a.method.value,
            trials=a.trials,
            failed=a.failed,
            consistency_percent=a.consistency_percent,
            per_target_error_percent=_opt(a.per_target_error_percent),
            prmse_a=_opt(a.prmse_a),
            prmse_b=_opt(a.prmse_b),
            prmse_absolute_a=_opt(a.prmse_absolute_a),
            prmse_absolute_b=_opt(a.prmse_absolute_b),
            rmse_L=a.rmse_L,
            mean_iterations=a.mean_iterations,
            delta_curve=_opt(a.delta_curve),
        )
        for a in report.aggregates
    ]
    trials = [
        schemas.TrialRecordOut(
            trial=r.trial,
            seed=r.seed,
            method=r.method.value,
            failed=r.failed,
            reason=r.reason,
            consistency_percent=r.consistency_percent,
            per_target_error_percent=_opt(r.per_target_error_percent),
            components=_opt(r.components),
            iterations_used=r.iterations_used,
            chosen_L=r.chosen_L,
        )
        for r in report.records
    ]
    return schemas.BenchReportOut(
        config=config,
        total_trials=report.total_trials,
        failed_trials=report.failed_trials,
        methods=methods,
        notes=list(REPORT_NOTES),
        trials=trials,
    )


def write_outputs(report: BenchReport, out_dir: Path) -> list[Path]:
    out_dir.mkdir(parents=True, exist_ok=True)
    written: list[Path] = []
    spec = report.config.scenario

    report_path = out_dir / "report.json"
    report_path.write_text(schemas.dump_json(to_schema(report)), encoding="utf-8")
    written.append(report_path)

    curves = [(a.method.value, a.delta_curve) for a in report.aggregates if a.delta_curve]
    if curves:
        length = max(len(c) for _, c in curves)
        rows = [
            [h + 1] + [c[min(h, len(c) - 1)] for _, c in curves]
            for h in range(length)
        ]
        path = out_dir / PLOT_FILES["delta"]
        write_table(path, ["h"] + [name for name, _ in curves], rows)
        written.append(path)

    scored = [a for a in report.aggregates if a.consistency_percent is not None]
    path = out_dir / PLOT_FILES["consistency"]
    write_table(path, ["method", "consistency_percent"], [[a.method.value, a.consistency_percent] for a in scored])
    written.append(path)

    path = out_dir / PLOT_FILES["target_error"]
    write_table(
        path,
        ["method", "target", "error_percent"],
        [
            [a.method.value, t, e]
            for a in scored
            for t, e in enumerate(a.per_target_error_percent, start=1)
        ],
    )
    written.append(path)

    with_params = [a for a in report.aggregates if a.prmse_a is not None]
    if with_params:
        path = out_dir / PLOT_FILES["prmse"]
        write_table(
            path,
            ["method", "target", "true_a", "true_b", "prmse_a", "prmse_b"],
            [
                [a.method.value, l, ta, tb, pa, pb]
                for a in with_params
                for l, ((ta, tb), pa, pb) in enumerate(zip(spec.true_params, a.prmse_a, a.prmse_b), start=1)
            ],
        )
        written.append(path)

    with_count = [a for a in report.aggregates if a.rmse_L is not None]
    if with_count:
        path = out_dir / PLOT_FILES["rmse_L"]
        write_table(path, ["method", "rmse_L"], [[a.method.value, a.rmse_L] for a in with_count])
        written.append(path)

    return written
