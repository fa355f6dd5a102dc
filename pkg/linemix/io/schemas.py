"""
File: linemix/io/schemas.py

Project: linemix

Purpose:
pydantic models for everything that crosses a file boundary as JSON.
- *In models validate user-provided files (scenario spec files)
- *Out models define the report layouts; their field names are the
  stable public contract of `fit`, `select` and `bench`

Only `generated_at` changes between two identical runs.
"""

from __future__ import annotations

import json
from datetime import datetime, timezone
from pathlib import Path
from typing import Optional, Union

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

from linemix.errors import ScenarioError
from linemix.scenarios.catalog import DEFAULT_N_RANGE, ScenarioSpec, TargetSpec


def utc_now() -> str:
    return datetime.now(timezone.utc).isoformat(timespec="seconds")


# ---------------------------------------------------------------------
# Input: scenario spec file
# ---------------------------------------------------------------------
class TargetIn(BaseModel):
    model_config = ConfigDict(extra="forbid")

    a: float
    b: float
    sigma2: float = Field(gt=0.0)


class ScenarioFileIn(BaseModel):
    model_config = ConfigDict(extra="forbid")

    name: str = "custom"
    targets: list[TargetIn] = Field(min_length=1)
    n_range: tuple[int, int] = DEFAULT_N_RANGE
    seed: int = 0
    l_max: Optional[int] = Field(default=None, ge=1)

    @field_validator("n_range")
    @classmethod
    def _check_range(cls, value: tuple[int, int]) -> tuple[int, int]:
        lo, hi = value
        if lo < 1 or hi < lo:
            raise ValueError(f"n_range must satisfy 1 <= lo <= hi, got [{lo}, {hi}]")
        return value

    def to_spec(self) -> ScenarioSpec:
        return ScenarioSpec(
            targets=tuple(TargetSpec(a=t.a, b=t.b, sigma2=t.sigma2) for t in self.targets),
            n_range=self.n_range,
            seed=self.seed,
            name=self.name,
            l_max=self.l_max,
        )


def load_scenario_file(path: Union[str, Path]) -> ScenarioSpec:
    try:
        raw = Path(path).read_text(encoding="utf-8")
        return ScenarioFileIn.model_validate_json(raw).to_spec()
    except OSError as exc:
        raise ScenarioError(f"cannot read spec file {path}: {exc}") from None
    except ValidationError as exc:
        raise ScenarioError(f"invalid spec file {path}: {exc}") from None


# ---------------------------------------------------------------------
# Output: fit / select
# ---------------------------------------------------------------------
class ComponentOut(BaseModel):
    a: float
    b: float
    sigma2: float
    weight: float


class FitTraceOut(BaseModel):
    loglik_trace: list[float]
    delta_trace: list[float]
    iterations_used: int
    converged: bool
    final_delta: float
    reseeds: list[tuple[int, int]] = []


class EmConfigOut(BaseModel):
    epsilon: float
    max_iterations: int


class TruthMetricsOut(BaseModel):
    matching: str = "optimal cluster-to-target assignment"
    consistency_percent: float
    per_target_error_percent: list[float]


class FitOut(BaseModel):
    generated_at: str = Field(default_factory=utc_now)
    input: str
    n_points: int
    n_components: int
    config: EmConfigOut
    components: list[ComponentOut]
    fit: FitTraceOut
    labels: list[int]
    metrics: Optional[TruthMetricsOut] = None


class OrderScoreOut(BaseModel):
    L: int
    score: Optional[float]
    loglik: Optional[float]
    iterations: int
    feasible: bool
    reason: Optional[str] = None


class SelectOut(BaseModel):
    generated_at: str = Field(default_factory=utc_now)
    input: str
    n_points: int
    criterion: str
    rho: float
    l_max: int
    epsilon: float
    scores: list[OrderScoreOut]
    chosen_L: int
    components: list[ComponentOut]
    fit: FitTraceOut
    labels: list[int]
    metrics: Optional[TruthMetricsOut] = None


# ---------------------------------------------------------------------
# Output: bench
# ---------------------------------------------------------------------
class BenchConfigOut(BaseModel):
    scenario: str
    targets: list[tuple[float, float, float]]
    n_range: tuple[int, int]
    methods: list[str]
    trials: int
    first_trial: int
    seed: int
    trial_seeds: str = "seed + trial index"
    epsilon: float
    max_iterations: Optional[int]
    l_max: int
    rho: float
    knn_k: int
    knn_train_fraction: float
    kmeans_max_iterations: int
    kmeans_tolerance: float


class TrialRecordOut(BaseModel):
    trial: int
    seed: int
    method: str
    failed: bool
    reason: Optional[str] = None
    consistency_percent: Optional[float] = None
    per_target_error_percent: Optional[list[float]] = None
    components: Optional[list[tuple[float, float, float]]] = None
    iterations_used: Optional[int] = None
    chosen_L: Optional[int] = None


class MethodAggregateOut(BaseModel):
    method: str
    trials: int
    failed: int
    consistency_percent: Optional[float]
    per_target_error_percent: Optional[list[float]]
    prmse_a: Optional[list[float]] = None
    prmse_b: Optional[list[float]] = None
    prmse_absolute_a: Optional[list[bool]] = None
    prmse_absolute_b: Optional[list[bool]] = None
    rmse_L: Optional[float] = None
    mean_iterations: Optional[float] = None
    delta_curve: Optional[list[float]] = None


class BenchReportOut(BaseModel):
    generated_at: str = Field(default_factory=utc_now)
    config: BenchConfigOut
    total_trials: int
    failed_trials: int
    methods: list[MethodAggregateOut]
    notes: list[str]
    trials: list[TrialRecordOut]


def dump_json(model: BaseModel) -> str:
    return json.dumps(model.model_dump(mode="json"), indent=2) + "\n"
