"""
File: linemix/services/trial_store_service.py

Project: linemix

Purpose:
Persist bench runs and their trial records.

This is the ONLY place allowed to:
- write bench_runs / trial_records
- read a stored run back

Design rules:
- Write-once: a run is inserted in one transaction, never updated
- No metric computation here; records arrive fully scored
"""

from __future__ import annotations

import json
import logging
from typing import Optional

from sqlalchemy.orm import Session, sessionmaker

from linemix.io.schemas import dump_json
from linemix.models import BenchRun, TrialRecordRow
from linemix.services.bench_service import BenchReport, to_schema

logger = logging.getLogger("trial_store_service")


class TrialStoreService:
    def __init__(self, session_factory: sessionmaker[Session]) -> None:
        self._session_factory = session_factory

    # -------------------------------------------------
    # Commands
    # -------------------------------------------------
    def save_run(self, report: BenchReport) -> str:
        cfg = report.config
        session = self._session_factory()
        try:
            run = BenchRun(
                scenario=cfg.scenario.name,
                methods=",".join(m.value for m in cfg.methods),
                trials=cfg.trials,
                first_trial=cfg.first_trial,
                seed=str(cfg.seed),
                failed_trials=report.failed_trials,
                report_json=dump_json(to_schema(report)),
            )
            session.add(run)
            session.flush()

            for r in report.records:
                session.add(
                    TrialRecordRow(
                        run_id=run.run_id,
                        trial=r.trial,
                        trial_seed=str(r.seed),
                        method=r.method.value,
                        failed=r.failed,
                        reason=r.reason,
                        consistency_percent=r.consistency_percent,
                        chosen_L=r.chosen_L,
                        iterations_used=r.iterations_used,
                        components_json=None if r.components is None else json.dumps(r.components),
                    )
                )
            session.commit()
            logger.info("stored bench run %s (%d records)", run.run_id, len(report.records))
            return run.run_id
        except Exception:
            session.rollback()
            raise
        finally:
            session.close()

    # -------------------------------------------------
    # Queries
    # -------------------------------------------------
    def load_run(self, run_id: str) -> Optional[dict]:
        session = self._session_factory()
        try:
            run = session.get(BenchRun, run_id)
            if run is None:
                return None
            return {
                "run_id": run.run_id,
                "scenario": run.scenario,
                "methods": run.methods.split(","),
                "trials": run.trials,
                "seed": int(run.seed),
                "failed_trials": run.failed_trials,
                "report": json.loads(run.report_json),
                "records": [
                    {
                        "trial": row.trial,
                        "method": row.method,
                        "failed": row.failed,
                        "reason": row.reason,
                        "consistency_percent": row.consistency_percent,
                        "chosen_L": row.chosen_L,
                        "iterations_used": row.iterations_used,
                    }
                    for row in run.records
                ],
            }
        finally:
            session.close()
