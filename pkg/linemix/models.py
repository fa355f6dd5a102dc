"""
File: linemix/models.py

Project: linemix

Purpose:
SQLAlchemy ORM models for the optional bench trial store.

Design principles:
- One bench_runs row per `bench` invocation, holding the full JSON report
- One trial_records row per (trial, method)
- Rows are written once and never updated
"""

import uuid

from sqlalchemy import (
    Boolean,
    CheckConstraint,
    Column,
    DateTime,
    Float,
    ForeignKey,
    Integer,
    String,
    Text,
    UniqueConstraint,
    func,
)
from sqlalchemy.orm import declarative_base, relationship

Base = declarative_base()


def _uuid() -> str:
    return str(uuid.uuid4())


# ---------------------------------------------------------------------
# Bench run
# ---------------------------------------------------------------------
class BenchRun(Base):
    __tablename__ = "bench_runs"

    run_id = Column(String(36), primary_key=True, default=_uuid)
    scenario = Column(Text, nullable=False)
    methods = Column(Text, nullable=False)
    trials = Column(Integer, nullable=False)
    first_trial = Column(Integer, nullable=False, server_default="0")
    # decimal text: seeds are unsigned 64-bit, wider than a signed INTEGER
    seed = Column(Text, nullable=False)
    failed_trials = Column(Integer, nullable=False)
    report_json = Column(Text, nullable=False)
    created_at = Column(DateTime(timezone=True), server_default=func.now())

    __table_args__ = (
        CheckConstraint("trials >= 1", name="ck_bench_runs_trials"),
        CheckConstraint("failed_trials >= 0", name="ck_bench_runs_failed"),
    )

    records = relationship("TrialRecordRow", back_populates="run", order_by="TrialRecordRow.record_id")


# ---------------------------------------------------------------------
# Trial record (immutable)
# ---------------------------------------------------------------------
class TrialRecordRow(Base):
    __tablename__ = "trial_records"

    record_id = Column(Integer, primary_key=True, autoincrement=True)
    run_id = Column(
        String(36),
        ForeignKey("bench_runs.run_id"),
        nullable=False,
    )
    trial = Column(Integer, nullable=False)
    trial_seed = Column(Text, nullable=False)
    method = Column(Text, nullable=False)
    failed = Column(Boolean, nullable=False)
    reason = Column(Text, nullable=True)
    consistency_percent = Column(Float, nullable=True)
    chosen_L = Column(Integer, nullable=True)
    iterations_used = Column(Integer, nullable=True)
    components_json = Column(Text, nullable=True)

    __table_args__ = (
        UniqueConstraint("run_id", "trial", "method", name="uq_trial_records_run_trial_method"),
        CheckConstraint(
            "consistency_percent IS NULL OR (consistency_percent >= 0 AND consistency_percent <= 100)",
            name="ck_trial_records_consistency",
        ),
    )

    run = relationship("BenchRun", back_populates="records")
