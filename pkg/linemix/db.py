"""
linemix
Database module (single-file)

Provides:
- engine + session factory for the optional bench trial store
- schema creation on first use

The URL comes from --db or LINEMIX_DATABASE_URL; sqlite:///bench.db works
out of the box, postgresql:// URLs use psycopg2.
"""

from __future__ import annotations

from sqlalchemy import create_engine
from sqlalchemy.engine import Engine
from sqlalchemy.orm import Session, sessionmaker

from linemix.models import Base


def make_engine(url: str) -> Engine:
    engine = create_engine(url, pool_pre_ping=True)
    Base.metadata.create_all(engine)
    return engine


def make_session_factory(url: str) -> sessionmaker[Session]:
    return sessionmaker(
        autocommit=False,
        autoflush=False,
        bind=make_engine(url),
    )
