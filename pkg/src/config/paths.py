from __future__ import annotations

import os
from pathlib import Path

from src.config.constants import REPORTS_ENV_VAR


# Centralized paths for verification reports.
# One source of truth for where `qbrackets verify` writes its JSON lines.


def get_reports_base() -> Path:
    """Return the base directory where verification reports are stored.

    Priority order:
    1) Env var QBRACKETS_REPORTS_BASE
    2) Default: outputs/reports
    """
    env = os.getenv(REPORTS_ENV_VAR)
    if env:
        return Path(env)
    return Path("outputs") / "reports"


def list_reports(base: Path | None = None) -> list[Path]:
    """List report files at the base, newest name first."""
    base = base or get_reports_base()
    if not base.exists():
        return []
    return sorted([p for p in base.iterdir() if p.suffix == ".jsonl"], reverse=True)


def make_new_report_path(run_id: str) -> Path:
    """Return the report path for a run at the configured base.

    Ensures the base directory exists; does not create the file.
    """
    base = get_reports_base()
    base.mkdir(parents=True, exist_ok=True)
    return base / f"{run_id}.jsonl"
