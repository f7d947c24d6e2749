"""Check reports and the JSON-lines report writer.

Each report is one flat JSON object per line:
- check_id: registry name of the check
- parameters: the arguments it ran with
- status: pass (exact identity), evidence (span consistency at order N) or fail
- order: truncation order N
- details: check-specific payload (certificates, mismatches, counts)
- elapsed_seconds: wall time
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Optional

from src.core.lincomb import LinComb
from src.core.words import Word
from src.qseries.series import QSeries


class CheckStatus(Enum):
    PASS = "pass"
    EVIDENCE = "evidence"
    FAIL = "fail"

    @property
    def ok(self) -> bool:
        return self is not CheckStatus.FAIL


def to_jsonable(value: Any) -> Any:
    """Rationals as "p/q", words and combinations as canonical text."""
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, (Word, LinComb)):
        return value.render()
    if isinstance(value, QSeries):
        return value.to_dict()
    if isinstance(value, Enum):
        return value.value
    if hasattr(value, "to_dict"):
        return value.to_dict()
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, set, frozenset)):
        return [to_jsonable(v) for v in value]
    return value


@dataclass
class CheckReport:
    check_id: str
    parameters: Dict[str, Any]
    status: CheckStatus
    order: Optional[int] = None
    details: Dict[str, Any] = field(default_factory=dict)
    elapsed_seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return self.status.ok

    def to_dict(self) -> Dict[str, Any]:
        return {
            "check_id": self.check_id,
            "parameters": to_jsonable(self.parameters),
            "status": self.status.value,
            "order": self.order,
            "details": to_jsonable(self.details),
            "elapsed_seconds": round(self.elapsed_seconds, 6),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=False)


@dataclass
class ReportWriter:
    path: Path

    def __post_init__(self) -> None:
        self.path.parent.mkdir(parents=True, exist_ok=True)
        self._buffer: List[str] = []  # serialized lines to append

    def write(self, report: CheckReport) -> None:
        self._buffer.append(report.to_json())

    def flush(self) -> None:
        if not self._buffer:
            return
        with self.path.open("a", encoding="utf-8") as f:
            f.write("\n".join(self._buffer) + "\n")
        self._buffer.clear()


def read_reports(path: Path) -> List[Dict[str, Any]]:
    """Load every report line from a JSON-lines file."""
    with path.open("r", encoding="utf-8") as f:
        return [json.loads(line) for line in f if line.strip()]
