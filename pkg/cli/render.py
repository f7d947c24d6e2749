"""Text and JSON output for the CLI."""

from __future__ import annotations

import json
from typing import Any, Dict, List, Sequence

import typer
from rich.console import Console
from rich.table import Table

from src.core.lincomb import LinComb
from src.qseries.series import QSeries
from src.verify.report import CheckReport

_STATUS_STYLE = {"pass": "green", "evidence": "cyan", "fail": "bold red"}


def lincomb_payload(expression: str, value: LinComb) -> Dict[str, Any]:
    return {"expression": expression, "result": value.render(), "terms": value.to_dict()}


def series_payload(label: str, series: QSeries) -> Dict[str, Any]:
    return {"expression": label, **series.to_dict()}


def print_json(payload: Any) -> None:
    # bypass rich so stdout stays machine-readable
    typer.echo(json.dumps(payload))


def print_lincomb(console: Console, value: LinComb) -> None:
    console.print(value.render(), markup=False, highlight=False)


def print_series(console: Console, series: QSeries, with_floats: bool = False) -> None:
    console.print(series.render(with_floats=with_floats), markup=False, highlight=False)


def reports_table(reports: Sequence[CheckReport]) -> Table:
    table = Table(title="Verification")
    table.add_column("check")
    table.add_column("parameters")
    table.add_column("status")
    table.add_column("N", justify="right")
    table.add_column("seconds", justify="right")
    for r in reports:
        style = _STATUS_STYLE[r.status.value]
        params = ", ".join(f"{k}={v}" for k, v in r.to_dict()["parameters"].items())
        table.add_row(
            r.check_id,
            params,
            f"[{style}]{r.status.value}[/{style}]",
            "" if r.order is None else str(r.order),
            f"{r.elapsed_seconds:.2f}",
        )
    return table


def failure_lines(reports: Sequence[CheckReport]) -> List[str]:
    """One line per recorded counterexample or non-member."""
    lines = []
    for r in reports:
        if r.ok:
            continue
        details = r.to_dict()["details"]
        for item in details.get("counterexamples", []):
            lines.append(f"{r.check_id}: {item}")
        for label in details.get("non_members", []):
            lines.append(f"{r.check_id}: {label} is not in the span at order {r.order}")
        if "top_weight_matches" in details and not details["top_weight_matches"]:
            lines.append(f"{r.check_id}: top-weight part differs from the expected expansion")
    return lines
