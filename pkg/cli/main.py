"""Unified CLI for qbrackets.

This module provides a single entry point for the bracket engine:
- Expression expansion in the word algebra
- q-expansions of brackets and regularized brackets
- The verification suite
- Relation search among brackets
"""

from __future__ import annotations

import inspect
import sys
from datetime import datetime
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

import typer
from rich.console import Console

from cli import __version__
from cli.render import (
    failure_lines,
    lincomb_payload,
    print_json,
    print_lincomb,
    print_series,
    reports_table,
    series_payload,
)
from src.core.errors import AlgebraDomainError, ExpressionSyntaxError

try:
    sys.stdout.reconfigure(encoding="utf-8")
    sys.stderr.reconfigure(encoding="utf-8")
except Exception:
    pass

# Initialize Typer app and console
app = typer.Typer(
    name="qbrackets",
    help="Exact q-analogues of multiple zeta values: brackets, bi-brackets and their identities",
    add_completion=False,
)
console = Console(legacy_windows=False)
err_console = Console(stderr=True, legacy_windows=False)

# Exit codes
EXIT_OK, EXIT_FAILURE, EXIT_USAGE = 0, 1, 2


def _fail(e: Exception) -> None:
    """Print an error and exit: 2 for syntax/domain/argument errors, 1 otherwise."""
    err_console.print(f"[bold red]Error:[/bold red] {e}", highlight=False)
    code = EXIT_USAGE if isinstance(e, (ExpressionSyntaxError, AlgebraDomainError, ValueError)) else EXIT_FAILURE
    raise typer.Exit(code=code)


def _parse_indices(text: Optional[str]) -> Optional[List[int]]:
    if text is None:
        return None
    return [int(p) for p in text.strip().strip("()[]").split(",") if p.strip()]


@app.command()
def expand(
    expression: str = typer.Argument(..., help="Expression, e.g. 'e(2) boxast e(3)'"),
    as_json: bool = typer.Option(False, "--json", help="Emit JSON"),
) -> None:
    """Evaluate an expression in the word algebra."""
    try:
        from cli.parser import evaluate

        value = evaluate(expression)
    except Exception as e:
        _fail(e)
        return
    if as_json:
        print_json(lincomb_payload(expression, value))
    else:
        print_lincomb(console, value)


@app.command()
def qseries(
    expression: str = typer.Argument(..., help="Expression whose bi-bracket image is expanded"),
    order: int = typer.Option(20, "--order", "-N", min=0, help="Truncation order"),
    floats: bool = typer.Option(False, "--float", help="Add decimal approximations"),
    as_json: bool = typer.Option(False, "--json", help="Emit JSON"),
) -> None:
    """q-expansion of the bracket map applied to an expression."""
    try:
        from cli.parser import evaluate
        from src.qseries.brackets import eval_map_g

        series = eval_map_g(evaluate(expression), order)
    except Exception as e:
        _fail(e)
        return
    if as_json:
        print_json(series_payload(expression, series))
    else:
        print_series(console, series, floats)


@app.command()
def gsh(
    indices: str = typer.Argument(..., help="Comma-separated indices, e.g. 1,2,3"),
    order: int = typer.Option(20, "--order", "-N", min=0, help="Truncation order"),
    floats: bool = typer.Option(False, "--float", help="Add decimal approximations"),
    as_json: bool = typer.Option(False, "--json", help="Emit JSON"),
) -> None:
    """q-expansion of a shuffle-regularized bracket of any depth."""
    try:
        from src.qseries.regularized import GshIndex, eval_gsh

        idx = GshIndex.parse(indices)
        series = eval_gsh(idx, order)
    except Exception as e:
        _fail(e)
        return
    if as_json:
        print_json(series_payload(idx.label(), series))
    else:
        print_series(console, series, floats)


def _index_pairs(indices: List[int]) -> List[Tuple[int, int]]:
    """Group a flat index list into (k1, k2) pairs."""
    if not indices or len(indices) % 2:
        raise ValueError(f"--indices needs an even number of entries for pairs, got {len(indices)}")
    return [(indices[i], indices[i + 1]) for i in range(0, len(indices), 2)]


def _check_jobs(cfg: Any, flags: Dict[str, Any]) -> List[Any]:
    from src.verify.runner import CheckJob, default_suite, get_check

    jobs: List[Any] = []
    for name in cfg.checks:
        if name == "all":
            jobs.extend(default_suite(cfg.order, cfg.max_weight, cfg.kmax))
            continue
        accepted = inspect.signature(get_check(name)).parameters
        given = {k: v for k, v in flags.items() if v is not None}
        if "pairs" in accepted and "indices" in given:
            given["pairs"] = _index_pairs(given.pop("indices"))
        rejected = sorted(k for k in given if k not in accepted)
        if rejected:
            raise ValueError(f"check {name} does not take {', '.join('--' + k for k in rejected)}")
        available = {"order": cfg.order, "max_weight": cfg.max_weight, "kmax": cfg.kmax, **given}
        params = {k: v for k, v in available.items() if k in accepted and v is not None}
        params.update(cfg.parameters.get(name, {}))
        missing = [p.name for p in accepted.values() if p.default is inspect.Parameter.empty and p.name not in params]
        if missing:
            raise ValueError(f"check {name} needs: {', '.join('--' + m for m in missing)}")
        jobs.append(CheckJob(name, params))
    return jobs


@app.command()
def verify(
    check: str = typer.Argument("all", help="Check id, or 'all' for the default suite"),
    config: Path = typer.Option(  # noqa: B008
        None,
        "--config",
        exists=True,
        dir_okay=False,
        readable=True,
        help="Path to config (.toml or .json)",
    ),
    order: Optional[int] = typer.Option(None, "--order", "-N", help="Truncation order"),
    max_weight: Optional[int] = typer.Option(None, "--max-weight", help="Weight bound for sweeps"),
    kmax: Optional[int] = typer.Option(None, "--kmax", help="Largest k for depth-one checks"),
    case: Optional[str] = typer.Option(None, "--case", help="Lemma/theorem case (i, ii, iii, depth2, depth3)"),
    indices: Optional[str] = typer.Option(None, "--indices", help="Comma-separated indices"),
    workers: Optional[int] = typer.Option(None, "--workers", "-j", help="Parallel worker processes"),
    out: Optional[Path] = typer.Option(None, "--out", "-o", help="JSON-lines report file"),  # noqa: B008
    save: bool = typer.Option(False, "--save", help="Write a report under the reports directory"),
    log_level: Optional[str] = typer.Option(None, "--log-level", help="DEBUG, INFO, WARNING or ERROR"),
    as_json: bool = typer.Option(False, "--json", help="Emit one JSON report per line"),
) -> None:
    """Run verification checks and report pass / evidence / fail."""
    try:
        from cli.config import VerifyConfig, load_verify_config
        from src.config.logging import configure_logging
        from src.config.paths import make_new_report_path
        from src.verify.report import ReportWriter
        from src.verify.runner import run_checks

        cfg = load_verify_config(config) if config else VerifyConfig(checks=[check])
        overrides = {
            "order": order,
            "max_weight": max_weight,
            "kmax": kmax,
            "workers": workers,
            "output": out,
            "log_level": log_level.upper() if log_level else None,
        }
        if config and check != "all":
            overrides["checks"] = [check]
        cfg = VerifyConfig(**cfg.model_copy(update={k: v for k, v in overrides.items() if v is not None}).model_dump())
        configure_logging(cfg.log_level)

        jobs = _check_jobs(cfg, {"case": case, "indices": _parse_indices(indices)})
        reports = run_checks(jobs, cfg.workers)

        path = cfg.output
        if path is None and save:
            path = make_new_report_path(datetime.now().strftime("%Y%m%d_%H%M%S"))
        if path is not None:
            writer = ReportWriter(Path(path))
            for r in reports:
                writer.write(r)
            writer.flush()
    except Exception as e:
        _fail(e)
        return

    if as_json:
        for r in reports:
            typer.echo(r.to_json())
    else:
        console.print(reports_table(reports))
        for line in failure_lines(reports):
            console.print(f"[bold red]{line}[/bold red]", markup=True, highlight=False)
        if path is not None:
            console.print(f"Report: {path}")
    if not all(r.ok for r in reports):
        raise typer.Exit(code=EXIT_FAILURE)


@app.command()
def relations(
    config: Path = typer.Option(  # noqa: B008
        None,
        "--config",
        exists=True,
        dir_okay=False,
        readable=True,
        help="Path to config (.toml or .json)",
    ),
    weight: Optional[int] = typer.Option(None, "--weight", "-w", help="Weight bound"),
    max_depth: Optional[int] = typer.Option(None, "--max-depth", "-d", help="Depth bound"),
    order: Optional[int] = typer.Option(None, "--order", "-N", help="Truncation order"),
    exact_weight: Optional[bool] = typer.Option(None, "--exact-weight/--up-to-weight", help="Only the given weight"),
    extra: Optional[List[str]] = typer.Option(None, "--extra", help="Extra word, e.g. 'e(4,1)'; repeatable"),  # noqa: B008
    as_json: bool = typer.Option(False, "--json", help="Emit JSON"),
) -> None:
    """Search for linear relations among brackets of bounded weight and depth."""
    try:
        from cli.config import RelationsConfig, load_relations_config
        from src.verify.relations import find_relations, relation_to_dict

        cfg = load_relations_config(config) if config else RelationsConfig()
        overrides = {
            "weight": weight,
            "max_depth": max_depth,
            "order": order,
            "exact_weight": exact_weight,
            "extra_words": extra or None,
        }
        cfg = RelationsConfig(**cfg.model_copy(update={k: v for k, v in overrides.items() if v is not None}).model_dump())
        found = find_relations(cfg.weight, cfg.max_depth, cfg.order, cfg.exact_weight, cfg.words())
    except Exception as e:
        _fail(e)
        return

    if as_json:
        print_json({"parameters": cfg.model_dump(mode="json"), "relations": [relation_to_dict(r) for r in found]})
        return
    console.print(f"[bold]{len(found)} relation(s)[/bold] among brackets of weight <= {cfg.weight}, depth <= {cfg.max_depth}, N = {cfg.order}")
    for r in found:
        console.print(f"  0 = {r.render()}", markup=False, highlight=False)


@app.command()
def version() -> None:
    """Show version information."""
    console.print(f"qbrackets CLI v{__version__}")
    console.print("Exact bracket and bi-bracket engine with verification suite")


def main() -> None:
    """Entry point for CLI."""
    app()


if __name__ == "__main__":
    main()
