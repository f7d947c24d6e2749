"""Check registry and job execution."""

from __future__ import annotations

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Sequence

from src.config.constants import DEFAULT_KMAX, DEFAULT_MAX_WEIGHT, DEFAULT_ORDER
from src.verify import checks
from src.verify.report import CheckReport

logger = logging.getLogger(__name__)

CHECK_REGISTRY: Dict[str, Callable[..., CheckReport]] = {
    "partition_relation": checks.check_partition_relation,
    "double_shuffle_g": checks.check_double_shuffle_g,
    "derivative_commutes": checks.check_derivative_commutes,
    "gsh_equals_g": checks.check_gsh_equals_g,
    "gsh_routes": checks.check_gsh_routes,
    "gsh_shuffle": checks.check_gsh_shuffle,
    "gsh_depth1_square": checks.check_gsh_depth1_square,
    "thm_derivative_depth1": checks.check_thm_derivative_depth1,
    "ds_sum_identity": checks.check_ds_sum_identity,
    "prop_dgk": checks.check_prop_dgk,
    "lemma_g10": checks.check_lemma_g10,
    "lemma_gdsh1": checks.check_lemma_gdsh1,
    "thm_dgsh23": checks.check_thm_dgsh23,
    "conjecture_formal": checks.check_conjecture_formal,
    "dgsh22_example": checks.check_dgsh22_example,
    "d_closure": checks.check_d_closure,
    "product_laws": checks.check_product_laws,
    "worked_examples": checks.check_worked_examples,
}


def get_check(name: str) -> Callable[..., CheckReport]:
    """Get a check function by registry name.

    Args:
        name: Registry key, e.g. ``prop_dgk``
    """
    key = name.lower().replace("-", "_")
    if key not in CHECK_REGISTRY:
        raise ValueError(f"Unknown check: {name}. Available: {', '.join(sorted(CHECK_REGISTRY))}")
    return CHECK_REGISTRY[key]


@dataclass(frozen=True)
class CheckJob:
    check_id: str
    parameters: Dict[str, Any] = field(default_factory=dict)


def run_job(job: CheckJob) -> CheckReport:
    """Run one job, timing it and logging start and finish."""
    fn = get_check(job.check_id)
    logger.info("start %s %s", job.check_id, job.parameters)
    started = time.perf_counter()
    report = fn(**job.parameters)
    report.elapsed_seconds = time.perf_counter() - started
    logger.info("done %s: %s in %.2fs", job.check_id, report.status.value, report.elapsed_seconds)
    return report


def run_checks(jobs: Sequence[CheckJob], workers: int = 1) -> List[CheckReport]:
    """Run jobs sequentially, or in a process pool when workers > 1; reports keep job order."""
    if workers < 1:
        raise ValueError("workers must be >= 1")
    if workers == 1 or len(jobs) <= 1:
        return [run_job(job) for job in jobs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(run_job, jobs))


def default_suite(
    order: int = DEFAULT_ORDER,
    max_weight: int = DEFAULT_MAX_WEIGHT,
    kmax: int = DEFAULT_KMAX,
) -> List[CheckJob]:
    """Jobs for ``verify all``: every identity at (order, max_weight) plus the congruences."""
    span_kmax = min(kmax, max(1, max_weight - 2))
    return [
        CheckJob("worked_examples", {"order": order}),
        CheckJob("product_laws", {"max_weight": max_weight, "random_triples": 20}),
        CheckJob("partition_relation", {"max_weight": max_weight, "order": order}),
        CheckJob("double_shuffle_g", {"max_weight": max_weight, "order": order}),
        CheckJob("derivative_commutes", {"max_weight": max_weight, "order": order}),
        CheckJob("gsh_equals_g", {"max_weight": max_weight, "order": order}),
        CheckJob("gsh_routes", {"max_weight": max_weight, "order": order}),
        CheckJob("gsh_shuffle", {"max_weight": max_weight, "order": order}),
        CheckJob("gsh_depth1_square", {"max_weight": max_weight, "order": order}),
        CheckJob("thm_derivative_depth1", {"kmax": kmax, "order": order}),
        CheckJob("ds_sum_identity", {"kmax": kmax, "order": order}),
        CheckJob("prop_dgk", {"kmax": span_kmax, "order": order}),
        CheckJob("lemma_g10", {"pairs": [(2, 2), (2, 3), (3, 2)], "order": order}),
        CheckJob("lemma_gdsh1", {"case": "i", "indices": (1, 2, 2), "order": order}),
        CheckJob("lemma_gdsh1", {"case": "i", "indices": (2, 2, 1), "order": order}),
        CheckJob("thm_dgsh23", {"case": "depth2", "indices": (2, 2), "order": order}),
        CheckJob("dgsh22_example", {"order": order}),
    ]
