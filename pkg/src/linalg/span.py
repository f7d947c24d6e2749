"""Span-membership certificates for congruences modulo a space of q-series.

A certificate states that a target series equals a rational combination of
labeled basis series up to q^N. Membership is evidence at order N; a
non-member is conclusive.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from src.config.constants import MAX_SPAN_ORDER, SPAN_ORDER_FACTOR
from src.core.errors import OrderMismatchError
from src.linalg.matrix import QMatrix, rref
from src.qseries.series import QSeries, series_sum

logger = logging.getLogger(__name__)

LabeledSeries = Tuple[str, QSeries]


@dataclass(frozen=True)
class SpanCertificate:
    """Outcome of one span-membership solve.

    Attributes:
        member: Whether the target lies in the span up to order_checked
        coefficients: Label -> coefficient of a reproducing combination (members only)
        order_checked: Truncation order N of the solve
        rank: Rank of the deduplicated basis matrix
        saturated: True when the rank equals the number of coefficient rows,
            so every series of that order would be a member
        collisions: (dropped label, kept label) for basis series equal to an earlier one
    """

    member: bool
    coefficients: Optional[Dict[str, Fraction]]
    order_checked: int
    rank: int = 0
    saturated: bool = False
    collisions: Tuple[Tuple[str, str], ...] = field(default_factory=tuple)

    def nonzero_coefficients(self) -> Dict[str, Fraction]:
        return {k: v for k, v in (self.coefficients or {}).items() if v}

    def to_dict(self) -> Dict[str, Any]:
        return {
            "member": self.member,
            "coefficients": (
                None
                if self.coefficients is None
                else {k: str(v) for k, v in self.nonzero_coefficients().items()}
            ),
            "order_checked": self.order_checked,
            "rank": self.rank,
            "saturated": self.saturated,
            "collisions": [list(c) for c in self.collisions],
        }


def dedupe_basis(basis: Sequence[LabeledSeries]) -> Tuple[List[LabeledSeries], List[Tuple[str, str]]]:
    """Drop basis series equal to an earlier one, recording which label absorbed them."""
    seen: Dict[QSeries, str] = {}
    kept: List[LabeledSeries] = []
    collisions: List[Tuple[str, str]] = []
    for label, s in basis:
        if s in seen:
            collisions.append((label, seen[s]))
            continue
        seen[s] = label
        kept.append((label, s))
    return kept, collisions


def _solve_span(target: QSeries, basis: Sequence[LabeledSeries]) -> SpanCertificate:
    N = target.order
    for label, s in basis:
        if s.order != N:
            raise OrderMismatchError(
                f"basis series {label} has order {s.order}, target has order {N}"
            )
    kept, collisions = dedupe_basis(basis)
    m = QMatrix.from_series([s for _, s in kept] + [target])
    reduced, pivots = rref(m)
    n_basis = len(kept)
    basis_rank = sum(1 for p in pivots if p < n_basis)
    saturated = basis_rank == N + 1
    logger.debug("span solve: %d series (%d collisions), rank %d, order %d", n_basis, len(collisions), basis_rank, N)
    if pivots and pivots[-1] == n_basis:
        return SpanCertificate(False, None, N, basis_rank, saturated, tuple(collisions))
    coeffs = {label: Fraction(0) for label, _ in kept}
    for i, p in enumerate(pivots):
        coeffs[kept[p][0]] = reduced.entries[i][n_basis]
    recombined = series_sum(((coeffs[label], s) for label, s in kept), N)
    if recombined != target:
        raise ArithmeticError("span certificate failed re-verification")
    return SpanCertificate(True, coeffs, N, basis_rank, saturated, tuple(collisions))


def _warn_if_saturated(cert: SpanCertificate) -> None:
    if cert.saturated:
        logger.warning("span of rank %d is saturated at order %d; membership is vacuous", cert.rank, cert.order_checked)


def span_membership(target: QSeries, basis: Sequence[LabeledSeries]) -> SpanCertificate:
    """Solve target = sum c_i basis_i exactly on the coefficients q^0..q^N.

    Raises:
        OrderMismatchError: If any series has a different truncation order than the target
    """
    cert = _solve_span(target, basis)
    _warn_if_saturated(cert)
    return cert


def verify_certificate(cert: SpanCertificate, target: QSeries, basis: Sequence[LabeledSeries]) -> bool:
    """Recheck a member certificate coefficientwise against the given series."""
    if not cert.member or cert.coefficients is None:
        return False
    lookup = dict(basis)
    N = cert.order_checked
    try:
        combo = series_sum(((c, lookup[label].truncate(N)) for label, c in cert.coefficients.items()), N)
    except (KeyError, ValueError):
        return False
    return combo == target.truncate(N)


def adaptive_span_membership(
    build: Callable[[int], Tuple[QSeries, List[LabeledSeries]]],
    order: int,
) -> SpanCertificate:
    """Span membership with the order raised until N >= SPAN_ORDER_FACTOR * rank.

    Args:
        build: order -> (target, labeled basis), all of that order
        order: Starting truncation order

    Returns:
        Certificate at the first order meeting the margin, or at MAX_SPAN_ORDER.
        Saturation is only reported for this final certificate.
    """
    while True:
        target, basis = build(order)
        cert = _solve_span(target, basis)
        needed = SPAN_ORDER_FACTOR * cert.rank
        if not cert.member or order >= needed or order >= MAX_SPAN_ORDER:
            if order < needed:
                logger.warning("span order capped at %d below margin %d", order, needed)
            _warn_if_saturated(cert)
            return cert
        logger.debug("raising span order %d -> %d (rank %d)", order, min(needed, MAX_SPAN_ORDER), cert.rank)
        order = min(needed, MAX_SPAN_ORDER)
