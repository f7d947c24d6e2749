"""Unit tests for span-membership certificates."""

import logging
from fractions import Fraction

import pytest

from src.config.constants import MAX_SPAN_ORDER, SPAN_ORDER_FACTOR
from src.core.errors import OrderMismatchError
from src.core.words import e
from src.linalg.span import (
    adaptive_span_membership,
    dedupe_basis,
    span_membership,
    verify_certificate,
)
from src.qseries.brackets import eval_g
from src.qseries.series import QSeries


@pytest.fixture
def basis():
    """Two bracket series and the constant.

    Returns:
        Labeled series of order 20
    """
    return [("1", QSeries.constant(1, 20)), ("g2", eval_g(e(2), 20)), ("g4", eval_g(e(4), 20))]


@pytest.mark.unit
class TestSpanMembership:
    """Test exact membership solves."""

    def test_member_with_coefficients(self, basis):
        """Test that a combination is recovered exactly."""
        target = QSeries.constant(1, 20).scale(3) + eval_g(e(4), 20).scale(Fraction(-1, 2))
        cert = span_membership(target, basis)
        assert cert.member
        assert cert.nonzero_coefficients() == {"1": 3, "g4": Fraction(-1, 2)}
        assert cert.rank == 3
        assert not cert.saturated
        assert verify_certificate(cert, target, basis)

    def test_non_member(self, basis):
        """Test that a series outside the span is reported."""
        cert = span_membership(eval_g(e(3), 20), basis)
        assert not cert.member
        assert cert.coefficients is None
        assert not verify_certificate(cert, eval_g(e(3), 20), basis)

    def test_collisions_recorded(self):
        """Test that repeated basis series are dropped once."""
        s = eval_g(e(2), 10)
        cert = span_membership(s.scale(2), [("a", s), ("b", s)])
        assert cert.member
        assert cert.collisions == (("b", "a"),)
        assert cert.to_dict()["collisions"] == [["b", "a"]]

    def test_saturated_span(self):
        """Test that a full-rank basis is flagged."""
        basis = [("c", QSeries.constant(1, 1)), ("q", QSeries.from_coefficients([0, 1]))]
        cert = span_membership(QSeries.from_coefficients([5, 7]), basis)
        assert cert.member
        assert cert.saturated

    @pytest.mark.edge_case
    def test_order_mismatch(self, basis):
        """Test that all orders must match the target."""
        with pytest.raises(OrderMismatchError):
            span_membership(QSeries.zero(10), basis)

    def test_to_dict_uses_strings(self, basis):
        """Test the JSON form of a certificate."""
        cert = span_membership(eval_g(e(2), 20).scale(Fraction(1, 3)), basis)
        data = cert.to_dict()
        assert data["member"] is True
        assert data["coefficients"] == {"g2": "1/3"}
        assert data["order_checked"] == 20


@pytest.mark.unit
class TestDedupe:
    """Test basis deduplication."""

    def test_keeps_first_label(self):
        """Test order preservation."""
        a, b = QSeries.zero(2), QSeries.constant(1, 2)
        kept, collisions = dedupe_basis([("x", a), ("y", b), ("z", a)])
        assert [label for label, _ in kept] == ["x", "y"]
        assert collisions == [("z", "x")]


@pytest.mark.unit
class TestAdaptiveOrder:
    """Test the order margin."""

    def test_order_raised_to_margin(self):
        """Test that a low starting order is raised to SPAN_ORDER_FACTOR * rank."""
        seen = []

        def build(n):
            seen.append(n)
            basis = [(f"g{k}", eval_g(e(k), n)) for k in (2, 4, 6)]
            return eval_g(e(4), n), basis

        cert = adaptive_span_membership(build, 2)
        assert cert.member
        assert cert.order_checked >= SPAN_ORDER_FACTOR * cert.rank
        assert seen[0] == 2
        assert seen[-1] <= MAX_SPAN_ORDER

    def test_non_member_returns_at_once(self):
        """Test that a non-member is conclusive at the starting order."""
        calls = []

        def build(n):
            calls.append(n)
            return eval_g(e(3), n), [("g2", eval_g(e(2), n))]

        cert = adaptive_span_membership(build, 10)
        assert not cert.member
        assert calls == [10]

    def test_saturation_warning_only_for_final_order(self, caplog):
        """Test that a saturated start order raised past saturation logs no warning."""

        def build(n):
            basis = [("1", QSeries.constant(1, n)), ("g2", eval_g(e(2), n)), ("g4", eval_g(e(4), n))]
            return eval_g(e(4), n), basis

        with caplog.at_level(logging.WARNING, logger="src.linalg.span"):
            cert = adaptive_span_membership(build, 2)
        assert cert.member
        assert not cert.saturated
        assert cert.order_checked > 2
        assert not [r for r in caplog.records if "saturated" in r.getMessage()]

    def test_direct_saturated_solve_warns(self, caplog):
        """Test that a saturated certificate from a single solve is logged."""
        basis = [("c", QSeries.constant(1, 1)), ("q", QSeries.from_coefficients([0, 1]))]
        with caplog.at_level(logging.WARNING, logger="src.linalg.span"):
            span_membership(QSeries.from_coefficients([5, 7]), basis)
        assert any("saturated" in r.getMessage() for r in caplog.records)
