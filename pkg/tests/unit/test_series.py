"""Unit tests for truncated q-series."""

from fractions import Fraction

import pytest

from src.qseries.series import QSeries, series_sum


@pytest.mark.unit
class TestQSeries:
    """Test construction and arithmetic."""

    def test_coefficient_count_must_match_order(self):
        """Test that order N needs N + 1 coefficients."""
        with pytest.raises(ValueError):
            QSeries(3, (1, 2))

    @pytest.mark.edge_case
    def test_negative_order(self):
        """Test that orders are non-negative."""
        with pytest.raises(ValueError):
            QSeries(-1, ())

    def test_from_coefficients_pads_and_truncates(self):
        """Test padding with zeros and cutting extra terms."""
        assert QSeries.from_coefficients([1, 2], order=3).coeffs == (1, 2, 0, 0)
        assert QSeries.from_coefficients([1, 2, 3, 4], order=1).coeffs == (1, 2)

    def test_sum_keeps_smaller_order(self):
        """Test that adding series of different orders truncates to the smaller one."""
        a = QSeries.from_coefficients([1, 1, 1])
        b = QSeries.from_coefficients([0, 2])
        assert a + b == QSeries.from_coefficients([1, 3])
        assert (a - a).is_zero()

    def test_product(self):
        """Test the Cauchy product (1 + q)^2 = 1 + 2q + q^2."""
        a = QSeries.from_coefficients([1, 1, 0, 0])
        assert a * a == QSeries.from_coefficients([1, 2, 1, 0])

    def test_scalar_product(self):
        """Test multiplication by a rational."""
        a = QSeries.from_coefficients([0, 2])
        assert Fraction(1, 2) * a == a * Fraction(1, 2) == QSeries.from_coefficients([0, 1])

    def test_coefficient_beyond_order(self):
        """Test that unknown coefficients cannot be read."""
        with pytest.raises(IndexError):
            QSeries.zero(2).coefficient(3)

    def test_truncate(self):
        """Test lowering and the refusal to raise the order."""
        a = QSeries.from_coefficients([1, 2, 3])
        assert a.truncate(1) == QSeries.from_coefficients([1, 2])
        with pytest.raises(ValueError):
            a.truncate(5)

    def test_first_difference(self):
        """Test location of the first differing coefficient."""
        a = QSeries.from_coefficients([1, 2, 3])
        b = QSeries.from_coefficients([1, 2, 4])
        assert a.first_difference(b) == 2
        assert a.first_difference(a) is None


@pytest.mark.unit
class TestRendering:
    """Test text and JSON forms."""

    def test_render(self):
        """Test exact rendering with the O-term."""
        s = QSeries.from_coefficients([0, 1, Fraction(-1, 12)])
        assert s.render() == "q - 1/12*q^2 + O(q^3)"

    def test_render_integer_coefficients(self):
        """Test integer coefficients without a '*'."""
        assert QSeries.from_coefficients([2, 3]).render() == "2 + 3q + O(q^2)"

    def test_render_with_floats(self):
        """Test that decimals are appended, exact values kept."""
        s = QSeries.from_coefficients([0, 1, Fraction(-1, 12)])
        assert s.render(with_floats=True) == "q - 1/12*q^2 [0.0833333] + O(q^3)"

    def test_render_zero(self):
        """Test the zero series."""
        assert QSeries.zero(2).render() == "0 + O(q^3)"

    def test_json_round_trip(self):
        """Test that JSON keeps exact rationals."""
        s = QSeries.from_coefficients([Fraction(1, 3), 0, -2])
        assert QSeries.from_json(s.to_json()) == s
        assert s.to_dict()["coeffs"] == ["1/3", "0", "-2"]


@pytest.mark.unit
class TestSeriesSum:
    """Test linear combinations of series."""

    def test_combination(self):
        """Test sum c_i s_i."""
        a = QSeries.from_coefficients([1, 0])
        b = QSeries.from_coefficients([0, 1])
        assert series_sum([(2, a), (-3, b)], 1) == QSeries.from_coefficients([2, -3])

    def test_truncates_longer_series(self):
        """Test that longer inputs are cut to the requested order."""
        a = QSeries.from_coefficients([1, 2, 3])
        assert series_sum([(1, a)], 1) == QSeries.from_coefficients([1, 2])

    @pytest.mark.edge_case
    def test_short_series_rejected(self):
        """Test that a series cannot fill a higher order."""
        with pytest.raises(ValueError):
            series_sum([(1, QSeries.zero(1))], 3)
