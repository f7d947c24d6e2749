"""Unit tests for the quasi-shuffle, stuffle and shuffle products.

Tests cover:
- Worked expansions of small products
- The binary e0/e1 encoding
- Domain restrictions of the h1-only products
- The double shuffle defect
"""

from fractions import Fraction

import pytest

from src.algebra.products import (
    BinaryWord,
    boxast,
    ds,
    from_binary,
    harmonic,
    shuffle,
    shuffle_binary,
    to_binary,
)
from src.core.errors import AlgebraDomainError
from src.core.lincomb import LinComb, lincomb_sum
from src.core.words import EMPTY_WORD, e


@pytest.mark.unit
class TestBoxast:
    """Test the quasi-shuffle product with Bernoulli corrections."""

    def test_e2_e3(self):
        """Test e2 boxast e3 = e2e3 + e3e2 + e5 - 1/12 e3."""
        expected = lincomb_sum(
            [(1, e(2) + e(3)), (1, e(3) + e(2)), (1, e(5)), (Fraction(-1, 12), e(3))]
        )
        assert boxast(e(2), e(3)) == expected

    def test_e1_e1(self):
        """Test e1 boxast e1 = 2 e1e1 + e2 - e1."""
        assert boxast(e(1), e(1)) == lincomb_sum([(2, e(1) + e(1)), (1, e(2)), (-1, e(1))])

    def test_bi_indexed_letters(self):
        """Test that upper indices add with a binomial factor."""
        a, b = e(1, 1), e(1, 2)
        expected = lincomb_sum([(1, a + b), (1, b + a), (3, e(2, 3)), (-3, e(1, 3))])
        assert boxast(a, b) == expected

    def test_unit(self):
        """Test that the empty word is the unit."""
        x = e(2) + e(3, 1)
        assert boxast(EMPTY_WORD, x) == LinComb.word(x)

    def test_linear_in_each_argument(self):
        """Test bilinearity on a combination."""
        x = LinComb.word(e(2), 2) + LinComb.word(e(1))
        assert boxast(x, e(3)) == boxast(e(2), e(3)) * 2 + boxast(e(1), e(3))

    def test_commutative(self):
        """Test u boxast v = v boxast u on a depth-2 pair."""
        u, v = e(1) + e(2, 1), e(3)
        assert boxast(u, v) == boxast(v, u)


@pytest.mark.unit
class TestHarmonic:
    """Test the stuffle product."""

    def test_e2_e3(self):
        """Test e2 * e3 = e2e3 + e3e2 + e5."""
        assert harmonic(e(2), e(3)) == lincomb_sum([(1, e(2) + e(3)), (1, e(3) + e(2)), (1, e(5))])

    def test_depth_two_with_letter(self):
        """Test e1 * e1e2 by the recursive rule."""
        expected = lincomb_sum(
            [(2, e(1) + e(1) + e(2)), (1, e(1) + e(2) + e(1)), (1, e(2) + e(2)), (1, e(1) + e(3))]
        )
        assert harmonic(e(1), e(1) + e(2)) == expected

    @pytest.mark.edge_case
    def test_rejects_upper_indices(self):
        """Test that words with d > 0 are outside the domain."""
        with pytest.raises(AlgebraDomainError):
            harmonic(e(1, 1), e(2))


@pytest.mark.unit
class TestShuffle:
    """Test the shuffle product."""

    def test_e1_e2(self):
        """Test e1 sh e2 = 2 e1e2 + e2e1."""
        assert shuffle(e(1), e(2)) == lincomb_sum([(2, e(1) + e(2)), (1, e(2) + e(1))])

    def test_e2_e3(self):
        """Test e2 sh e3 = e3e2 + 3 e2e3 + 6 e1e4."""
        expected = lincomb_sum([(1, e(3) + e(2)), (3, e(2) + e(3)), (6, e(1) + e(4))])
        assert shuffle(e(2), e(3)) == expected

    def test_binary_shuffle_counts(self):
        """Test that shuffling words of lengths 2 and 2 gives C(4,2) terms in total."""
        out = shuffle_binary(BinaryWord((1, 0)), BinaryWord((1, 1)))
        assert sum(out.values()) == 6

    @pytest.mark.edge_case
    def test_rejects_upper_indices(self):
        """Test the h1 restriction."""
        with pytest.raises(AlgebraDomainError):
            shuffle(e(2), e(2, 1))


@pytest.mark.unit
class TestBinaryEncoding:
    """Test the e0/e1 encoding."""

    def test_encode(self):
        """Test e_k -> e1 e0^(k-1)."""
        assert to_binary(e(3) + e(1)).bits == (1, 0, 0, 1)

    def test_decode(self):
        """Test the inverse map."""
        assert from_binary(BinaryWord((1, 0, 1, 0, 0))) == e(2) + e(3)

    @pytest.mark.edge_case
    def test_decode_rejects_leading_e0(self):
        """Test that a word starting with e0 encodes nothing."""
        with pytest.raises(AlgebraDomainError):
            from_binary(BinaryWord((0, 1)))

    @pytest.mark.edge_case
    def test_invalid_bits(self):
        """Test that only 0 and 1 are bits."""
        with pytest.raises(ValueError):
            BinaryWord((2,))


@pytest.mark.unit
class TestDefect:
    """Test the double shuffle defect."""

    @pytest.mark.parametrize(
        "u,v,expected",
        [
            (e(1), e(2), [(1, e(3)), (-1, e(1) + e(2))]),
            (e(1), e(3), [(1, e(4)), (-1, e(1) + e(3)), (-1, e(2) + e(2))]),
            (e(2), e(2), [(1, e(4)), (-4, e(1) + e(3))]),
        ],
    )
    def test_small_defects(self, u, v, expected):
        """Test hand-computed defects."""
        assert ds(u, v) == lincomb_sum(expected)

    def test_defect_with_unit_vanishes(self):
        """Test ds(1, w) = 0."""
        assert ds(EMPTY_WORD, e(2) + e(1)).is_zero()
