"""Unit tests for letters, words and the word parser.

Tests cover:
- Letter validation and rendering
- Word weight, depth and subalgebra predicates
- Parsing of the e(k) / e(k,d) syntax
"""

import pytest

from src.core.errors import ExpressionSyntaxError
from src.core.words import EMPTY_WORD, Letter, Word, concat, e, parse_word


@pytest.mark.unit
class TestLetter:
    """Test single letters."""

    def test_weight_is_k_plus_d(self):
        """Test that a letter weighs k + d."""
        assert Letter(3, 2).weight == 5

    def test_render_omits_zero_upper_index(self):
        """Test the e(k) shorthand for d = 0."""
        assert Letter(4).render() == "e(4)"
        assert Letter(1, 2).render() == "e(1,2)"

    @pytest.mark.edge_case
    def test_rejects_k_zero(self):
        """Test that k must be positive."""
        with pytest.raises(ValueError):
            Letter(0)

    @pytest.mark.edge_case
    def test_rejects_negative_d(self):
        """Test that d must be non-negative."""
        with pytest.raises(ValueError):
            Letter(1, -1)


@pytest.mark.unit
class TestWord:
    """Test words."""

    def test_weight_and_depth(self):
        """Test weight and depth of a bi-indexed word."""
        word = Word.from_indices([2, 1], [0, 3])
        assert word.depth == 2
        assert word.weight == 6
        assert word.ks == (2, 1)
        assert word.ds == (0, 3)

    def test_empty_word(self):
        """Test the unit word."""
        assert EMPTY_WORD.depth == 0
        assert EMPTY_WORD.weight == 0
        assert EMPTY_WORD.render() == "1"
        assert EMPTY_WORD.is_admissible()

    def test_h1_and_admissible(self):
        """Test the subalgebra predicates."""
        assert Word.from_indices([1, 2]).is_admissible()
        assert Word.from_indices([2, 1]).is_h1()
        assert not Word.from_indices([2, 1]).is_admissible()
        assert not Word.from_indices([2], [1]).is_h1()

    def test_concatenation_and_slicing(self):
        """Test that words concatenate and slice as sequences."""
        word = e(2) + e(3, 1)
        assert word == concat([e(2), e(3, 1)])
        assert word[1:] == e(3, 1)
        assert word[0] == Letter(2)

    def test_from_indices_length_mismatch(self):
        """Test that ks and ds must align."""
        with pytest.raises(ValueError):
            Word.from_indices([1, 2], [0])

    def test_words_are_hashable_and_ordered(self):
        """Test use as dict keys and in sorting."""
        assert len({e(2), Word.from_indices([2])}) == 1
        assert sorted([e(3), e(1)]) == [e(1), e(3)]


@pytest.mark.unit
class TestParseWord:
    """Test the word parser."""

    def test_single_letters(self):
        """Test parsing of one letter with and without an upper index."""
        assert parse_word("e(3)") == e(3)
        assert parse_word("e(1,2)") == e(1, 2)

    def test_adjacent_and_starred_letters(self):
        """Test that letters may be juxtaposed or joined by '*'."""
        expected = Word.from_indices([2, 4], [0, 1])
        assert parse_word("e(2)e(4,1)") == expected
        assert parse_word("e(2) * e(4, 1)") == expected

    def test_one_is_empty_word(self):
        """Test the unit syntax."""
        assert parse_word("1") == EMPTY_WORD

    @pytest.mark.edge_case
    def test_garbage_reports_column(self):
        """Test that the error carries the failing column."""
        with pytest.raises(ExpressionSyntaxError) as info:
            parse_word("e(2)x")
        assert info.value.line == 1
        assert info.value.column == 5

    @pytest.mark.edge_case
    def test_k_zero_is_syntax_error(self):
        """Test that e(0) is rejected."""
        with pytest.raises(ExpressionSyntaxError):
            parse_word("e(0)")
