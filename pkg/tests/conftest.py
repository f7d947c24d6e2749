"""Pytest configuration and shared fixtures for qbrackets tests.

Provides common fixtures for:
- Small words and index words used across the algebra tests
- A default low truncation order
- Temporary directories and a redirected reports base
"""

import tempfile
from pathlib import Path
from typing import List

import pytest

from src.core.words import Word
from src.utils.combinatorics import words_up_to_weight


# Test markers
def pytest_configure(config):
    """Configure custom pytest markers."""
    config.addinivalue_line("markers", "unit: Unit tests for individual components")
    config.addinivalue_line(
        "markers", "integration: Integration tests for multi-component workflows"
    )
    config.addinivalue_line(
        "markers", "edge_case: Edge case and boundary condition tests"
    )
    config.addinivalue_line("markers", "property: Hypothesis property tests")
    config.addinivalue_line("markers", "slow: Slow-running tests (>5 seconds)")


@pytest.fixture
def order() -> int:
    """Truncation order for quick series comparisons.

    Returns:
        20
    """
    return 20


@pytest.fixture
def e2() -> Word:
    """The single letter e(2).

    Returns:
        Word e(2)
    """
    return Word.from_indices([2])


@pytest.fixture
def e3() -> Word:
    """The single letter e(3).

    Returns:
        Word e(3)
    """
    return Word.from_indices([3])


@pytest.fixture
def e1_d1() -> Word:
    """The bi-indexed letter e(1,1).

    Returns:
        Word e(1,1)
    """
    return Word.from_indices([1], [1])


@pytest.fixture
def e1_d2() -> Word:
    """The bi-indexed letter e(1,2).

    Returns:
        Word e(1,2)
    """
    return Word.from_indices([1], [2])


@pytest.fixture
def small_words() -> List[Word]:
    """Every bi-indexed word of weight <= 4, the empty word included.

    Returns:
        List of words
    """
    return words_up_to_weight(4)


@pytest.fixture
def temp_output_dir():
    """Create a temporary output directory for test artifacts.

    Yields:
        Path to temporary directory (cleaned up after test)
    """
    with tempfile.TemporaryDirectory() as tmpdir:
        yield Path(tmpdir)


@pytest.fixture
def reports_base(temp_output_dir, monkeypatch) -> Path:
    """Point the reports directory at a temporary location.

    Returns:
        Path used as QBRACKETS_REPORTS_BASE
    """
    base = temp_output_dir / "reports"
    monkeypatch.setenv("QBRACKETS_REPORTS_BASE", str(base))
    return base
