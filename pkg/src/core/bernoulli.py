"""Bernoulli numbers, exact factorials/binomials and the lambda coefficients.

Bernoulli numbers follow the convention B_1 = -1/2, i.e. they satisfy
sum_{j=0}^{m} C(m+1, j) B_j = 0 for m >= 1. The lambda coefficients feed the
correction terms of the quasi-shuffle product on bi-indexed words.
"""

from __future__ import annotations

import math
import threading
from fractions import Fraction
from typing import List

from src.config.constants import FACTORIAL_MEMO_BOUND

_FACTORIALS: List[int] = [math.factorial(n) for n in range(FACTORIAL_MEMO_BOUND)]


def factorial(n: int) -> int:
    if n < 0:
        raise ValueError(f"factorial of negative number {n}")
    if n < FACTORIAL_MEMO_BOUND:
        return _FACTORIALS[n]
    return math.factorial(n)


def binomial(n: int, k: int) -> int:
    """C(n, k) for n >= 0; zero outside 0 <= k <= n."""
    if k < 0 or n < 0 or k > n:
        return 0
    if n < FACTORIAL_MEMO_BOUND:
        return _FACTORIALS[n] // (_FACTORIALS[k] * _FACTORIALS[n - k])
    return math.comb(n, k)


class BernoulliTable:
    """Thread-safe memo of B_0, B_1, ... grown on demand by the defining recurrence."""

    def __init__(self) -> None:
        self._values: List[Fraction] = [Fraction(1)]
        self._lock = threading.Lock()

    def __len__(self) -> int:
        return len(self._values)

    def _extend_to(self, n: int) -> None:
        values = self._values
        for m in range(len(values), n + 1):
            if m >= 3 and m % 2 == 1:
                values.append(Fraction(0))
                continue
            # B_m = -1/(m+1) * sum_{j<m} C(m+1, j) B_j
            acc = sum((binomial(m + 1, j) * values[j] for j in range(m)), Fraction(0))
            values.append(-acc / (m + 1))

    def get(self, n: int) -> Fraction:
        if n < 0:
            raise ValueError(f"Bernoulli index must be >= 0, got {n}")
        if n >= len(self._values):
            with self._lock:
                if n >= len(self._values):
                    self._extend_to(n)
        return self._values[n]

    def values(self, n: int) -> List[Fraction]:
        """B_0..B_n as a list."""
        self.get(n)
        return list(self._values[: n + 1])


BERNOULLI = BernoulliTable()


def bernoulli(n: int) -> Fraction:
    """n-th Bernoulli number with B_1 = -1/2."""
    return BERNOULLI.get(n)


def lambda_coeff(a: int, b: int, j: int) -> Fraction:
    """Correction coefficient (-1)^(b-1) C(a+b-j-1, a-j) B_(a+b-j) / (a+b-j)!.

    Args:
        a: First weight index, at least 1
        b: Second weight index, at least 1
        j: Index of the correction letter, 1 <= j <= a

    Returns:
        The exact rational coefficient
    """
    if a < 1 or b < 1:
        raise ValueError(f"lambda indices must be >= 1, got a={a}, b={b}")
    if not 1 <= j <= a:
        raise ValueError(f"lambda index j must lie in [1, {a}], got {j}")
    n = a + b - j
    sign = 1 if (b - 1) % 2 == 0 else -1
    return sign * binomial(n - 1, a - j) * bernoulli(n) / factorial(n)
