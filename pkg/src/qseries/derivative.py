"""The operator d = q d/dq on q-series and on words.

On words it bumps one letter at a time:

    d e(k_1,d_1)...e(k_r,d_r) = sum_j (d_j + 1) k_j * e(..., k_j + 1, d_j + 1, ...)
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Dict, Union

from src.config.constants import PRODUCT_CACHE_SIZE
from src.core.lincomb import LinComb, accumulate, as_lincomb
from src.core.words import Letter, Word
from src.qseries.series import QSeries


def derivative_q(s: QSeries) -> QSeries:
    """sum c_n q^n -> sum n c_n q^n, same truncation order."""
    return QSeries(s.order, tuple(n * c for n, c in enumerate(s.coeffs)))


@lru_cache(maxsize=PRODUCT_CACHE_SIZE)
def derivative_word(w: Word) -> LinComb:
    """Word-level derivative; the empty word maps to 0."""
    acc: Dict[Word, Fraction] = {}
    letters = w.letters
    for j, a in enumerate(letters):
        bumped = Letter(a.k + 1, a.d + 1)
        accumulate(acc, Word(letters[:j] + (bumped,) + letters[j + 1 :]), Fraction((a.d + 1) * a.k))
    return LinComb(acc)


def derivative(x: Union[LinComb, Word]) -> LinComb:
    """Linear extension of derivative_word."""
    return as_lincomb(x).map_words(derivative_word)
