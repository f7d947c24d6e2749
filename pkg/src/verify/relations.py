"""Linear relations among brackets, found as kernels of coefficient matrices."""

from __future__ import annotations

import logging
from typing import List, Sequence

from src.core.lincomb import LinComb
from src.core.words import Word
from src.linalg.matrix import QMatrix, kernel_basis, solve
from src.qseries.brackets import eval_g
from src.utils.combinatorics import h1_words_of_weight

logger = logging.getLogger(__name__)

# Relations found at order N are re-evaluated at N + RELATION_VERIFY_MARGIN
RELATION_VERIFY_MARGIN = 10


def candidate_words(
    weight: int,
    max_depth: int,
    exact_weight: bool = False,
    extra_words: Sequence[Word] = (),
) -> List[Word]:
    """Brackets (every d = 0) of the given weight, or of weight <= it, plus extra words, without repeats."""
    weights = [weight] if exact_weight else range(1, weight + 1)
    out: List[Word] = []
    seen = set()
    for n in weights:
        for word in h1_words_of_weight(n):
            if word.depth <= max_depth and word not in seen:
                seen.add(word)
                out.append(word)
    for word in extra_words:
        if word not in seen:
            seen.add(word)
            out.append(word)
    return out


def find_relations(
    weight: int,
    max_depth: int,
    order: int,
    exact_weight: bool = False,
    extra_words: Sequence[Word] = (),
) -> List[LinComb]:
    """Basis of the rational relations among the candidate series up to q^order.

    The returned basis spans the relations that still vanish at order +
    RELATION_VERIFY_MARGIN, so a true relation is kept even when it is a
    combination of kernel vectors that fail one by one.
    """
    words = candidate_words(weight, max_depth, exact_weight, extra_words)
    if not words:
        return []
    if order + 1 < len(words):
        logger.warning("order %d is below the %d candidates; expect spurious kernel vectors", order, len(words))
    verify_order = order + RELATION_VERIFY_MARGIN
    series = [eval_g(word, verify_order) for word in words]
    found = kernel_basis(QMatrix.from_series([s.truncate(order) for s in series]))
    confirmed = kernel_basis(QMatrix.from_series(series))
    if len(confirmed) < len(found):
        logger.warning(
            "%d of %d kernel directions at order %d fail at order %d",
            len(found) - len(confirmed),
            len(found),
            order,
            verify_order,
        )
    relations = [LinComb(zip(words, vector)) for vector in confirmed]
    logger.info("%d candidates, %d relations at order %d", len(words), len(relations), order)
    return relations


def in_relation_space(x: LinComb, relations: Sequence[LinComb]) -> bool:
    """Whether x is a rational combination of the given relations."""
    if x.is_zero():
        return True
    if not relations:
        return False
    words = sorted(set(x).union(*relations))
    m = QMatrix.from_rows(
        [[r.coefficient(word) for r in relations] for word in words], cols=len(relations)
    )
    return solve(m, [x.coefficient(word) for word in words]) is not None


def relation_to_dict(relation: LinComb) -> dict:
    return {"relation": relation.render(), "coefficients": relation.to_dict()}

