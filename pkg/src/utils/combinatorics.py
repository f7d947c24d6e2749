"""Enumeration helpers: compositions and exhaustive word lists."""

from __future__ import annotations

import random
from functools import lru_cache
from typing import Iterator, List, Optional, Tuple

from src.core.words import Letter, Word


def compositions(n: int) -> Iterator[Tuple[int, ...]]:
    """Ordered tuples of positive integers summing to n (one empty tuple for n = 0)."""
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in compositions(n - first):
            yield (first,) + rest


def weak_compositions(total: int, parts: int) -> Iterator[Tuple[int, ...]]:
    """Ordered tuples of `parts` non-negative integers summing to total."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in weak_compositions(total - first, parts - 1):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _words_of_weight(n: int) -> Tuple[Word, ...]:
    if n == 0:
        return (Word(),)
    out: List[Word] = []
    for m in range(1, n + 1):
        tails = _words_of_weight(n - m)
        for k in range(1, m + 1):
            head = Letter(k, m - k)
            out.extend(t.prepend(head) for t in tails)
    return tuple(out)


def words_of_weight(n: int) -> List[Word]:
    """All bi-indexed words of weight exactly n (the empty word for n = 0)."""
    return list(_words_of_weight(n))


def words_up_to_weight(n: int, include_empty: bool = True) -> List[Word]:
    out: List[Word] = []
    for m in range(0 if include_empty else 1, n + 1):
        out.extend(_words_of_weight(m))
    return out


def h1_words_of_weight(n: int) -> List[Word]:
    """Words with every d = 0 and weight n, one per composition of n."""
    return [Word.from_indices(c) for c in compositions(n)]


def h1_words_up_to_weight(n: int, include_empty: bool = True) -> List[Word]:
    out: List[Word] = []
    for m in range(0 if include_empty else 1, n + 1):
        out.extend(h1_words_of_weight(m))
    return out


def random_composition(rng: random.Random, n: int, max_parts: Optional[int] = None) -> Tuple[int, ...]:
    """A uniformly cut composition of n with at most max_parts parts."""
    if n < 1:
        raise ValueError(f"cannot compose {n}")
    limit = n if max_parts is None else min(n, max_parts)
    parts = rng.randint(1, limit)
    cuts = sorted(rng.sample(range(1, n), parts - 1))
    bounds = [0, *cuts, n]
    return tuple(b - a for a, b in zip(bounds, bounds[1:]))


def random_word(rng: random.Random, n: int, h1: bool = False, max_depth: Optional[int] = None) -> Word:
    """A random word of weight n; letters split each part m as k + d with k >= 1."""
    parts = random_composition(rng, n, max_depth)
    if h1:
        return Word.from_indices(parts)
    letters = []
    for m in parts:
        k = rng.randint(1, m)
        letters.append(Letter(k, m - k))
    return Word(tuple(letters))
