"""Bi-indexed letters and words.

A letter e(k,d) carries a weight index k >= 1 and an upper index d >= 0.
Words are immutable sequences of letters; the empty word is the algebra
unit. Words with every d = 0 span the harmonic subalgebra, and among those
the ones ending in a letter with k >= 2 (or empty) are admissible.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence, Tuple, Union, overload

from src.core.errors import ExpressionSyntaxError


@dataclass(frozen=True, order=True)
class Letter:
    """A single letter e(k,d).

    Attributes:
        k: Weight index, at least 1
        d: Upper index, at least 0
    """

    k: int
    d: int = 0

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError(f"Letter index k must be >= 1, got {self.k}")
        if self.d < 0:
            raise ValueError(f"Letter upper index d must be >= 0, got {self.d}")

    @property
    def weight(self) -> int:
        return self.k + self.d

    def render(self) -> str:
        if self.d == 0:
            return f"e({self.k})"
        return f"e({self.k},{self.d})"

    def __str__(self) -> str:
        return self.render()


@dataclass(frozen=True, order=True)
class Word:
    """An ordered, possibly empty, sequence of letters.

    Attributes:
        letters: The letters from left (innermost summation index) to right
    """

    letters: Tuple[Letter, ...] = ()

    def __post_init__(self) -> None:
        if not isinstance(self.letters, tuple):
            object.__setattr__(self, "letters", tuple(self.letters))

    @classmethod
    def of(cls, *letters: Letter) -> "Word":
        return cls(tuple(letters))

    @classmethod
    def from_indices(
        cls, ks: Sequence[int], ds: Optional[Sequence[int]] = None
    ) -> "Word":
        """Build a word from index lists.

        Args:
            ks: Weight indices k_1..k_r
            ds: Upper indices d_1..d_r (all zero when omitted)

        Returns:
            The word e(k_1,d_1)...e(k_r,d_r)
        """
        if ds is None:
            ds = [0] * len(ks)
        if len(ds) != len(ks):
            raise ValueError("ks and ds must have the same length")
        return cls(tuple(Letter(k, d) for k, d in zip(ks, ds)))

    @property
    def depth(self) -> int:
        return len(self.letters)

    @property
    def weight(self) -> int:
        return sum(a.k + a.d for a in self.letters)

    @property
    def ks(self) -> Tuple[int, ...]:
        return tuple(a.k for a in self.letters)

    @property
    def ds(self) -> Tuple[int, ...]:
        return tuple(a.d for a in self.letters)

    def is_h1(self) -> bool:
        """True when every upper index is zero."""
        return all(a.d == 0 for a in self.letters)

    def is_admissible(self) -> bool:
        """True for h1 words that are empty or end in a letter with k >= 2."""
        return self.is_h1() and (not self.letters or self.letters[-1].k >= 2)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    @overload
    def __getitem__(self, index: int) -> Letter: ...

    @overload
    def __getitem__(self, index: slice) -> "Word": ...

    def __getitem__(self, index: Union[int, slice]) -> Union[Letter, "Word"]:
        if isinstance(index, slice):
            return Word(self.letters[index])
        return self.letters[index]

    def __add__(self, other: "Word") -> "Word":
        if not isinstance(other, Word):
            return NotImplemented
        return Word(self.letters + other.letters)

    def prepend(self, letter: Letter) -> "Word":
        return Word((letter,) + self.letters)

    def render(self) -> str:
        if not self.letters:
            return "1"
        return "".join(a.render() for a in self.letters)

    def __str__(self) -> str:
        return self.render()


EMPTY_WORD = Word()


def word_weight(w: Word) -> int:
    """Return the weight sum(k_i + d_i) of a word; 0 for the empty word."""
    return w.weight


def e(k: int, d: int = 0) -> Word:
    """Single-letter word e(k,d)."""
    return Word((Letter(k, d),))


def concat(words: Iterable[Word]) -> Word:
    letters: Tuple[Letter, ...] = ()
    for w in words:
        letters += w.letters
    return Word(letters)


_LETTER_RE = re.compile(r"\s*\*?\s*e\(\s*(\d+)\s*(?:,\s*(\d+)\s*)?\)\s*")


def parse_word(text: str) -> Word:
    """Parse the word syntax ``e(k)`` / ``e(k,d)`` with optional ``*`` between letters.

    ``1`` (or an empty string) denotes the empty word.

    Raises:
        ExpressionSyntaxError: If the text is not a word
    """
    stripped = text.strip()
    if stripped in ("", "1"):
        return EMPTY_WORD
    letters = []
    pos = 0
    while pos < len(text):
        m = _LETTER_RE.match(text, pos)
        if m is None:
            col = pos + 1
            raise ExpressionSyntaxError(f"Expected a letter e(k) or e(k,d) at {text[pos:pos + 10]!r}", 1, col, text)
        k = int(m.group(1))
        d = int(m.group(2)) if m.group(2) is not None else 0
        if k < 1:
            raise ExpressionSyntaxError("Letter index k must be >= 1", 1, pos + 1, text)
        letters.append(Letter(k, d))
        pos = m.end()
    if text.lstrip().startswith("*"):
        raise ExpressionSyntaxError("Word cannot start with '*'", 1, 1, text)
    return Word(tuple(letters))
