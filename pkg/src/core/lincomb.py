"""Finite rational linear combinations of words.

LinComb is the working element type of the word algebra. Coefficients are
``Fraction`` values and zero coefficients are pruned on construction, so two
combinations are equal exactly when their term maps are equal.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Dict, Iterable, Iterator, Mapping, Optional, Tuple, Union

from src.core.words import EMPTY_WORD, Word

Scalar = Union[int, Fraction]


def accumulate(acc: Dict[Word, Fraction], word: Word, coeff: Fraction) -> None:
    """Add coeff*word into acc, dropping the entry when it cancels."""
    total = acc.get(word, 0) + coeff
    if total:
        acc[word] = total
    else:
        acc.pop(word, None)


class LinComb(Mapping[Word, Fraction]):
    """Immutable normalized map Word -> Fraction.

    Indexing a missing word raises KeyError like any mapping; use
    ``coefficient`` to read zeros.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(
        self,
        terms: Optional[Union[Mapping[Word, Scalar], Iterable[Tuple[Word, Scalar]]]] = None,
    ):
        acc: Dict[Word, Fraction] = {}
        if terms is not None:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for word, coeff in items:
                if not isinstance(word, Word):
                    raise TypeError(f"LinComb keys must be Word, got {type(word).__name__}")
                if coeff:
                    accumulate(acc, word, Fraction(coeff))
        self._terms = acc
        self._hash: Optional[int] = None

    @classmethod
    def _from_normalized(cls, acc: Dict[Word, Fraction]) -> "LinComb":
        out = cls.__new__(cls)
        out._terms = acc
        out._hash = None
        return out

    @classmethod
    def zero(cls) -> "LinComb":
        return cls()

    @classmethod
    def one(cls) -> "LinComb":
        return cls({EMPTY_WORD: 1})

    @classmethod
    def word(cls, w: Word, coeff: Scalar = 1) -> "LinComb":
        return cls({w: coeff})

    # Mapping protocol

    def __getitem__(self, w: Word) -> Fraction:
        return self._terms[w]

    def __iter__(self) -> Iterator[Word]:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def coefficient(self, w: Word) -> Fraction:
        return self._terms.get(w, Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    # Arithmetic

    def __add__(self, other: "LinComb") -> "LinComb":
        if not isinstance(other, LinComb):
            return NotImplemented
        acc = dict(self._terms)
        for w, c in other._terms.items():
            accumulate(acc, w, c)
        return LinComb._from_normalized(acc)

    def __sub__(self, other: "LinComb") -> "LinComb":
        if not isinstance(other, LinComb):
            return NotImplemented
        acc = dict(self._terms)
        for w, c in other._terms.items():
            accumulate(acc, w, -c)
        return LinComb._from_normalized(acc)

    def __neg__(self) -> "LinComb":
        return LinComb._from_normalized({w: -c for w, c in self._terms.items()})

    def __mul__(self, scalar: Scalar) -> "LinComb":
        if not isinstance(scalar, (int, Fraction)):
            return NotImplemented
        if not scalar:
            return LinComb()
        s = Fraction(scalar)
        return LinComb._from_normalized({w: c * s for w, c in self._terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if isinstance(other, LinComb):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)) and other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # Structure

    def map_words(self, fn: Callable[[Word], "LinComb"]) -> "LinComb":
        """Linear extension of a word-level map."""
        acc: Dict[Word, Fraction] = {}
        for w, c in self._terms.items():
            for v, cv in fn(w)._terms.items():
                accumulate(acc, v, c * cv)
        return LinComb._from_normalized(acc)

    def bilinear(self, other: "LinComb", fn: Callable[[Word, Word], "LinComb"]) -> "LinComb":
        """Bilinear extension of a map on pairs of words."""
        acc: Dict[Word, Fraction] = {}
        for u, cu in self._terms.items():
            for v, cv in other._terms.items():
                for w, cw in fn(u, v)._terms.items():
                    accumulate(acc, w, cu * cv * cw)
        return LinComb._from_normalized(acc)

    def concat(self, other: "LinComb") -> "LinComb":
        """Concatenation product, the free algebra multiplication."""
        return self.bilinear(other, lambda u, v: LinComb({u + v: 1}))

    def prepend(self, letter) -> "LinComb":
        return LinComb._from_normalized({w.prepend(letter): c for w, c in self._terms.items()})

    def homogeneous_part(self, weight: int) -> "LinComb":
        return LinComb._from_normalized(
            {w: c for w, c in self._terms.items() if w.weight == weight}
        )

    def weights(self) -> set:
        return {w.weight for w in self._terms}

    def max_weight(self) -> int:
        return max((w.weight for w in self._terms), default=0)

    def is_h1(self) -> bool:
        return all(w.is_h1() for w in self._terms)

    def sorted_terms(self) -> list:
        """Terms ordered by decreasing weight, then increasing depth, then word order."""
        return sorted(self._terms.items(), key=lambda t: (-t[0].weight, t[0].depth, t[0]))

    def render(self) -> str:
        """Canonical text form, e.g. ``e(2)e(3) + e(3)e(2) - 1/12*e(3)``."""
        if not self._terms:
            return "0"
        parts = []
        for i, (w, c) in enumerate(self.sorted_terms()):
            sign = "-" if c < 0 else "+"
            mag = -c if c < 0 else c
            if w.depth == 0:
                body = str(mag)
            elif mag == 1:
                body = w.render()
            else:
                body = f"{mag}*{w.render()}"
            if i == 0:
                parts.append(body if sign == "+" else f"-{body}")
            else:
                parts.append(f" {sign} {body}")
        return "".join(parts)

    def to_dict(self) -> Dict[str, str]:
        return {w.render(): str(c) for w, c in self.sorted_terms()}

    def __repr__(self) -> str:
        return f"LinComb({self.render()})"

    def __str__(self) -> str:
        return self.render()


def as_lincomb(x: Union[LinComb, Word]) -> LinComb:
    """Accept a bare word wherever a combination is expected."""
    if isinstance(x, LinComb):
        return x
    if isinstance(x, Word):
        return LinComb({x: 1})
    raise TypeError(f"Expected LinComb or Word, got {type(x).__name__}")


def lincomb_sum(items: Iterable[Tuple[Scalar, Union[LinComb, Word]]]) -> LinComb:
    """Sum of scalar multiples, e.g. ``lincomb_sum([(1, u), (-2, v)])``."""
    acc: Dict[Word, Fraction] = {}
    for coeff, x in items:
        if not coeff:
            continue
        c = Fraction(coeff)
        for w, cw in as_lincomb(x)._terms.items():
            accumulate(acc, w, c * cw)
    return LinComb._from_normalized(acc)
