"""The four bilinear products on words.

- ``boxast``: quasi-shuffle product on all bi-indexed words with the
  Bernoulli correction terms
- ``harmonic``: stuffle product on words with every d = 0
- ``shuffle``: shuffle product, computed on the binary e0/e1 encoding
- ``ds``: the defect harmonic(u, v) - shuffle(u, v)

All recursions peel off first letters. Products are commutative, so the
memo caches key on the ordered pair (min, max).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Dict, Tuple, Union

from src.config.constants import PRODUCT_CACHE_SIZE
from src.core.bernoulli import binomial, lambda_coeff
from src.core.errors import AlgebraDomainError
from src.core.lincomb import LinComb, accumulate, as_lincomb
from src.core.words import Letter, Word

Operand = Union[LinComb, Word]
MergeRule = Callable[[Letter, Letter], Tuple[Tuple[Letter, Fraction], ...]]


@dataclass(frozen=True)
class BinaryWord:
    """Word over the two-letter alphabet {e0, e1}, stored as bits 0/1.

    e_k corresponds to the block e1 e0^(k-1).
    """

    bits: Tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if any(b not in (0, 1) for b in self.bits):
            raise ValueError("BinaryWord bits must be 0 or 1")

    def is_h1(self) -> bool:
        return not self.bits or self.bits[0] == 1

    def __len__(self) -> int:
        return len(self.bits)


def to_binary(w: Word) -> BinaryWord:
    if not w.is_h1():
        raise AlgebraDomainError(f"{w.render()} has a letter with d > 0; no binary encoding")
    bits: Tuple[int, ...] = ()
    for a in w:
        bits += (1,) + (0,) * (a.k - 1)
    return BinaryWord(bits)


def from_binary(b: BinaryWord) -> Word:
    if not b.is_h1():
        raise AlgebraDomainError("binary word starting with e0 does not encode an index word")
    ks = []
    for bit in b.bits:
        if bit == 1:
            ks.append(1)
        else:
            ks[-1] += 1
    return Word.from_indices(ks)


# Quasi-shuffle family


@lru_cache(maxsize=None)
def _boxast_merge(a: Letter, b: Letter) -> Tuple[Tuple[Letter, Fraction], ...]:
    """Letters produced when the first letters of two words are merged under boxast."""
    d = a.d + b.d
    scale = binomial(d, a.d)
    acc: Dict[Letter, Fraction] = {Letter(a.k + b.k, d): Fraction(1)}
    for j in range(1, a.k + 1):
        acc[Letter(j, d)] = acc.get(Letter(j, d), Fraction(0)) + lambda_coeff(a.k, b.k, j)
    for j in range(1, b.k + 1):
        acc[Letter(j, d)] = acc.get(Letter(j, d), Fraction(0)) + lambda_coeff(b.k, a.k, j)
    return tuple(sorted((x, scale * c) for x, c in acc.items() if c))


def _harmonic_merge(a: Letter, b: Letter) -> Tuple[Tuple[Letter, Fraction], ...]:
    return ((Letter(a.k + b.k, 0), Fraction(1)),)


_MERGE_RULES: Dict[str, MergeRule] = {
    "boxast": _boxast_merge,
    "harmonic": _harmonic_merge,
}


@lru_cache(maxsize=PRODUCT_CACHE_SIZE)
def _quasi_shuffle(kind: str, u: Word, v: Word) -> LinComb:
    if not u.letters:
        return LinComb.word(v)
    if not v.letters:
        return LinComb.word(u)
    if v < u:
        u, v = v, u
    a, ut = u.letters[0], u[1:]
    b, vt = v.letters[0], v[1:]
    acc: Dict[Word, Fraction] = {}
    for w, c in _quasi_shuffle(kind, ut, v).items():
        accumulate(acc, w.prepend(a), c)
    for w, c in _quasi_shuffle(kind, u, vt).items():
        accumulate(acc, w.prepend(b), c)
    tail = _quasi_shuffle(kind, ut, vt)
    for x, cx in _MERGE_RULES[kind](a, b):
        for w, c in tail.items():
            accumulate(acc, w.prepend(x), cx * c)
    return LinComb(acc)


def _require_h1(x: LinComb, op: str) -> None:
    for w in x:
        if not w.is_h1():
            raise AlgebraDomainError(
                f"{op} is only defined for words with every d = 0; got {w.render()}"
            )


def boxast(u: Operand, v: Operand) -> LinComb:
    """Quasi-shuffle product with Bernoulli corrections; total on all words."""
    return as_lincomb(u).bilinear(as_lincomb(v), lambda x, y: _quasi_shuffle("boxast", x, y))


def harmonic(u: Operand, v: Operand) -> LinComb:
    """Stuffle product.

    Raises:
        AlgebraDomainError: If an operand contains a letter with d > 0
    """
    u, v = as_lincomb(u), as_lincomb(v)
    _require_h1(u, "harmonic")
    _require_h1(v, "harmonic")
    return u.bilinear(v, lambda x, y: _quasi_shuffle("harmonic", x, y))


# Shuffle


@lru_cache(maxsize=PRODUCT_CACHE_SIZE)
def _shuffle_bits(u: Tuple[int, ...], v: Tuple[int, ...]) -> Tuple[Tuple[Tuple[int, ...], int], ...]:
    if not u:
        return ((v, 1),)
    if not v:
        return ((u, 1),)
    if v < u:
        u, v = v, u
    acc: Dict[Tuple[int, ...], int] = {}
    for w, c in _shuffle_bits(u[1:], v):
        key = (u[0],) + w
        acc[key] = acc.get(key, 0) + c
    for w, c in _shuffle_bits(u, v[1:]):
        key = (v[0],) + w
        acc[key] = acc.get(key, 0) + c
    return tuple(acc.items())


def shuffle_binary(u: BinaryWord, v: BinaryWord) -> Dict[BinaryWord, int]:
    """Letterwise shuffle of two binary words with integer multiplicities."""
    return {BinaryWord(w): c for w, c in _shuffle_bits(u.bits, v.bits)}


def _shuffle_words(u: Word, v: Word) -> LinComb:
    bu, bv = to_binary(u), to_binary(v)
    return LinComb(
        (from_binary(BinaryWord(w)), c) for w, c in _shuffle_bits(bu.bits, bv.bits)
    )


def shuffle(u: Operand, v: Operand) -> LinComb:
    """Shuffle product through the binary encoding.

    Raises:
        AlgebraDomainError: If an operand contains a letter with d > 0
    """
    u, v = as_lincomb(u), as_lincomb(v)
    _require_h1(u, "shuffle")
    _require_h1(v, "shuffle")
    return u.bilinear(v, _shuffle_words)


def ds(u: Operand, v: Operand) -> LinComb:
    """Double shuffle defect harmonic(u, v) - shuffle(u, v)."""
    return harmonic(u, v) - shuffle(u, v)


def clear_product_caches() -> None:
    _quasi_shuffle.cache_clear()
    _shuffle_bits.cache_clear()
