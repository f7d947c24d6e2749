"""Shuffle-regularized brackets g^sh.

g^sh_{k_1..k_r} is the coefficient of X_1^(k_1-1)...X_r^(k_r-1) in

    T_sh(X_1..X_r) = sum over compositions (i_1..i_m) of r of
        1/(i_1!...i_m!) * H[i_1..i_m](X_r - X_{r-i_1}, X_{r-i_1} - X_{r-i_1-i_2}, ..., X_{i_m})

with X_0 = 0. Expanding H in its own variables gives coefficients that are
eval_h series, so every g^sh is a finite rational combination of
eval_h(comp, a) terms. That combination depends only on the index and is
cached; evaluation to a given order then costs one eval_h per term.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import List, Sequence, Tuple, Union

from src.algebra.involution import LinearForm, expand_power_product, poly_coefficient, variable_ring
from src.config.constants import EXPANSION_CACHE_SIZE
from src.core.bernoulli import binomial, factorial
from src.core.errors import AlgebraDomainError
from src.core.lincomb import LinComb, as_lincomb, lincomb_sum
from src.core.words import Word
from src.qseries.brackets import eval_h
from src.qseries.series import QSeries, series_sum
from src.utils.combinatorics import compositions, weak_compositions

logger = logging.getLogger(__name__)

# (composition i_1..i_m, exponents a_1..a_m, rational weight)
HTerm = Tuple[Tuple[int, ...], Tuple[int, ...], Fraction]


@dataclass(frozen=True)
class GshIndex:
    """Index (k_1..k_r) of a regularized bracket; every k_i >= 1, depth >= 1."""

    ks: Tuple[int, ...]

    def __post_init__(self) -> None:
        ks = tuple(int(k) for k in self.ks)
        if not ks:
            raise ValueError("GshIndex needs depth >= 1")
        if any(k < 1 for k in ks):
            raise ValueError(f"GshIndex entries must be >= 1, got {ks}")
        object.__setattr__(self, "ks", ks)

    @classmethod
    def parse(cls, text: str) -> "GshIndex":
        """Parse ``"1,2,3"`` (brackets and spaces tolerated)."""
        body = text.strip().strip("()[]")
        try:
            return cls(tuple(int(p) for p in body.split(",") if p.strip()))
        except ValueError as exc:
            raise ValueError(f"Invalid index list {text!r}: {exc}") from exc

    @property
    def depth(self) -> int:
        return len(self.ks)

    @property
    def weight(self) -> int:
        return sum(self.ks)

    def to_word(self) -> Word:
        return Word.from_indices(self.ks)

    def label(self) -> str:
        return "gsh(" + ",".join(str(k) for k in self.ks) + ")"

    def __str__(self) -> str:
        return self.label()


def _composition_forms(r: int, comp: Tuple[int, ...]) -> Tuple[Tuple[LinearForm, ...], Tuple[int, ...]]:
    """Arguments X_{s_(j-1)} - X_{s_j} of H for one composition, plus the variables they touch."""
    s = [r]
    for i in comp:
        s.append(s[-1] - i)
    forms = tuple(LinearForm.difference(r, s[j], s[j + 1]) for j in range(len(comp)))
    return forms, tuple(s[:-1])


@lru_cache(maxsize=EXPANSION_CACHE_SIZE)
def h_terms(ks: Tuple[int, ...]) -> Tuple[HTerm, ...]:
    """g^sh_{ks} as a rational combination of eval_h coefficients."""
    r = len(ks)
    target = tuple(k - 1 for k in ks)
    total = sum(target)
    R = variable_ring("X", r)
    out: List[HTerm] = []
    for comp in compositions(r):
        forms, present = _composition_forms(r, comp)
        # a variable absent from every argument must carry exponent zero
        if any(target[i - 1] for i in range(1, r + 1) if i not in present):
            continue
        prefactor = Fraction(1)
        for i in comp:
            prefactor /= factorial(i)
        for alpha in weak_compositions(total, len(comp)):
            c = poly_coefficient(expand_power_product(forms, alpha, R), target)
            if c:
                out.append((comp, tuple(a + 1 for a in alpha), prefactor * c))
    return tuple(out)


def eval_gsh(idx: Union[GshIndex, Sequence[int]], N: int) -> QSeries:
    """Truncated q-expansion of g^sh_{k_1..k_r}."""
    if not isinstance(idx, GshIndex):
        idx = GshIndex(tuple(idx))
    if N < 0:
        raise ValueError(f"order must be >= 0, got {N}")
    return series_sum(((c, eval_h(comp, a, N)) for comp, a, c in h_terms(idx.ks)), N)


def eval_map_gsh(x: Union[LinComb, Word], N: int) -> QSeries:
    """Linear extension of eval_gsh to words with every d = 0; the empty word maps to 1.

    Raises:
        AlgebraDomainError: If a word has a letter with d > 0
    """
    x = as_lincomb(x)
    items = []
    for w, c in x.items():
        if not w.is_h1():
            raise AlgebraDomainError(f"gsh is only defined for words with every d = 0; got {w.render()}")
        if w.depth == 0:
            items.append((c, QSeries.constant(1, N)))
        else:
            items.append((c, eval_gsh(GshIndex(w.ks), N)))
    return series_sum(items, N)


def _w(ks: Sequence[int], ds: Sequence[int] = ()) -> Word:
    return Word.from_indices(ks, ds or None)


def gsh_in_g(idx: Union[GshIndex, Sequence[int]]) -> LinComb:
    """Explicit bi-bracket expansion of g^sh for depth <= 3.

    Raises:
        AlgebraDomainError: For depth > 3, where no closed formula is available
    """
    if not isinstance(idx, GshIndex):
        idx = GshIndex(tuple(idx))
    ks = idx.ks
    half = Fraction(1, 2)
    if idx.depth == 1:
        return LinComb.word(_w(ks))
    if idx.depth == 2:
        k1, k2 = ks
        terms = [(1, _w(ks))]
        if k1 == 1:
            terms += [(half, _w([k2], [1])), (-half, _w([k2]))]
        return lincomb_sum(terms)
    if idx.depth == 3:
        k1, k2, k3 = ks
        terms = [(1, _w(ks))]
        if k1 == 1:
            terms += [(half, _w([k2, k3], [1, 0])), (-half, _w([k2, k3]))]
        if k2 == 1:
            terms += [
                (half, _w([k1, k3], [0, 1])),
                (-half, _w([k1, k3], [1, 0])),
                (-half, _w([k1, k3])),
            ]
        if k1 * k2 == 1:
            terms += [
                (Fraction(1, 6), _w([k3], [2])),
                (Fraction(-1, 4), _w([k3], [1])),
                (Fraction(1, 6), _w([k3])),
            ]
        return lincomb_sum(terms)
    raise AlgebraDomainError(f"no closed bi-bracket formula for depth {idx.depth} ({idx.label()})")


def depth1_square_rhs(a: int, b: int) -> LinComb:
    """Combination whose gsh image equals g_a * g_b, read off from
    T_sh(X) T_sh(Y) = T_sh(X, X+Y) + T_sh(Y, X+Y) at X^(a-1) Y^(b-1)."""
    if a < 1 or b < 1:
        raise ValueError("indices must be >= 1")
    terms = []
    for j in range(1, a + b):
        c = binomial(j - 1, b - 1) + binomial(j - 1, a - 1)
        if c:
            terms.append((c, _w([a + b - j, j])))
    return lincomb_sum(terms)


def gsh_index_basis(max_weight: int) -> List[GshIndex]:
    """All indices of weight 1..max_weight, by weight then lexicographically."""
    out: List[GshIndex] = []
    for n in range(1, max_weight + 1):
        out.extend(GshIndex(c) for c in sorted(compositions(n)))
    return out


def gsh_span_basis(max_weight: int, N: int) -> List[Tuple[str, QSeries]]:
    """Labeled series spanning the gsh space of weight <= max_weight (constant 1 first)."""
    basis: List[Tuple[str, QSeries]] = [("1", QSeries.constant(1, N))]
    for idx in gsh_index_basis(max_weight):
        basis.append((idx.label(), eval_gsh(idx, N)))
    logger.debug("gsh span basis: weight <= %d, %d series, order %d", max_weight, len(basis), N)
    return basis


def clear_gsh_caches() -> None:
    h_terms.cache_clear()
