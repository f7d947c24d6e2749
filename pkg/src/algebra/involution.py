"""The partition involution P and the conjugate product boxdot.

P is read off from the generating series of the bi-indexed words: the word
e(k_1,d_1)...e(k_r,d_r) is sent to the sum over words e(a_1,b_1)...e(a_r,b_r)
whose coefficient is the coefficient of Y^d X^(k-1) in

    prod_i (Y_{r-i+1} + ... + Y_r)^(a_i - 1) * prod_i (X_{r-i+1} - X_{r-i})^(b_i)

with X_0 = 0. The Y-part and the X-part factor, so each is expanded on its own
sympy ring and cached per (depth, exponent tuple). Only words with
sum(a_i - 1) = sum(d_i) and sum(b_i) = sum(k_i - 1) can occur.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple, Union

from sympy import QQ
from sympy.polys.rings import PolyElement, PolyRing, ring

from src.algebra.products import boxast
from src.config.constants import EXPANSION_CACHE_SIZE, PRODUCT_CACHE_SIZE
from src.core.bernoulli import factorial
from src.core.lincomb import LinComb, accumulate, as_lincomb
from src.core.words import Letter, Word
from src.utils.combinatorics import weak_compositions

# Sparse exponent-vector polynomial over QQ
MultiPoly = PolyElement
Monomial = Tuple[int, ...]


def to_fraction(c) -> Fraction:
    """Convert a sympy QQ element to Fraction."""
    return Fraction(int(c.numerator), int(c.denominator))


def to_qq(c: Union[int, Fraction]):
    c = Fraction(c)
    return QQ(c.numerator, c.denominator)


@lru_cache(maxsize=None)
def variable_ring(prefix: str, n: int) -> PolyRing:
    """Polynomial ring QQ[prefix1, ..., prefixn]."""
    if n < 1:
        raise ValueError(f"a ring needs at least one generator, got {n}")
    names = ",".join(f"{prefix}{i}" for i in range(1, n + 1))
    result = ring(names, QQ)
    return result[0]


@dataclass(frozen=True)
class LinearForm:
    """Homogeneous degree-one form sum_i c_i * V_i over a fixed variable list.

    Attributes:
        coefficients: One rational per variable
    """

    coefficients: Tuple[Fraction, ...]

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "coefficients", tuple(Fraction(c) for c in self.coefficients)
        )

    @property
    def n_vars(self) -> int:
        return len(self.coefficients)

    @classmethod
    def y_suffix(cls, r: int, i: int) -> "LinearForm":
        """Y_{r-i+1} + ... + Y_r on variables Y_1..Y_r."""
        return cls(tuple(1 if j >= r - i else 0 for j in range(r)))

    @classmethod
    def x_difference(cls, r: int, i: int) -> "LinearForm":
        """X_{r-i+1} - X_{r-i} on variables X_1..X_r, with X_0 = 0."""
        coeffs = [0] * r
        coeffs[r - i] = 1
        if r - i - 1 >= 0:
            coeffs[r - i - 1] = -1
        return cls(tuple(coeffs))

    @classmethod
    def difference(cls, n: int, hi: int, lo: int) -> "LinearForm":
        """X_hi - X_lo on variables X_1..X_n (index 0 stands for the zero variable)."""
        coeffs = [0] * n
        if hi:
            coeffs[hi - 1] += 1
        if lo:
            coeffs[lo - 1] -= 1
        return cls(tuple(coeffs))

    def to_poly(self, R: PolyRing) -> MultiPoly:
        if R.ngens != self.n_vars:
            raise ValueError(f"form has {self.n_vars} variables, ring has {R.ngens}")
        terms = {}
        for i, c in enumerate(self.coefficients):
            if c:
                mon = [0] * self.n_vars
                mon[i] = 1
                terms[tuple(mon)] = to_qq(c)
        return R.from_dict(terms) if terms else R.zero


def expand_power_product(
    forms: Sequence[LinearForm],
    exponents: Sequence[int],
    R: Optional[PolyRing] = None,
) -> MultiPoly:
    """Exact expansion of prod_i forms[i]^exponents[i].

    Args:
        forms: Linear forms over a common variable list
        exponents: Non-negative exponents, one per form
        R: Target ring; defaults to QQ[x1..xn] for n variables

    Returns:
        The product as a sympy sparse polynomial
    """
    if len(forms) != len(exponents):
        raise ValueError("forms and exponents must have equal length")
    if any(e < 0 for e in exponents):
        raise ValueError("exponents must be non-negative")
    if R is None:
        n = forms[0].n_vars if forms else 1
        R = variable_ring("x", n)
    result = R.one
    for form, e in zip(forms, exponents):
        if e:
            result = result * form.to_poly(R) ** e
    return result


def poly_terms(p: MultiPoly) -> Dict[Monomial, Fraction]:
    """Exponent vector -> Fraction view of a sympy polynomial."""
    return {tuple(m): to_fraction(c) for m, c in p.items()}


def poly_coefficient(p: MultiPoly, monomial: Monomial) -> Fraction:
    c = p.get(tuple(monomial))
    return to_fraction(c) if c else Fraction(0)


def _multinomial_power(form: LinearForm, e: int) -> Dict[Monomial, Fraction]:
    n = form.n_vars
    support = [(i, c) for i, c in enumerate(form.coefficients) if c]
    out: Dict[Monomial, Fraction] = {}
    for parts in weak_compositions(e, len(support)):
        coeff = Fraction(factorial(e))
        mon = [0] * n
        for (i, c), p in zip(support, parts):
            coeff *= c**p
            coeff /= factorial(p)
            mon[i] = p
        key = tuple(mon)
        out[key] = out.get(key, Fraction(0)) + coeff
    return out


def power_product_coefficient(
    forms: Sequence[LinearForm], exponents: Sequence[int], monomial: Monomial
) -> Fraction:
    """Coefficient of one monomial in prod forms[i]^exponents[i] by direct convolution.

    Independent of the sympy route; terms that overshoot the target exponent
    in any variable are dropped early.
    """
    if len(forms) != len(exponents):
        raise ValueError("forms and exponents must have equal length")
    target = tuple(monomial)
    partial: Dict[Monomial, Fraction] = {tuple(0 for _ in target): Fraction(1)}
    for form, e in zip(forms, exponents):
        factor = _multinomial_power(form, e)
        nxt: Dict[Monomial, Fraction] = {}
        for m1, c1 in partial.items():
            for m2, c2 in factor.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                if any(a > t for a, t in zip(m, target)):
                    continue
                nxt[m] = nxt.get(m, Fraction(0)) + c1 * c2
        partial = {m: c for m, c in nxt.items() if c}
    return partial.get(target, Fraction(0))


# Involution


@lru_cache(maxsize=None)
def _y_forms(r: int) -> Tuple[LinearForm, ...]:
    return tuple(LinearForm.y_suffix(r, i) for i in range(1, r + 1))


@lru_cache(maxsize=None)
def _x_forms(r: int) -> Tuple[LinearForm, ...]:
    return tuple(LinearForm.x_difference(r, i) for i in range(1, r + 1))


@lru_cache(maxsize=EXPANSION_CACHE_SIZE)
def _y_expansion(r: int, alpha: Tuple[int, ...]) -> MultiPoly:
    return expand_power_product(_y_forms(r), alpha, variable_ring("Y", r))


@lru_cache(maxsize=EXPANSION_CACHE_SIZE)
def _x_expansion(r: int, beta: Tuple[int, ...]) -> MultiPoly:
    return expand_power_product(_x_forms(r), beta, variable_ring("X", r))


def _partial_coefficients(r: int, target: Monomial, expand) -> List[Tuple[Tuple[int, ...], Fraction]]:
    out = []
    for exps in weak_compositions(sum(target), r):
        c = poly_coefficient(expand(r, exps), target)
        if c:
            out.append((exps, c))
    return out


@lru_cache(maxsize=PRODUCT_CACHE_SIZE)
def _involution_word(w: Word) -> LinComb:
    r = w.depth
    if r == 0:
        return LinComb.one()
    y_part = _partial_coefficients(r, w.ds, _y_expansion)
    x_part = _partial_coefficients(r, tuple(k - 1 for k in w.ks), _x_expansion)
    acc: Dict[Word, Fraction] = {}
    for alpha, cy in y_part:
        for beta, cx in x_part:
            u = Word(tuple(Letter(a + 1, b) for a, b in zip(alpha, beta)))
            accumulate(acc, u, cy * cx)
    return LinComb(acc)


def involution_p(x: Union[Word, LinComb]) -> LinComb:
    """Apply P to a word, or linearly to a combination. P(1) = 1."""
    if isinstance(x, Word):
        return _involution_word(x)
    return x.map_words(_involution_word)


def boxdot(u: Union[Word, LinComb], v: Union[Word, LinComb]) -> LinComb:
    """Conjugate product P(P(u) boxast P(v))."""
    return involution_p(boxast(involution_p(as_lincomb(u)), involution_p(as_lincomb(v))))
