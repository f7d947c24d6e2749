"""q-expansions of bi-brackets and of the H-series coefficients.

Both families are nested divisor sums

    sum_{0 < u_1 < ... < u_r} sum_{v_i} prod_i w_i(u_i, v_i) q^(u_1 v_1 + ... + u_r v_r)

with an integer kernel w_i per position, followed by a single rational
normalization. ``_nested_sum`` runs the sum as a dynamic program over u in
increasing order: after processing u, S[j][n] holds the weighted count of
partial configurations using j positions with largest u at most u and total
q-degree n. Updating j in decreasing order keeps each u in at most one
position.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import List, Sequence, Tuple, Union

from src.config.constants import SERIES_CACHE_SIZE
from src.core.bernoulli import binomial, factorial
from src.core.lincomb import LinComb, as_lincomb
from src.core.words import Word
from src.qseries.series import QSeries, series_sum

# (kind, first index, second index); kind "g" is u^d v^(k-1) for (k, d),
# kind "h" is u^(a-1) C(v-1, n-1) for v >= n, stored as (n, a)
Kernel = Tuple[str, int, int]


def _kernel_terms(kernel: Kernel, u: int, N: int) -> List[Tuple[int, int]]:
    kind, x, y = kernel
    if kind == "g":
        k, d = x, y
        ud = u**d
        return [(u * v, ud * v ** (k - 1)) for v in range(1, N // u + 1)]
    n, a = x, y
    ua = u ** (a - 1)
    return [(u * v, ua * binomial(v - 1, n - 1)) for v in range(n, N // u + 1)]


@lru_cache(maxsize=SERIES_CACHE_SIZE)
def _nested_sum(kernels: Tuple[Kernel, ...], N: int) -> Tuple[int, ...]:
    r = len(kernels)
    if r == 0:
        return (1,) + (0,) * N
    S = [[0] * (N + 1) for _ in range(r + 1)]
    S[0][0] = 1
    for u in range(1, N + 1):
        for j in range(min(r, u), 0, -1):
            prev = S[j - 1]
            terms = _kernel_terms(kernels[j - 1], u, N)
            if not terms:
                continue
            cur = S[j]
            smin = terms[0][0]
            for m in range(N - smin + 1):
                c = prev[m]
                if not c:
                    continue
                for s, t in terms:
                    if m + s > N:
                        break
                    cur[m + s] += c * t
    return tuple(S[r])


def _to_series(counts: Sequence[int], denominator: int, N: int) -> QSeries:
    return QSeries(N, tuple(Fraction(c, denominator) for c in counts))


@lru_cache(maxsize=SERIES_CACHE_SIZE)
def eval_g(w: Word, N: int) -> QSeries:
    """Bi-bracket g^(d_1..d_r)_(k_1..k_r) truncated at q^N; the empty word gives 1.

    Args:
        w: Word e(k_1,d_1)...e(k_r,d_r), k_1 belonging to the smallest u
        N: Truncation order

    Returns:
        Exact truncated q-series
    """
    if N < 0:
        raise ValueError(f"order must be >= 0, got {N}")
    kernels = tuple(("g", a.k, a.d) for a in w.letters)
    denominator = 1
    for a in w.letters:
        denominator *= factorial(a.d) * factorial(a.k - 1)
    return _to_series(_nested_sum(kernels, N), denominator, N)


def eval_map_g(x: Union[LinComb, Word], N: int) -> QSeries:
    """Linear extension of eval_g."""
    x = as_lincomb(x)
    return series_sum(((c, eval_g(w, N)) for w, c in x.items()), N)


@lru_cache(maxsize=SERIES_CACHE_SIZE)
def _eval_h_cached(ns: Tuple[int, ...], as_: Tuple[int, ...], N: int) -> QSeries:
    kernels = tuple(("h", n, a) for n, a in zip(ns, as_))
    denominator = 1
    for a in as_:
        denominator *= factorial(a - 1)
    return _to_series(_nested_sum(kernels, N), denominator, N)


def eval_h(ns: Sequence[int], as_: Sequence[int], N: int) -> QSeries:
    """Coefficient of X_1^(a_1-1)...X_m^(a_m-1) in H[n_1..n_m](X_1..X_m).

    Uses (q^d / (1 - q^d))^n = sum_{v >= n} C(v-1, n-1) q^(d v).

    Args:
        ns: Powers n_i >= 1
        as_: Exponent indices a_i >= 1
        N: Truncation order
    """
    if len(ns) != len(as_):
        raise ValueError("ns and as must have the same length")
    if any(n < 1 for n in ns) or any(a < 1 for a in as_):
        raise ValueError("H-series indices must be >= 1")
    if N < 0:
        raise ValueError(f"order must be >= 0, got {N}")
    return _eval_h_cached(tuple(ns), tuple(as_), N)


def clear_series_caches() -> None:
    _nested_sum.cache_clear()
    eval_g.cache_clear()
    _eval_h_cached.cache_clear()
