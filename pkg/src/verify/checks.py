"""Executable checks for the bracket identities.

Every check returns a CheckReport:
- PASS: an identity holds exactly on all coefficients up to the order
- EVIDENCE: a congruence holds as span membership at the order (certificates in details)
- FAIL: a concrete counterexample is recorded in details

Checks are pure functions of their parameters; timing and logging live in
the runner.
"""

from __future__ import annotations

import logging
import random
from fractions import Fraction
from typing import Any, Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from src.algebra.involution import boxdot, involution_p
from src.algebra.products import boxast, ds, harmonic, shuffle
from src.config.constants import DEFAULT_KMAX, DEFAULT_MAX_WEIGHT, DEFAULT_ORDER
from src.core.errors import AlgebraDomainError
from src.core.lincomb import LinComb, lincomb_sum
from src.core.words import Word
from src.linalg.span import SpanCertificate, adaptive_span_membership
from src.qseries.brackets import eval_g, eval_map_g
from src.qseries.derivative import derivative_q, derivative_word
from src.qseries.regularized import (
    GshIndex,
    depth1_square_rhs,
    eval_gsh,
    eval_map_gsh,
    gsh_in_g,
    gsh_span_basis,
)
from src.qseries.series import QSeries
from src.utils.combinatorics import compositions, h1_words_up_to_weight, random_word, words_up_to_weight
from src.verify.report import CheckReport, CheckStatus

logger = logging.getLogger(__name__)

# Failures kept in a report; the count is always complete
MAX_RECORDED_FAILURES = 20

HALF = Fraction(1, 2)


def w(*ks: int) -> Word:
    """Word e(k_1)...e(k_r) with every d = 0."""
    return Word.from_indices(ks)


def bw(ks: Sequence[int], ds_: Sequence[int]) -> Word:
    """Bi-indexed word with explicit d's."""
    return Word.from_indices(ks, ds_)


def _identity_report(
    check_id: str,
    parameters: Dict[str, Any],
    order: Optional[int],
    checked: int,
    failures: List[Dict[str, Any]],
    extra: Optional[Dict[str, Any]] = None,
) -> CheckReport:
    details: Dict[str, Any] = {"checked": checked, "failures": len(failures)}
    if failures:
        details["counterexamples"] = failures[:MAX_RECORDED_FAILURES]
    if extra:
        details.update(extra)
    status = CheckStatus.FAIL if failures else CheckStatus.PASS
    return CheckReport(check_id, parameters, status, order, details)


def _series_mismatch(label: str, lhs: QSeries, rhs: QSeries) -> Optional[Dict[str, Any]]:
    n = lhs.first_difference(rhs)
    if n is None:
        return None
    return {"case": label, "first_difference": n, "lhs": lhs.coeffs[n], "rhs": rhs.coeffs[n]}


def _span_report(
    check_id: str,
    parameters: Dict[str, Any],
    order: int,
    certificates: Dict[str, SpanCertificate],
    extra: Optional[Dict[str, Any]] = None,
) -> CheckReport:
    failed = [label for label, c in certificates.items() if not c.member]
    details: Dict[str, Any] = {
        "certificates": {label: c.to_dict() for label, c in certificates.items()},
        "non_members": failed,
    }
    if extra:
        details.update(extra)
    orders = [c.order_checked for c in certificates.values()]
    status = CheckStatus.FAIL if failed else CheckStatus.EVIDENCE
    return CheckReport(check_id, parameters, status, max(orders, default=order), details)


def congruence_certificate(
    target: Callable[[int], QSeries], max_weight: int, order: int
) -> SpanCertificate:
    """Certificate that target lies in the span of all g^sh of weight <= max_weight."""
    return adaptive_span_membership(lambda n: (target(n), gsh_span_basis(max_weight, n)), order)


# Identities of the bracket map


def check_partition_relation(max_weight: int = DEFAULT_MAX_WEIGHT, order: int = 30) -> CheckReport:
    """g(P(w)) = g(w) for every bi-indexed word of weight <= max_weight."""
    params = {"max_weight": max_weight, "order": order}
    failures = []
    words = words_up_to_weight(max_weight)
    for word in words:
        bad = _series_mismatch(word.render(), eval_map_g(involution_p(word), order), eval_g(word, order))
        if bad:
            failures.append(bad)
    return _identity_report("partition_relation", params, order, len(words), failures)


def _bounded_combinations(pool: Sequence[Word], arity: int, max_weight: int) -> Iterable[Tuple[Word, ...]]:
    """combinations_with_replacement(pool, arity) with combined weight <= max_weight.

    The pool must be sorted by weight; branches are cut as soon as the bound is exceeded.
    """

    def extend(start: int, prefix: Tuple[Word, ...], used: int) -> Iterable[Tuple[Word, ...]]:
        if len(prefix) == arity:
            yield prefix
            return
        left = arity - len(prefix) - 1
        for i in range(start, len(pool)):
            w_i = pool[i].weight
            if used + w_i * (left + 1) > max_weight:
                break
            yield from extend(i, prefix + (pool[i],), used + w_i)

    return extend(0, (), 0)


def _word_pairs(max_weight: int) -> Iterable[Tuple[Word, Word]]:
    words = words_up_to_weight(max_weight, include_empty=False)
    yield from _bounded_combinations(words, 2, max_weight)


def check_double_shuffle_g(
    max_weight: int = DEFAULT_MAX_WEIGHT,
    order: int = 30,
    pairs: Optional[Sequence[Tuple[Word, Word]]] = None,
) -> CheckReport:
    """g(u boxast v) = g(u) g(v) = g(u boxdot v) on all pairs of combined weight <= max_weight."""
    params: Dict[str, Any] = {"max_weight": max_weight, "order": order}
    if pairs is not None:
        params["pairs"] = [[u, v] for u, v in pairs]
    todo = list(pairs) if pairs is not None else list(_word_pairs(max_weight))
    failures = []
    for u, v in todo:
        product = eval_map_g(u, order) * eval_map_g(v, order)
        label = f"{u.render()} , {v.render()}"
        for name, fn in (("boxast", boxast), ("boxdot", boxdot)):
            bad = _series_mismatch(f"{name}({label})", eval_map_g(fn(u, v), order), product)
            if bad:
                failures.append(bad)
    return _identity_report("double_shuffle_g", params, order, len(todo), failures)


def check_derivative_commutes(max_weight: int = DEFAULT_MAX_WEIGHT, order: int = 30) -> CheckReport:
    """g(D w) = d g(w) for every word of weight <= max_weight."""
    params = {"max_weight": max_weight, "order": order}
    failures = []
    words = words_up_to_weight(max_weight)
    for word in words:
        bad = _series_mismatch(
            word.render(), eval_map_g(derivative_word(word), order), derivative_q(eval_g(word, order))
        )
        if bad:
            failures.append(bad)
    return _identity_report("derivative_commutes", params, order, len(words), failures)


# Regularized brackets


def check_gsh_equals_g(max_weight: int = DEFAULT_MAX_WEIGHT, order: int = 30) -> CheckReport:
    """g^sh_{k_1..k_r} = g_{k_1..k_r} whenever k_1..k_(r-1) >= 2."""
    params = {"max_weight": max_weight, "order": order}
    failures = []
    checked = 0
    for n in range(1, max_weight + 1):
        for ks in compositions(n):
            if any(k < 2 for k in ks[:-1]):
                continue
            checked += 1
            bad = _series_mismatch(GshIndex(ks).label(), eval_gsh(ks, order), eval_g(w(*ks), order))
            if bad:
                failures.append(bad)
    return _identity_report("gsh_equals_g", params, order, checked, failures)


def check_gsh_routes(max_weight: int = 8, order: int = 30) -> CheckReport:
    """eval_gsh agrees with the bi-bracket expansion for every index of depth <= 3."""
    params = {"max_weight": max_weight, "order": order}
    failures = []
    checked = 0
    for n in range(1, max_weight + 1):
        for ks in compositions(n):
            if len(ks) > 3:
                continue
            checked += 1
            idx = GshIndex(ks)
            bad = _series_mismatch(idx.label(), eval_gsh(idx, order), eval_map_g(gsh_in_g(idx), order))
            if bad:
                failures.append(bad)
    return _identity_report("gsh_routes", params, order, checked, failures)


def check_gsh_shuffle(max_weight: int = DEFAULT_MAX_WEIGHT, order: int = 30, max_depth: int = 2) -> CheckReport:
    """g^sh(u sh v) = g^sh(u) g^sh(v) for u, v of depth <= max_depth."""
    params = {"max_weight": max_weight, "order": order, "max_depth": max_depth}
    words = [x for x in h1_words_up_to_weight(max_weight, include_empty=False) if x.depth <= max_depth]
    failures = []
    checked = 0
    for u, v in _bounded_combinations(words, 2, max_weight):
        checked += 1
        bad = _series_mismatch(
            f"{u.render()} sh {v.render()}",
            eval_map_gsh(shuffle(u, v), order),
            eval_map_gsh(u, order) * eval_map_gsh(v, order),
        )
        if bad:
            failures.append(bad)
    return _identity_report("gsh_shuffle", params, order, checked, failures)


def check_gsh_depth1_square(max_weight: int = DEFAULT_MAX_WEIGHT, order: int = 30) -> CheckReport:
    """g_a g_b = g^sh(sum_j [C(j-1,b-1) + C(j-1,a-1)] e_(a+b-j) e_j)."""
    params = {"max_weight": max_weight, "order": order}
    failures = []
    checked = 0
    for a in range(1, max_weight):
        for b in range(a, max_weight - a + 1):
            checked += 1
            bad = _series_mismatch(
                f"g{a}*g{b}",
                eval_g(w(a), order) * eval_g(w(b), order),
                eval_map_gsh(depth1_square_rhs(a, b), order),
            )
            if bad:
                failures.append(bad)
    return _identity_report("gsh_depth1_square", params, order, checked, failures)


# Derivative in depth one


def depth1_theorem_rhs(k: int) -> LinComb:
    """(k+1) e_(k+2) - sum_(n=2)^(k+1) (2^n - 2) e_(k+2-n) e_n."""
    terms: List[Tuple[Fraction, Word]] = [(Fraction(k + 1), w(k + 2))]
    terms += [(Fraction(-(2**n - 2)), w(k + 2 - n, n)) for n in range(2, k + 2)]
    return lincomb_sum(terms)


def ds_sum(k: int) -> LinComb:
    """sum_(i=1)^(k+1) ds(e_i, e_(k+2-i))."""
    acc = LinComb.zero()
    for i in range(1, k + 2):
        acc = acc + ds(w(i), w(k + 2 - i))
    return acc


def check_thm_derivative_depth1(kmax: int = DEFAULT_KMAX, order: int = DEFAULT_ORDER) -> CheckReport:
    """(1/k) d g^sh_k = (k+1) g^sh_(k+2) - sum_n (2^n - 2) g^sh_(k+2-n,n), exactly."""
    if kmax < 1:
        raise ValueError("kmax must be >= 1")
    params = {"kmax": kmax, "order": order}
    failures = []
    for k in range(1, kmax + 1):
        lhs = derivative_q(eval_gsh((k,), order)).scale(Fraction(1, k))
        bad = _series_mismatch(f"k={k}", lhs, eval_map_gsh(depth1_theorem_rhs(k), order))
        if bad:
            failures.append(bad)
    return _identity_report("thm_derivative_depth1", params, order, kmax, failures)


def check_ds_sum_identity(kmax: int = DEFAULT_KMAX, order: int = DEFAULT_ORDER) -> CheckReport:
    """Word identity sum_i ds(e_i, e_(k+2-i)) = theorem right-hand side, and its series form."""
    if kmax < 1:
        raise ValueError("kmax must be >= 1")
    params = {"kmax": kmax, "order": order}
    failures: List[Dict[str, Any]] = []
    for k in range(1, kmax + 1):
        lhs_words = ds_sum(k)
        rhs_words = depth1_theorem_rhs(k)
        if lhs_words != rhs_words:
            failures.append({"case": f"k={k}", "words": lhs_words - rhs_words})
            continue
        lhs = derivative_q(eval_gsh((k,), order)).scale(Fraction(1, k))
        bad = _series_mismatch(f"k={k}", lhs, eval_map_gsh(lhs_words, order))
        if bad:
            failures.append(bad)
    return _identity_report("ds_sum_identity", params, order, kmax, failures)


def check_prop_dgk(kmax: int = 5, order: int = DEFAULT_ORDER) -> CheckReport:
    """d g^sh_k - 2k g^sh(ds(e_1, e_(k+1))) lies in the g^sh span of weight <= k+1."""
    if kmax < 1:
        raise ValueError("kmax must be >= 1")
    params = {"kmax": kmax, "order": order}
    certificates: Dict[str, SpanCertificate] = {}
    for k in range(1, kmax + 1):
        defect = ds(w(1), w(k + 1))

        def target(n: int, k: int = k, defect: LinComb = defect) -> QSeries:
            return derivative_q(eval_gsh((k,), n)) - eval_map_gsh(defect, n).scale(2 * k)

        certificates[f"k={k}"] = congruence_certificate(target, k + 1, order)
    return _span_report("prop_dgk", params, order, certificates)


# Bi-brackets modulo the regularized span


def check_lemma_g10(
    pairs: Sequence[Tuple[int, int]] = ((2, 2), (2, 3), (3, 2), (3, 3)),
    order: int = 60,
) -> CheckReport:
    """g^(1,0)_(k1,k2) and g^(0,1)_(k1,k2) lie in the g^sh span of weight <= k1+k2+1."""
    pairs = [tuple(p) for p in pairs]
    for p in pairs:
        if len(p) != 2 or min(p) < 2:
            raise AlgebraDomainError(f"lemma needs pairs with both entries >= 2, got {p}")
    params = {"pairs": [list(p) for p in pairs], "order": order}
    certificates: Dict[str, SpanCertificate] = {}
    for k1, k2 in pairs:
        for ds_ in ((1, 0), (0, 1)):
            word = bw((k1, k2), ds_)
            certificates[word.render()] = congruence_certificate(
                lambda n, word=word: eval_g(word, n), k1 + k2 + 1, order
            )
    return _span_report("lemma_g10", params, order, certificates)


def _delta(a: int, b: int = 1) -> int:
    return int(a == b)


def lemma_gdsh1_sides(case: str, indices: Sequence[int]) -> Tuple[LinComb, LinComb]:
    """(ds-combination, bi-bracket right-hand side) of one item of the one-index-equal-1 lemma.

    Raises:
        AlgebraDomainError: If the indices do not have exactly one entry equal to 1,
            or have the wrong length for the case
    """
    ks = tuple(int(k) for k in indices)
    lengths = {"i": 3, "ii": 4, "iii": 4}
    if case not in lengths:
        raise AlgebraDomainError(f"unknown lemma case {case!r}; use i, ii or iii")
    if len(ks) != lengths[case]:
        raise AlgebraDomainError(f"case {case} needs {lengths[case]} indices, got {len(ks)}")
    if any(k < 1 for k in ks) or sum(1 for k in ks if k == 1) != 1:
        raise AlgebraDomainError(f"exactly one index must equal 1, got {ks}")
    if case == "i":
        k1, k2, k3 = ks
        lhs = ds(w(k1), w(k2, k3))
        rhs = lincomb_sum(
            [
                (_delta(k1) * HALF, bw((k2, k3), (0, 1))),
                (_delta(k3) * HALF, bw((k2, k1), (0, 1))),
                (-_delta(k3) * HALF, bw((k2, k1), (1, 0))),
            ]
        )
        return lhs, rhs
    if case == "ii":
        k1, k2, k3, k4 = ks
        lhs = ds(w(k1), w(k2, k3, k4))
        rhs = lincomb_sum(
            [
                (_delta(k1) * HALF, bw((k2, k3, k4), (0, 0, 1))),
                (_delta(k4) * HALF, bw((k2, k3, k1), (0, 0, 1))),
                (-_delta(k4) * HALF, bw((k2, k3, k1), (0, 1, 0))),
            ]
        )
        return lhs, rhs
    k1, k2, k3, k4 = ks
    lhs = ds(w(k1, k2), w(k3, k4))
    a, b = _delta(k2) * HALF, _delta(k4) * HALF
    rhs = lincomb_sum(
        [
            (a, bw((k1, k3, k4), (0, 0, 1))),
            (-a, bw((k1, k3, k4), (1, 0, 0))),
            (a, bw((k3, k1, k4), (0, 0, 1))),
            (-a, bw((k3, k1, k4), (0, 1, 0))),
            (a, bw((k1 + k3, k4), (0, 1))),
            (-a, bw((k1 + k3, k4), (1, 0))),
            (b, bw((k1, k3, k2), (0, 0, 1))),
            (-b, bw((k1, k3, k2), (0, 1, 0))),
            (b, bw((k3, k1, k2), (0, 0, 1))),
            (-b, bw((k3, k1, k2), (1, 0, 0))),
            (b, bw((k1 + k3, k2), (0, 1))),
            (-b, bw((k1 + k3, k2), (1, 0))),
        ]
    )
    return lhs, rhs


def check_lemma_gdsh1(case: str, indices: Sequence[int], order: int = DEFAULT_ORDER) -> CheckReport:
    """g^sh(ds(...)) minus the bi-bracket right-hand side lies in the span of weight <= k-1."""
    lhs, rhs = lemma_gdsh1_sides(case, indices)
    total = sum(indices)
    params = {"case": case, "indices": list(indices), "order": order}

    def target(n: int) -> QSeries:
        return eval_map_gsh(lhs, n) - eval_map_g(rhs, n)

    cert = congruence_certificate(target, total - 1, order)
    return _span_report("lemma_gdsh1", params, order, {f"{case}{tuple(indices)}": cert}, {"rhs": rhs})


# Derivative in depth two and three


def dgsh_combination(indices: Sequence[int]) -> LinComb:
    """ds-combination congruent to d g^sh_{k1,k2} or d g^sh_{k1,k2,k3}.

    Raises:
        AlgebraDomainError: If an index is below 2 or the depth is not 2 or 3
    """
    ks = tuple(int(k) for k in indices)
    if len(ks) not in (2, 3):
        raise AlgebraDomainError(f"depth must be 2 or 3, got {len(ks)}")
    if any(k < 2 for k in ks):
        raise AlgebraDomainError(f"all indices must be >= 2, got {ks}")
    if len(ks) == 2:
        k1, k2 = ks
        return (
            (ds(w(1), w(k1 + 1, k2)) - ds(w(k2), w(k1 + 1, 1))) * (2 * k1)
            + ds(w(1), w(k1, k2 + 1)) * (2 * k2)
        )
    k1, k2, k3 = ks
    first = ds(w(1), w(k1 + 1, k2, k3)) + ds(w(k3), w(k2, k1 + 1, 1))
    second = ds(w(k3), w(k1 + 1 + k2, 1)) - ds(w(k1 + 1, 1), w(k2, k3))
    third = ds(w(1), w(k1, k2 + 1, k3)) - ds(w(k3), w(k1, k2 + 1, 1))
    fourth = ds(w(1), w(k1, k2, k3 + 1))
    return (first + second) * (2 * k1) + third * (2 * k2) + fourth * (2 * k3)


def _check_depth(case: str, indices: Sequence[int]) -> None:
    expected = {"depth2": 2, "depth3": 3}
    if case not in expected:
        raise AlgebraDomainError(f"unknown case {case!r}; use depth2 or depth3")
    if len(indices) != expected[case]:
        raise AlgebraDomainError(f"{case} needs {expected[case]} indices, got {len(indices)}")


def check_thm_dgsh23(
    case: str, indices: Sequence[int], order: int = 60, check_id: str = "thm_dgsh23"
) -> CheckReport:
    """d g^sh minus the ds-combination lies in the g^sh span of weight <= sum(k)+1."""
    _check_depth(case, indices)
    comb = dgsh_combination(indices)
    ks = tuple(indices)
    params = {"case": case, "indices": list(ks), "order": order}

    def target(n: int) -> QSeries:
        return derivative_q(eval_gsh(ks, n)) - eval_map_gsh(comb, n)

    cert = congruence_certificate(target, sum(ks) + 1, order)
    top = comb.homogeneous_part(sum(ks) + 2)
    return _span_report(check_id, params, order, {GshIndex(ks).label(): cert}, {"top_weight_part": top})


def check_conjecture_formal(case: str, indices: Sequence[int], order: int = 60) -> CheckReport:
    """Regularized-bracket shadow of the Eisenstein derivative formula."""
    return check_thm_dgsh23(case, indices, order, check_id="conjecture_formal")


DGSH22_EXPECTED = lincomb_sum(
    [
        (4, w(2, 4)),
        (4, w(3, 3)),
        (4, w(4, 2)),
        (-4, w(5, 1)),
        (-4, w(1, 2, 3)),
        (4, w(1, 3, 2)),
        (24, w(1, 4, 1)),
        (-4, w(2, 1, 3)),
        (-4, w(2, 2, 2)),
        (8, w(2, 3, 1)),
    ]
)


def check_dgsh22_example(order: int = 60) -> CheckReport:
    """The explicit expansion of d g^sh_{2,2} modulo weight <= 5."""
    comb = dgsh_combination((2, 2))
    report = check_thm_dgsh23("depth2", (2, 2), order, check_id="dgsh22_example")
    matches = comb.homogeneous_part(6) == DGSH22_EXPECTED
    report.details["expected_top_weight_part"] = DGSH22_EXPECTED
    report.details["top_weight_matches"] = matches
    if not matches:
        report.status = CheckStatus.FAIL
    return report


def check_d_closure(max_weight: int = 6, order: int = DEFAULT_ORDER) -> CheckReport:
    """d g^sh of weight k lies in the g^sh span of weight <= k+2, for k <= max_weight - 2."""
    params = {"max_weight": max_weight, "order": order}
    certificates: Dict[str, SpanCertificate] = {}
    for k in range(1, max_weight - 1):
        for ks in compositions(k):
            certificates[GshIndex(ks).label()] = congruence_certificate(
                lambda n, ks=ks: derivative_q(eval_gsh(ks, n)), k + 2, order
            )
    return _span_report("d_closure", params, order, certificates)


# Symbolic laws


def _random_triples(
    rng: random.Random, count: int, max_weight: int, h1: bool
) -> Iterable[Tuple[Word, Word, Word]]:
    for _ in range(count):
        total = rng.randint(3, max_weight)
        a = rng.randint(1, total - 2)
        b = rng.randint(1, total - a - 1)
        c = rng.randint(1, total - a - b)
        yield tuple(random_word(rng, n, h1=h1, max_depth=4) for n in (a, b, c))


def check_product_laws(
    max_weight: int = 8,
    random_triples: int = 0,
    random_weight: int = 12,
    seed: int = 0,
) -> CheckReport:
    """Commutativity and associativity of the four products, plus the P properties.

    Every law is checked exhaustively up to max_weight. With random_triples > 0,
    associativity of boxast, harmonic and shuffle is also checked on that many
    seeded random triples of combined weight <= random_weight.
    """
    params = {
        "max_weight": max_weight,
        "random_triples": random_triples,
        "random_weight": random_weight,
        "seed": seed,
    }
    failures: List[Dict[str, Any]] = []
    words = words_up_to_weight(max_weight, include_empty=False)
    h1 = [x for x in words if x.is_h1()]
    checked = 0

    def record(law: str, *operands: Word) -> None:
        failures.append({"law": law, "operands": list(operands)})

    products_all = (("boxast", boxast), ("boxdot", boxdot))
    products_h1 = (("harmonic", harmonic), ("shuffle", shuffle))
    for name, fn in products_all + products_h1:
        pool = words if name in ("boxast", "boxdot") else h1
        for u, v in _bounded_combinations(pool, 2, max_weight):
            checked += 1
            if fn(u, v) != fn(v, u):
                record(f"{name} commutative", u, v)
        for u, v, x in _bounded_combinations(pool, 3, max_weight):
            checked += 1
            if fn(fn(u, v), x) != fn(u, fn(v, x)):
                record(f"{name} associative", u, v, x)

    for u in words:
        checked += 1
        image = involution_p(u)
        if involution_p(image) != LinComb.word(u):
            record("P involutive", u)
        if any(x.weight != u.weight or x.depth != u.depth for x in image):
            record("P preserves weight and depth", u)

    for u, v in _bounded_combinations(h1, 2, max_weight):
        checked += 1
        product = boxast(u, v)
        if not product.is_h1():
            record("boxast closed on h1", u, v)
        if product.homogeneous_part(u.weight + v.weight) != harmonic(u, v):
            record("boxast top weight is harmonic", u, v)

    rng = random.Random(seed)
    for name, fn in (("boxast", boxast), ("harmonic", harmonic), ("shuffle", shuffle)):
        for u, v, x in _random_triples(rng, random_triples, random_weight, h1=name != "boxast"):
            checked += 1
            if fn(fn(u, v), x) != fn(u, fn(v, x)):
                record(f"{name} associative", u, v, x)
    return _identity_report("product_laws", params, None, checked, failures)


WEIGHT5_RELATION = lincomb_sum(
    [
        (1, w(5)),
        (-2, w(2, 3)),
        (-6, w(1, 4)),
        (-3, bw((4,), (1,))),
        (3, w(4)),
        (Fraction(-1, 12), w(3)),
    ]
)


def worked_examples() -> List[Tuple[str, LinComb, LinComb]]:
    """(name, computed, expected) for the worked symbolic examples."""
    e11, e12 = bw((1,), (1,)), bw((1,), (2,))
    return [
        ("e2 boxast e3", boxast(w(2), w(3)), lincomb_sum([(1, w(2, 3)), (1, w(3, 2)), (1, w(5)), (Fraction(-1, 12), w(3))])),
        (
            "e1^(1) boxast e1^(2)",
            boxast(e11, e12),
            lincomb_sum([(1, e11 + e12), (1, e12 + e11), (3, bw((2,), (3,))), (-3, bw((1,), (3,)))]),
        ),
        ("P(e1^(2) e1^(1))", involution_p(e12 + e11), lincomb_sum([(1, w(2, 3)), (3, w(1, 4))])),
        ("P(e1^(1) e1^(2))", involution_p(e11 + e12), lincomb_sum([(1, w(3, 2)), (2, w(2, 3)), (3, w(1, 4))])),
        (
            "e2 boxdot e3",
            boxdot(w(2), w(3)),
            lincomb_sum([(1, w(3, 2)), (3, w(2, 3)), (6, w(1, 4)), (3, bw((4,), (1,))), (-3, w(4))]),
        ),
        ("e2 * e3", harmonic(w(2), w(3)), lincomb_sum([(1, w(2, 3)), (1, w(3, 2)), (1, w(5))])),
        ("e2 sh e3", shuffle(w(2), w(3)), lincomb_sum([(1, w(3, 2)), (3, w(2, 3)), (6, w(1, 4))])),
        ("ds(e1, e2)", ds(w(1), w(2)), lincomb_sum([(1, w(3)), (-1, w(1, 2))])),
        (
            "gsh(1,2)",
            gsh_in_g((1, 2)),
            lincomb_sum([(1, w(1, 2)), (HALF, bw((2,), (1,))), (-HALF, w(2))]),
        ),
        (
            "gsh(1,1,3)",
            gsh_in_g((1, 1, 3)),
            lincomb_sum(
                [
                    (1, w(1, 1, 3)),
                    (HALF, bw((1, 3), (1, 0))),
                    (-HALF, w(1, 3)),
                    (HALF, bw((1, 3), (0, 1))),
                    (-HALF, bw((1, 3), (1, 0))),
                    (-HALF, w(1, 3)),
                    (Fraction(1, 6), bw((3,), (2,))),
                    (Fraction(-1, 4), bw((3,), (1,))),
                    (Fraction(1, 6), w(3)),
                ]
            ),
        ),
        ("gsh(3,2)", gsh_in_g((3, 2)), LinComb.word(w(3, 2))),
    ]


def check_worked_examples(order: int = 40) -> CheckReport:
    """Golden symbolic examples, and the weight-5 bracket relation evaluated to zero."""
    params = {"order": order}
    failures: List[Dict[str, Any]] = []
    examples = worked_examples()
    for name, got, expected in examples:
        if got != expected:
            failures.append({"case": name, "got": got, "expected": expected})
    relation = eval_map_g(WEIGHT5_RELATION, order)
    if not relation.is_zero():
        failures.append({"case": "weight 5 relation", "first_nonzero": relation.first_difference(QSeries.zero(order))})
    return _identity_report("worked_examples", params, order, len(examples) + 1, failures)
