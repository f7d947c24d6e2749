"""Unit tests for the verification checks.

Identity checks run at small weights and orders; congruence checks that
need large span solves are marked slow.
"""

from fractions import Fraction
from itertools import combinations_with_replacement

import pytest

from src.core.errors import AlgebraDomainError
from src.core.lincomb import lincomb_sum
from src.core.words import e
from src.qseries.brackets import eval_map_g
from src.utils.combinatorics import words_up_to_weight
from src.verify import checks
from src.verify.checks import (
    DGSH22_EXPECTED,
    MAX_RECORDED_FAILURES,
    WEIGHT5_RELATION,
    depth1_theorem_rhs,
    dgsh_combination,
    ds_sum,
    lemma_gdsh1_sides,
)
from src.verify.report import CheckStatus


@pytest.mark.unit
class TestIdentityChecks:
    """Test exact identities of the bracket map."""

    def test_partition_relation(self):
        """Test g(P(w)) = g(w) at weight <= 3."""
        report = checks.check_partition_relation(max_weight=3, order=10)
        assert report.status is CheckStatus.PASS
        assert report.details["checked"] == 1 + 1 + 3 + 8

    def test_double_shuffle(self):
        """Test both products against the series product."""
        report = checks.check_double_shuffle_g(max_weight=3, order=10)
        assert report.status is CheckStatus.PASS

    def test_double_shuffle_explicit_pairs(self):
        """Test that explicit pairs are recorded in the parameters."""
        report = checks.check_double_shuffle_g(order=10, pairs=[(e(2), e(3))])
        assert report.ok
        assert report.details["checked"] == 1
        assert report.to_dict()["parameters"]["pairs"] == [["e(2)", "e(3)"]]

    def test_derivative_commutes(self):
        """Test g(D w) = d g(w)."""
        assert checks.check_derivative_commutes(max_weight=3, order=12).status is CheckStatus.PASS

    def test_worked_examples(self):
        """Test the golden symbolic expansions."""
        report = checks.check_worked_examples(order=20)
        assert report.status is CheckStatus.PASS, report.details

    def test_product_laws(self):
        """Test commutativity, associativity and P laws."""
        report = checks.check_product_laws(max_weight=3)
        assert report.status is CheckStatus.PASS, report.details
        assert report.order is None

    def test_product_laws_random_triples(self):
        """Test associativity on seeded random triples up to weight 12."""
        small = checks.check_product_laws(max_weight=2)
        report = checks.check_product_laws(max_weight=2, random_triples=6, random_weight=12, seed=3)
        assert report.status is CheckStatus.PASS, report.details
        assert report.details["checked"] == small.details["checked"] + 18

    @pytest.mark.slow
    def test_product_laws_exhaustive_to_weight_eight(self):
        """Test every product law on all words up to weight 8, plus 40 random triples."""
        report = checks.check_product_laws(max_weight=8, random_triples=40)
        assert report.status is CheckStatus.PASS, report.details

    @pytest.mark.edge_case
    def test_product_laws_bounded_enumeration(self):
        """Test that the enumeration visits every pair and triple within the bound."""
        pool = words_up_to_weight(4, include_empty=False)
        pairs = list(checks._bounded_combinations(pool, 2, 4))
        expected = [p for p in combinations_with_replacement(pool, 2) if p[0].weight + p[1].weight <= 4]
        assert pairs == expected
        triples = list(checks._bounded_combinations(pool, 3, 4))
        assert triples == [t for t in combinations_with_replacement(pool, 3) if sum(x.weight for x in t) <= 4]


@pytest.mark.unit
class TestRegularizedChecks:
    """Test identities of the regularized brackets."""

    def test_gsh_equals_g(self):
        """Test g^sh = g for admissible heads."""
        assert checks.check_gsh_equals_g(max_weight=4, order=15).status is CheckStatus.PASS

    def test_gsh_routes(self):
        """Test both evaluation routes in depth <= 3."""
        assert checks.check_gsh_routes(max_weight=5, order=15).status is CheckStatus.PASS

    def test_gsh_shuffle(self):
        """Test the shuffle product law."""
        assert checks.check_gsh_shuffle(max_weight=4, order=12).status is CheckStatus.PASS

    def test_gsh_depth1_square(self):
        """Test g_a g_b as a g^sh combination."""
        assert checks.check_gsh_depth1_square(max_weight=4, order=12).status is CheckStatus.PASS


@pytest.mark.unit
class TestDepthOneDerivative:
    """Test the derivative formula in depth one."""

    def test_rhs_at_k1(self):
        """Test d g1 = 2 g3 - 2 g^sh_{1,2} on words."""
        assert depth1_theorem_rhs(1) == lincomb_sum([(2, e(3)), (-2, e(1) + e(2))])

    @pytest.mark.parametrize("k", [1, 2, 3, 4, 5])
    def test_ds_sum_matches_rhs(self, k):
        """Test the word identity behind the theorem."""
        assert ds_sum(k) == depth1_theorem_rhs(k)

    def test_theorem(self):
        """Test the series identity."""
        assert checks.check_thm_derivative_depth1(kmax=3, order=20).status is CheckStatus.PASS

    def test_ds_sum_check(self):
        """Test the combined word and series check."""
        assert checks.check_ds_sum_identity(kmax=3, order=20).status is CheckStatus.PASS

    @pytest.mark.edge_case
    def test_kmax_must_be_positive(self):
        """Test parameter validation."""
        with pytest.raises(ValueError):
            checks.check_thm_derivative_depth1(kmax=0)


@pytest.mark.unit
class TestDepthTwoDerivative:
    """Test the ds-combinations for depth two and three."""

    def test_dgsh22_top_weight(self):
        """Test the explicit expansion of d g^sh_{2,2}."""
        assert dgsh_combination((2, 2)).homogeneous_part(6) == DGSH22_EXPECTED

    def test_depth_three_weight(self):
        """Test that the depth-three combination has top weight sum(k) + 2."""
        comb = dgsh_combination((2, 2, 2))
        assert comb.max_weight() == 8

    @pytest.mark.edge_case
    @pytest.mark.parametrize("indices", [(1, 2), (2,), (2, 2, 2, 2)])
    def test_invalid_indices(self, indices):
        """Test that indices must be >= 2 in depth two or three."""
        with pytest.raises(AlgebraDomainError):
            dgsh_combination(indices)

    @pytest.mark.edge_case
    def test_case_depth_mismatch(self):
        """Test that the case label must match the index count."""
        with pytest.raises(AlgebraDomainError):
            checks.check_thm_dgsh23("depth3", (2, 2))
        with pytest.raises(AlgebraDomainError):
            checks.check_thm_dgsh23("depth4", (2, 2))


@pytest.mark.unit
class TestLemmaSides:
    """Test hypothesis validation of the one-index-equal-1 lemma."""

    def test_case_i_leading_one(self):
        """Test that only the delta(k1) term survives."""
        _, rhs = lemma_gdsh1_sides("i", (1, 2, 2))
        assert rhs == lincomb_sum([(Fraction(1, 2), e(2) + e(2, 1))])

    @pytest.mark.edge_case
    @pytest.mark.parametrize(
        "case,indices",
        [("i", (2, 2, 2)), ("i", (1, 1, 2)), ("i", (1, 2)), ("ii", (1, 2, 2)), ("iv", (1, 2, 2))],
    )
    def test_invalid_hypotheses(self, case, indices):
        """Test that bad cases and index lists are domain errors."""
        with pytest.raises(AlgebraDomainError):
            lemma_gdsh1_sides(case, indices)


@pytest.mark.unit
class TestReporting:
    """Test status and failure bookkeeping."""

    def test_failures_are_capped(self):
        """Test that only MAX_RECORDED_FAILURES counterexamples are kept."""
        failures = [{"case": str(i)} for i in range(MAX_RECORDED_FAILURES + 5)]
        report = checks._identity_report("demo", {}, 5, 30, failures)
        assert report.status is CheckStatus.FAIL
        assert report.details["failures"] == MAX_RECORDED_FAILURES + 5
        assert len(report.details["counterexamples"]) == MAX_RECORDED_FAILURES

    def test_weight_five_relation_is_zero(self):
        """Test the relation used by the worked examples."""
        assert eval_map_g(WEIGHT5_RELATION, 25).is_zero()


@pytest.mark.unit
@pytest.mark.slow
class TestCongruenceChecks:
    """Test span-membership checks; these solve large rational systems."""

    def test_prop_dgk(self):
        """Test d g^sh_k modulo lower weight for k <= 2."""
        report = checks.check_prop_dgk(kmax=2, order=20)
        assert report.status is CheckStatus.EVIDENCE, report.details["non_members"]
        assert set(report.details["certificates"]) == {"k=1", "k=2"}

    def test_lemma_g10(self):
        """Test g^(1,0)_{2,2} and g^(0,1)_{2,2}."""
        report = checks.check_lemma_g10(pairs=[(2, 2)], order=30)
        assert report.status is CheckStatus.EVIDENCE
        assert set(report.details["certificates"]) == {"e(2,1)e(2)", "e(2)e(2,1)"}

    def test_lemma_g10_rejects_small_entries(self):
        """Test the k >= 2 hypothesis."""
        with pytest.raises(AlgebraDomainError):
            checks.check_lemma_g10(pairs=[(1, 2)])

    def test_lemma_gdsh1(self):
        """Test case i with a leading 1."""
        report = checks.check_lemma_gdsh1("i", (1, 2, 2), order=30)
        assert report.status is CheckStatus.EVIDENCE

    def test_thm_dgsh23_depth2(self):
        """Test d g^sh_{2,2} modulo weight <= 5."""
        report = checks.check_thm_dgsh23("depth2", (2, 2), order=40)
        assert report.status is CheckStatus.EVIDENCE
        assert report.details["top_weight_part"] == DGSH22_EXPECTED

    def test_dgsh22_example(self):
        """Test the explicit example including its top-weight comparison."""
        report = checks.check_dgsh22_example(order=40)
        assert report.status is CheckStatus.EVIDENCE
        assert report.details["top_weight_matches"] is True

    def test_conjecture_formal_id(self):
        """Test that the formal variant reports under its own id."""
        report = checks.check_conjecture_formal("depth2", (2, 2), order=40)
        assert report.check_id == "conjecture_formal"
        assert report.ok

    def test_d_closure(self):
        """Test that derivatives stay in the span two weights up."""
        report = checks.check_d_closure(max_weight=3, order=20)
        assert report.status is CheckStatus.EVIDENCE
        assert list(report.details["certificates"]) == ["gsh(1)"]
