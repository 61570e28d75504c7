from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from phicong.digits import (
    DigitResidueCounts,
    c_m,
    digit_profile,
    digit_residue_counts,
    f_iter,
    gamma,
    lehner_bound,
    p_adic_valuation,
)

TABLE_M102 = [0, 0, 2, 2, 4, 5, 7, 9, 11, 13]


class TestDigitProfile:
    def test_digits_of_102_base_3(self):
        prof = digit_profile(3, 102, 5)
        assert prof.digits == (0, 1, 2, 0, 1)
        assert prof.i_prime == 2

    def test_zero_padding_beyond_length(self):
        prof = digit_profile(3, 4, 6)
        assert prof.digits == (1, 1, 0, 0, 0, 0)
        assert prof.i_prime == 1

    def test_i_prime_is_minus_one_iff_p_alpha_divides(self):
        assert digit_profile(3, 27, 3).i_prime == -1
        assert digit_profile(3, 27, 4).i_prime == 4

    @given(st.sampled_from([3, 5, 7]), st.integers(1, 10**6), st.integers(0, 10))
    def test_reconstruction_mod_p_alpha(self, p, m, alpha):
        prof = digit_profile(p, m, alpha)
        value = sum(d * p**i for i, d in enumerate(prof.digits))
        assert value == m % p**alpha


class TestGamma:
    def test_table_row_for_102(self):
        assert [gamma(3, 102, a) for a in range(10)] == TABLE_M102

    def test_stable_increment_beyond_digit_length(self):
        for alpha in range(6, 13):
            assert gamma(3, 102, alpha) == 2 * (alpha - 5) + 5

    def test_selected_table_entries(self):
        assert gamma(3, 102, 2) == 2
        assert gamma(3, 102, 5) == 5
        assert gamma(3, 102, 9) == 13

    def test_alpha_zero_is_zero(self):
        for m in (1, 3, 54, 102):
            assert gamma(3, m, 0) == 0
            assert gamma(5, m, 0) == 0

    def test_hand_evaluation_p5(self):
        # digits of 1 with alpha = 3 are (1, 0, 0): indicator 1 + two zeros.
        assert gamma(5, 1, 3) == 3

    def test_rejects_other_primes(self):
        with pytest.raises(ValueError, match="gamma undefined for this prime"):
            gamma(13, 5, 1)

    @given(st.sampled_from([3, 5, 7]), st.integers(1, 5000), st.integers(0, 12))
    def test_nonnegative_and_zero_iff_no_nonzero_digit(self, p, m, alpha):
        g = gamma(p, m, alpha)
        assert g >= 0
        if m % p**alpha == 0:
            assert g == 0

    @given(st.sampled_from([3, 5, 7]), st.integers(1, 2000))
    def test_constant_increment_once_digits_exhausted(self, p, m):
        # All padded digits are 0, so gamma grows by 2 (p=3) or 1 (p=5,7).
        length = 1
        mm = m
        while mm:
            mm //= p
            length += 1
        step = 2 if p == 3 else 1
        for alpha in range(length, length + 4):
            assert gamma(p, m, alpha + 1) - gamma(p, m, alpha) == step


class TestFIter:
    def test_zero_iterations(self):
        assert f_iter(3, 102, 0) == 102

    def test_fixed_point_at_one(self):
        for k in range(5):
            assert f_iter(3, 1, k) == 1

    def test_hand_iteration(self):
        assert f_iter(3, 102, 1) == 34
        assert f_iter(3, 102, 2) == 12
        assert f_iter(3, 102, 3) == 4

    @given(st.sampled_from([3, 5, 7]), st.integers(1, 10**5))
    def test_carry_law_when_p_does_not_divide(self, p, m):
        if m % p == 0:
            m += 1
        a1 = m % p
        assert f_iter(p, m, 1) == (m + (p - a1)) // p

    @given(st.sampled_from([3, 5, 7]), st.integers(1, 10**5))
    def test_digit_deletion_when_p_divides(self, p, m):
        m *= p
        assert digit_profile(p, f_iter(p, m, 1), 6).digits == digit_profile(
            p, m, 7
        ).digits[1:]


class TestCm:
    def test_level3_values(self):
        assert c_m(3, 4) == 2
        assert c_m(3, 6) == 0
        assert c_m(3, 5) == 1

    def test_level7_value(self):
        assert c_m(7, 9) == 1
        assert c_m(7, 7) == 0

    def test_rejects_other_primes(self):
        with pytest.raises(ValueError):
            c_m(13, 1)


class TestDigitResidueCounts:
    def test_worked_example_102(self):
        # digits (0,1,2,0,1): one 0 and one 1 above the rightmost nonzero
        # digit; the ceiling orbit is 102, 34, 12, 4, 2.
        counts = digit_residue_counts(3, 102, 5)
        assert counts == DigitResidueCounts(
            zeros_above=1,
            ones_above=1,
            res1_in_list=2,
            res2_in_list=1,
            rightmost_digit=1,
        )

    def test_exception_rule_applies_to_example(self):
        counts = digit_residue_counts(3, 102, 5)
        assert counts.res1_in_list == counts.zeros_above + 1  # rightmost is 1
        assert counts.res2_in_list == counts.ones_above  # rightmost is not 2

    def test_precondition_rejected(self):
        with pytest.raises(ValueError, match="lemma precondition fails"):
            digit_residue_counts(3, 27, 3)

    @pytest.mark.parametrize("p", [5, 7])
    def test_rightmost_digit_three_or_more_gives_equality(self, p):
        for m in range(1, 501):
            for alpha in range(1, 5):
                if m % p**alpha == 0:
                    continue
                counts = digit_residue_counts(p, m, alpha)
                if counts.rightmost_digit >= 3:
                    assert counts.res1_in_list == counts.zeros_above
                    assert counts.res2_in_list == counts.ones_above

    @given(st.sampled_from([3, 5, 7]), st.integers(1, 3000), st.integers(1, 8))
    def test_counting_rules_with_exceptions(self, p, m, alpha):
        if m % p**alpha == 0:
            return
        counts = digit_residue_counts(p, m, alpha)
        assert counts.res1_in_list == counts.zeros_above + (
            1 if counts.rightmost_digit == 1 else 0
        )
        assert counts.res2_in_list == counts.ones_above + (
            1 if counts.rightmost_digit == 2 else 0
        )


class TestLehnerBound:
    def test_first_power_first_degree(self):
        assert lehner_bound(1, 1, 1) == 2

    def test_no_application_no_bound(self):
        assert lehner_bound(1, 1, 0) == 0

    def test_grows_with_degree_shrinks_with_power(self):
        assert lehner_bound(2, 3, 2) == 4 * 2 + 2 * (2 - 4)
        assert lehner_bound(3, 1, 1) < 0  # trivial for higher powers


class TestPAdicValuation:
    def test_small(self):
        assert p_adic_valuation(90, 3) == 2
        assert p_adic_valuation(-90, 3) == 2
        assert p_adic_valuation(7, 3) == 0

    def test_huge_power(self):
        assert p_adic_valuation(3**1999 * 2, 3) == 1999

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            p_adic_valuation(0, 3)

    @given(st.integers(0, 300), st.integers(1, 10**6), st.sampled_from([3, 5, 7, 13]))
    def test_split_is_exact(self, v, unit, p):
        if unit % p == 0:
            unit += 1
        assert p_adic_valuation(unit * p**v, p) == v
