import math
from fractions import Fraction as F
from itertools import combinations

import pytest

from cmexpand.engine import (
    ExpansionRatio,
    X0Policy,
    closed_form_partial,
    error_bound,
    expand,
    regroup,
    term_magnitude,
)
from cmexpand.errors import InsufficientTerms, NonConvergent, PrecisionExhausted
from cmexpand.realnum import inv_pi, pi_multiple

HALF = ExpansionRatio(1, 2)
RATIOS = [ExpansionRatio(r, s) for r, s in combinations(range(1, 7), 2)]


def greedy_oracle(target, ratio, x0, terms):
    # independent reference: direct greedy recursion on exact rationals
    sums = [x0]
    for n in range(1, terms + 1):
        diff = target - sums[-1]
        if diff == 0:
            break
        sign = 1 if diff > 0 else -1
        sums.append(sums[-1] + sign * F(ratio.r ** (n - 1), ratio.s ** n))
    return sums


class TestRatio:
    def test_normalized(self):
        ratio = ExpansionRatio(2, 4)
        assert (ratio.r, ratio.s) == (1, 2)

    def test_invalid(self):
        for r, s in ((0, 2), (2, 2), (3, 2), (-1, 2)):
            with pytest.raises(ValueError):
                ExpansionRatio(r, s)

    def test_weight(self):
        assert ExpansionRatio(2, 3).weight == (2, 1)
        assert ExpansionRatio(1, 2).weight == (1, 1)

    def test_from_text(self):
        assert ExpansionRatio.from_text("3/4") == ExpansionRatio(3, 4)
        with pytest.raises(ValueError):
            ExpansionRatio.from_text("3")


class TestLadder:
    def test_term_magnitude_examples(self):
        assert term_magnitude(HALF, 3) == F(1, 8)
        assert term_magnitude(ExpansionRatio(2, 3), 1) == F(1, 3)
        assert term_magnitude(ExpansionRatio(3, 4), 2) == F(3, 16)

    def test_error_bound_examples(self):
        assert error_bound(HALF, 0) == 1
        assert error_bound(HALF, 5) == F(1, 32)
        assert error_bound(ExpansionRatio(2, 3), 2) == F(4, 9)

    def test_ladder_telescopes(self):
        for ratio in RATIOS:
            for n in range(1, 21):
                assert error_bound(ratio, n - 1) == term_magnitude(ratio, n) + error_bound(ratio, n)

    def test_closed_form_examples(self):
        assert closed_form_partial(HALF, 4) == F(5, 16)
        assert closed_form_partial(HALF, 0) == 0
        assert closed_form_partial(ExpansionRatio(2, 3), 3) == F(7, 27)


class TestExpandExact:
    def test_one_third(self):
        run = expand(F(1, 3), HALF, "zero", 9)
        assert run.partial_sums[:6] == (0, F(1, 2), F(1, 4), F(3, 8), F(5, 16), F(11, 32))
        assert [x * 2**n for n, x in enumerate(run.partial_sums)] == [0, 1, 1, 3, 5, 11, 21, 43, 85, 171]
        assert run.signs == (1, -1, 1, -1, 1, -1, 1, -1, 1)

    def test_one_seventh_signs_repeat_plus_minus_minus(self):
        run = expand(F(1, 7), HALF, "zero", 12)
        assert run.signs == (1, -1, -1) * 4
        assert run.partial_sums[:8] == (
            0, F(1, 2), F(1, 4), F(1, 8), F(3, 16), F(5, 32), F(9, 64), F(19, 128),
        )

    def test_one_fifth_in_two_thirds(self):
        run = expand(F(1, 5), ExpansionRatio(2, 3), "zero", 4)
        assert run.partial_sums == (0, F(1, 3), F(1, 9), F(7, 27), F(13, 81))

    def test_termination(self):
        run = expand(F(1, 4), HALF, "zero", 10)
        assert run.terminated and len(run.signs) == 2
        assert run.partial_sums == (0, F(1, 2), F(1, 4))
        # hitting the target on the very last allowed term still counts
        run = expand(F(1, 4), HALF, "zero", 2)
        assert run.terminated and len(run.signs) == 2

    def test_no_termination_in_thirds(self):
        run = expand(F(1, 4), ExpansionRatio(1, 3), "zero", 64)
        assert not run.terminated and len(run.signs) == 64

    def test_greedy_error_bound_everywhere(self):
        targets = [F(1, q) for q in range(2, 13)] + [F(3, 7), F(2, 5)]
        for ratio in (HALF, ExpansionRatio(1, 3), ExpansionRatio(2, 3)):
            for target in targets:
                try:
                    run = expand(target, ratio, "larger", 14)
                except NonConvergent:
                    continue
                for n, x in enumerate(run.partial_sums):
                    assert abs(target - x) <= error_bound(ratio, n)

    def test_matches_independent_greedy(self):
        for ratio in (HALF, ExpansionRatio(1, 4), ExpansionRatio(3, 4)):
            for q in range(2, 11):
                try:
                    run = expand(F(1, q), ratio, "zero", 10)
                except NonConvergent:
                    continue
                assert list(run.partial_sums) == greedy_oracle(F(1, q), ratio, F(0), 10)

    def test_canonical_agreement_and_alternation(self):
        for ratio in RATIOS:
            target = F(1, ratio.r + ratio.s)
            run = expand(target, ratio, "zero", 12)
            for n, x in enumerate(run.partial_sums):
                assert x == closed_form_partial(ratio, n)
            assert run.signs == tuple((-1) ** k for k in range(12))

    def test_x0_policies(self):
        assert expand(F(1, 3), HALF, X0Policy.AT_ONE, 0).x0 == 1
        assert expand(F(1, 3), HALF, "larger", 0).x0 == 0
        assert expand(F(3, 4), HALF, "larger", 0).x0 == 1
        assert expand(F(1, 2), HALF, "larger", 0).x0 == 0

    def test_x0_choice_does_not_break_convergence(self):
        target = F(5, 8)
        for policy in ("zero", "one"):
            run = expand(target, HALF, policy, 16)
            for n, x in enumerate(run.partial_sums):
                assert abs(target - x) <= error_bound(HALF, n)

    def test_zero_and_one_terminate_immediately(self):
        run = expand(F(0), HALF, "zero", 5)
        assert run.terminated and run.partial_sums == (F(0),)
        run = expand(F(1), HALF, "one", 5)
        assert run.terminated and run.partial_sums == (F(1),)


class TestExpandErrors:
    def test_out_of_range_target(self):
        with pytest.raises(ValueError):
            expand(F(5, 3), HALF)
        with pytest.raises(ValueError):
            expand(F(-1, 3), HALF)

    def test_initial_gap_too_large(self):
        # tail(0) = 1/2 for ratio 1/3, so 3/4 is unreachable from 0
        with pytest.raises(NonConvergent):
            expand(F(3, 4), ExpansionRatio(1, 3), "zero", 8)

    def test_tail_guard(self):
        with pytest.raises(NonConvergent):
            expand(F(1, 7), ExpansionRatio(1, 3), "zero", 8)

    def test_unit_interval_guard(self):
        # greedy step 3 for 1/10 in powers of 2/3 would land at -1/27
        with pytest.raises(NonConvergent):
            expand(F(1, 10), ExpansionRatio(2, 3), "zero", 8)

    def test_negative_max_terms(self):
        with pytest.raises(ValueError):
            expand(F(1, 3), HALF, "zero", -1)


class TestExpandReal:
    def test_quarter_pi_start(self):
        run = expand(pi_multiple(F(1, 4)), HALF, "one", 5)
        assert run.partial_sums == (1, F(1, 2), F(3, 4), F(7, 8), F(13, 16), F(25, 32))

    def test_inv_pi_partial_sums(self):
        run = expand(inv_pi(), HALF, "zero", 9)
        assert run.partial_sums[-1] == F(163, 512)
        assert not run.terminated

    def test_larger_group_resolves_by_bracket(self):
        assert expand(inv_pi(), HALF, "larger", 0).x0 == 0
        assert expand(pi_multiple(F(1, 4)), HALF, "larger", 0).x0 == 1

    def test_precision_exhausted(self):
        # around n = 12 the estimate is ~2e-6 from pi/4, undecidable at 8 bits
        with pytest.raises(PrecisionExhausted):
            expand(pi_multiple(F(1, 4)), HALF, "one", 16, max_bits=8)

    def test_matches_float_greedy(self):
        run = expand(inv_pi(), HALF, "zero", 15)
        oracle = [F(0)]
        for n in range(1, 16):
            sign = 1 if 1 / math.pi > float(oracle[-1]) else -1
            oracle.append(oracle[-1] + sign * F(1, 2**n))
        assert list(run.partial_sums) == oracle


class TestRegroup:
    def test_one_seventh_block3(self):
        run = expand(F(1, 7), HALF, "zero", 18)
        grouped = regroup(run, 3)
        assert all(c == 1 for c in grouped.coefficients)
        assert [x * 8**n for n, x in enumerate(grouped.partial_sums)] == [0, 1, 9, 73, 585, 4681, 37449]

    def test_one_fifth_block2_alternates(self):
        run = expand(F(1, 5), HALF, "zero", 12)
        grouped = regroup(run, 2)
        assert list(grouped.coefficients) == [1, -1, 1, -1, 1, -1]

    def test_one_fifth_block4_constant(self):
        run = expand(F(1, 5), HALF, "zero", 16)
        grouped = regroup(run, 4)
        assert all(c == 3 for c in grouped.coefficients)

    def test_block1_is_identity(self):
        run = expand(F(1, 3), HALF, "zero", 8)
        grouped = regroup(run, 1)
        assert grouped.partial_sums == run.partial_sums
        assert grouped.coefficients == tuple(F(sign) for sign in run.signs)

    def test_grouped_sums_are_strided_originals(self):
        for block in (1, 2, 3, 4):
            for target, ratio in ((F(1, 7), HALF), (F(1, 5), ExpansionRatio(2, 3))):
                run = expand(target, ratio, "zero", 12)
                grouped = regroup(run, block)
                for n, x in enumerate(grouped.partial_sums):
                    assert x == run.partial_sums[block * n]

    def test_grouped_series_invariant(self):
        run = expand(F(1, 5), ExpansionRatio(2, 3), "zero", 12)
        grouped = regroup(run, 3)
        step = ratio_power = F(2, 3) ** 3
        total = grouped.x0
        for k, coefficient in enumerate(grouped.coefficients, start=1):
            total += coefficient * ratio_power
            ratio_power *= step
            assert total == grouped.partial_sums[k]

    def test_insufficient_terms(self):
        run = expand(F(1, 4), HALF, "zero", 10)  # terminates with 2 terms
        with pytest.raises(InsufficientTerms):
            regroup(run, 3)
        with pytest.raises(ValueError):
            regroup(run, 0)
