import math

import numpy as np
import pytest
from scipy.integrate import quad

from hawkes_lambert.core import EventSequence, HawkesParams, RngStream
from hawkes_lambert.intensity import (compensator_increment, conditional_intensity,
                                      intensity_after, interarrival_cdf, update_s)

P1 = HawkesParams(1.0, 0.5, 1.0)


def direct_sum_intensity(params, times, t):
    # independent O(k) reference, no shared code with the module
    total = params.mu
    for ti in times:
        if ti < t:
            total += params.alpha * math.exp(-params.beta * (t - ti))
    return total


def history_for_s(beta, s_target, t_k=1.0):
    """Two-event history whose sum of exponents at t_k equals s_target in [1, 2)."""
    gap = -math.log(s_target - 1.0) / beta
    return [t_k - gap, t_k]


class TestConditionalIntensity:
    def test_empty_history(self):
        assert conditional_intensity(P1, [], 5.0) == 1.0

    def test_sum_is_strict_at_event_time(self):
        # left-continuity: an event at exactly t contributes nothing
        assert conditional_intensity(P1, [2.0], 2.0) == 1.0

    def test_two_event_value(self):
        got = conditional_intensity(P1, [0.0, 1.0], 2.0)
        want = 1.0 + 0.5 * (math.exp(-2.0) + math.exp(-1.0))
        assert got == pytest.approx(want, rel=1e-15)

    def test_matches_direct_sum_on_random_histories(self):
        rng = np.random.default_rng(5)
        for _ in range(20):
            times = np.sort(rng.uniform(0, 10, size=rng.integers(0, 30)))
            t = rng.uniform(0, 12)
            got = conditional_intensity(P1, times, t)
            assert got == pytest.approx(direct_sum_intensity(P1, times, t), rel=1e-14)
            assert got >= P1.mu

    def test_accepts_event_sequence(self):
        seq = EventSequence([0.0, 1.0])
        assert conditional_intensity(P1, seq, 2.0) == conditional_intensity(P1, [0.0, 1.0], 2.0)


class TestUpdateS:
    def test_first_event_from_zero(self):
        assert update_s(0.0, 0.7, 2.0) == 1.0

    def test_full_decay(self):
        assert update_s(1.0, 1e3, 2.0) == pytest.approx(1.0, abs=1e-300)

    def test_three_event_history_recomputed_from_scratch(self):
        beta = 2.0
        times = [0.0, 0.45, 0.75]
        s = 0.0
        for i, t in enumerate(times):
            s = update_s(s, t - times[i - 1], beta) if i else 1.0
        direct = sum(math.exp(-beta * (times[-1] - ti)) for ti in times)
        assert s == pytest.approx(direct, rel=1e-15)

    def test_closed_form_value(self):
        assert update_s(2.5, 0.3, 2.0) == pytest.approx(1.0 + 2.5 * math.exp(-0.6), rel=1e-15)

    @pytest.mark.parametrize("dt", [0.0, -0.1])
    def test_nonpositive_gap_rejected(self, dt):
        with pytest.raises(ValueError):
            update_s(1.0, dt, 1.0)

    def test_recursion_matches_direct_sum_along_trajectory(self):
        # 1e4-event trajectory: the O(1) recursion matches the O(k) sum at every event
        from hawkes_lambert.simulators import StoppingRule, simulate_lambert
        params = HawkesParams(1.2, 0.6, 0.8)
        t = simulate_lambert(params, StoppingRule.event_count(10_000), seed=11).times
        s = 1.0
        worst = 0.0
        for k in range(1, len(t)):
            s = update_s(s, t[k] - t[k - 1], params.beta)
            direct = float(np.sum(np.exp(-params.beta * (t[k] - t[:k + 1]))))
            worst = max(worst, abs(s - direct) / direct)
        assert worst < 1e-12


class TestCompensatorIncrement:
    def test_zero_delta(self):
        assert compensator_increment(P1, 1.8, 0.0) == 0.0

    def test_poisson_reduction(self):
        p = HawkesParams(2.0, 0.0, 1.0)
        assert compensator_increment(p, 0.0, 0.7) == pytest.approx(1.4, rel=1e-15)

    def test_against_quadrature_oracle(self):
        params = HawkesParams(1.0, 0.5, 2.0)
        times = history_for_s(params.beta, 1.8)
        s_k = sum(math.exp(-params.beta * (times[-1] - ti)) for ti in times)
        assert s_k == pytest.approx(1.8, rel=1e-14)
        oracle, err = quad(lambda u: direct_sum_intensity(params, times, u),
                           times[-1], times[-1] + 0.7, epsabs=1e-13, epsrel=1e-13)
        assert err < 1e-11
        got = compensator_increment(params, 1.8, 0.7)
        assert got == pytest.approx(oracle, abs=1e-10)

    def test_randomized_states_against_quadrature(self):
        rng = np.random.default_rng(17)
        for _ in range(20):
            params = HawkesParams(rng.uniform(0.2, 3), rng.uniform(0, 2), rng.uniform(2.1, 5))
            times = np.sort(rng.uniform(0, 5, size=rng.integers(1, 8)))
            t_k = times[-1]
            s_k = float(np.sum(np.exp(-params.beta * (t_k - times))))
            delta = rng.uniform(0, 3)
            oracle, _ = quad(lambda u: direct_sum_intensity(params, times, u),
                             t_k, t_k + delta, epsabs=1e-13, epsrel=1e-13)
            assert compensator_increment(params, s_k, delta) == pytest.approx(oracle, abs=1e-10)

    def test_negative_inputs_rejected(self):
        with pytest.raises(ValueError):
            compensator_increment(P1, 1.0, -0.1)
        with pytest.raises(ValueError):
            compensator_increment(P1, -1.0, 0.1)


class TestInterarrivalCdf:
    def test_zero_delta(self):
        assert interarrival_cdf(P1, 1.5, 0.0) == 0.0

    def test_exponential_median(self):
        p = HawkesParams(2.0, 0.0, 1.0)
        assert interarrival_cdf(p, 0.0, math.log(2) / 2.0) == pytest.approx(0.5, rel=1e-14)

    def test_composition_with_quadrature_oracle(self):
        params = HawkesParams(1.0, 0.5, 2.0)
        times = history_for_s(params.beta, 1.8)
        oracle, _ = quad(lambda u: direct_sum_intensity(params, times, u),
                         times[-1], times[-1] + 0.7, epsabs=1e-13, epsrel=1e-13)
        assert interarrival_cdf(params, 1.8, 0.7) == pytest.approx(1.0 - math.exp(-oracle),
                                                                   abs=1e-10)

    def test_monotone_in_delta(self):
        deltas = np.linspace(0.0, 20.0, 1000)
        values = [interarrival_cdf(P1, 1.3, d) for d in deltas]
        assert all(b > a for a, b in zip(values, values[1:]))
        assert values[-1] < 1.0
        assert interarrival_cdf(P1, 1.3, 1e4) == pytest.approx(1.0)


class TestIntensityAfter:
    def test_zero_delta_is_post_jump_intensity(self):
        assert intensity_after(P1, 2.0, 0.0) == P1.mu + P1.alpha * 2.0

    def test_decays_toward_background(self):
        assert intensity_after(P1, 2.0, 50.0) == pytest.approx(P1.mu)

    def test_matches_direct_sum(self):
        params = HawkesParams(1.0, 0.5, 2.0)
        times = history_for_s(params.beta, 1.8)
        s_k = 1.8
        for delta in (0.1, 0.9, 3.0):
            want = direct_sum_intensity(params, times, times[-1] + delta)
            assert intensity_after(params, s_k, delta) == pytest.approx(want, rel=1e-13)
