import math

import numpy as np
import pytest

from hawkes_lambert.lambertw import (BACKENDS, BISECTION_REFERENCE, HALLEY,
                                     halley_iterations, lambert_w0,
                                     lambert_w0_log, solve_transcendental)


def bisect_w(d, lo=0.0, hi=None, iters=200):
    # independent oracle: bisection on w * exp(w) - d
    if hi is None:
        hi = max(1.0, math.log(d))
    for _ in range(iters):
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        if mid * math.exp(mid) - d < 0.0:
            lo = mid
        else:
            hi = mid
    return lo


def bisect_root(f, lo, hi, iters=200):
    flo = f(lo)
    for _ in range(iters):
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        if (f(mid) < 0.0) == (flo < 0.0):
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


class TestLambertW0:
    @pytest.mark.parametrize("backend", BACKENDS)
    def test_known_points(self, backend):
        assert lambert_w0(0.0, backend) == 0.0
        assert lambert_w0(math.e, backend) == pytest.approx(1.0, abs=1e-13)
        assert lambert_w0(2.0 * math.e ** 2, backend) == pytest.approx(2.0, abs=1e-13)

    def test_large_argument_against_bisection_oracle(self):
        d = 1e6
        oracle = bisect_w(d)
        for backend in BACKENDS:
            assert lambert_w0(d, backend) == pytest.approx(oracle, rel=1e-12)

    @pytest.mark.parametrize("backend", BACKENDS)
    def test_round_trip(self, backend):
        # acceptance runs the full 1e4-point grid; this is the smoke version
        for w in np.logspace(-8, math.log10(700.0), 400):
            d = w * math.exp(w)
            got = lambert_w0(d, backend)
            assert abs(got - w) <= 1e-12 * max(1.0, w), (w, got)

    def test_backend_agreement(self):
        for d in np.logspace(-12, 8, 2000):
            a = lambert_w0(d, HALLEY)
            b = lambert_w0(d, BISECTION_REFERENCE)
            assert abs(a - b) <= 1e-11 * max(a, 1e-300), d

    def test_monotone_on_sorted_grid(self):
        grid = np.logspace(-10, 6, 500)
        values = [lambert_w0(d) for d in grid]
        assert all(b > a for a, b in zip(values, values[1:]))

    def test_zero_only_at_zero(self):
        assert lambert_w0(0.0) == 0.0
        assert lambert_w0(1e-300) > 0.0

    def test_halley_iteration_budget(self):
        counts = [halley_iterations(d) for d in np.logspace(-12, 8, 2000)]
        assert max(counts) <= 8

    def test_rejects_bad_arguments(self):
        for bad in (-1.0, -1e-30, math.nan, math.inf):
            with pytest.raises(ValueError):
                lambert_w0(bad)
        with pytest.raises(ValueError):
            lambert_w0(1.0, backend="newton")


class TestLambertW0Log:
    @pytest.mark.parametrize("backend", BACKENDS)
    def test_agrees_with_direct_form_in_overlap(self, backend):
        for log_d in np.linspace(-5.0, 700.0, 300):
            direct = lambert_w0(math.exp(log_d), backend)
            got = lambert_w0_log(log_d, backend)
            assert abs(got - direct) <= 1e-11 * max(1.0, direct), log_d

    @pytest.mark.parametrize("backend", BACKENDS)
    def test_beyond_double_range(self, backend):
        for log_d in (7.2e2, 1e3, 1e5):
            w = lambert_w0_log(log_d, backend)
            # residual in the log form: w + log w = log d
            assert abs(w + math.log(w) - log_d) <= 1e-10 * log_d

    def test_rejects_non_finite(self):
        with pytest.raises(ValueError):
            lambert_w0_log(math.inf)


class TestSolveTranscendental:
    def test_constructed_root(self):
        # e^0 + 0 - 1 = 0, via d = e and W(e) = 1
        assert solve_transcendental(1.0, 1.0, -1.0) == pytest.approx(0.0, abs=1e-13)

    def test_linear_case(self):
        assert solve_transcendental(0.0, 2.0, -3.0) == 1.5

    def test_against_bisection_oracle(self):
        a, b, c = 0.7, 1.3, -2.1
        oracle = bisect_root(lambda x: a * math.exp(x) + b * x + c, -10.0, 10.0)
        got = solve_transcendental(a, b, c)
        assert got == pytest.approx(oracle, abs=1e-9)

    def test_randomized_residuals(self):
        rng = np.random.default_rng(99)
        for _ in range(1000):
            a = rng.uniform(0.0, 100.0)
            b = rng.uniform(0.1, 10.0)
            c = rng.uniform(-50.0, 50.0)
            x = solve_transcendental(a, b, c)
            residual = a * math.exp(x) + b * x + c
            assert abs(residual) <= 1e-9 * max(abs(a), abs(b), abs(c))

    def test_overflow_raises(self):
        with pytest.raises(OverflowError):
            solve_transcendental(1.0, 1.0, -1000.0)

    def test_rejects_bad_coefficients(self):
        with pytest.raises(ValueError):
            solve_transcendental(-1.0, 1.0, 0.0)
        with pytest.raises(ValueError):
            solve_transcendental(1.0, 0.0, 0.0)
        with pytest.raises(ValueError):
            solve_transcendental(math.nan, 1.0, 0.0)
