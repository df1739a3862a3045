"""Principal-branch Lambert-W for nonnegative real arguments, plus the
closed-form solver for the transcendental equation a*e^x + b*x + c = 0.

Two interchangeable backends implement the same evaluation contract:

* ``halley``: a cubically convergent Halley iteration, purpose-built for
  nonnegative arguments. This is the fast path the simulators use.
* ``bisection_reference``: plain bisection on w*e^w - d over a wide bracket.
  Deliberately slow and simple; it stands in for a general-purpose library
  implementation and doubles as an independent check on the Halley backend.

A log-argument form ``lambert_w0_log`` evaluates W(exp(L)) without ever
forming exp(L); callers use it when the argument would overflow a double
(L greater than roughly 700).
"""

from __future__ import annotations

import math

from .core import NoConvergenceError

HALLEY = "halley"
BISECTION_REFERENCE = "bisection_reference"
BACKENDS = (HALLEY, BISECTION_REFERENCE)

_MAX_ITER = 100
# exp(x) overflows a double just above x = 709.78; stay clear of it
_EXP_OVERFLOW = 709.0


def _check_backend(backend: str) -> None:
    if backend not in BACKENDS:
        raise ValueError(f"unknown backend {backend!r}, expected one of {BACKENDS}")


def _initial_guess(d: float) -> float:
    # Below 1 the identity line is close enough; from e upward the classic
    # asymptotic log d - log log d is; between the two anchors both evaluate
    # to 1 at the endpoints, so the linear blend is the constant 1.
    if d < 1.0:
        return d
    if d >= math.e:
        l = math.log(d)
        return l - math.log(l)
    return 1.0


def _w0_halley(d: float) -> tuple[float, int]:
    """Halley iteration for W0(d), d >= 0. Returns (w, iterations used)."""
    if d == 0.0:
        return 0.0, 0
    w = _initial_guess(d)
    # residual tolerance relative to d itself: an absolute floor of 1e-13
    # would accept the raw seed for small d with relative error ~d, breaking
    # agreement with the reference backend
    r_tol = 1e-13 * d
    for i in range(1, _MAX_ITER + 1):
        ew = math.exp(w)
        r = w * ew - d
        if abs(r) <= r_tol:
            return w, i
        step = r / (ew * (w + 1.0) - (w + 2.0) * r / (2.0 * w + 2.0))
        w -= step
        if abs(step) < 1e-15 * (1.0 + abs(w)):
            return w, i
    raise NoConvergenceError(f"Halley iteration did not converge for d = {d!r}")


def _w0_bisection(d: float) -> float:
    """Reference backend: bisection on w*e^w - d over [0, max(1, log d + 1)]."""
    if d == 0.0:
        return 0.0
    lo = 0.0
    hi = 1.0 if d <= math.e else math.log(d) + 1.0
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        if mid * math.exp(mid) - d < 0.0:
            lo = mid
        else:
            hi = mid
    return lo


def lambert_w0(d: float, backend: str = HALLEY) -> float:
    """W0(d) for d >= 0: the unique w >= 0 with w * exp(w) = d.

    Raises ValueError for negative or non-finite arguments. The result
    satisfies |w * exp(w) - d| <= 1e-12 * max(1, d), and w = 0 iff d = 0.
    """
    _check_backend(backend)
    if math.isnan(d) or math.isinf(d):
        raise ValueError(f"Lambert-W argument must be finite, got {d!r}")
    if d < 0.0:
        raise ValueError(f"Lambert-W argument must be nonnegative, got {d!r}")
    if backend == HALLEY:
        return _w0_halley(d)[0]
    return _w0_bisection(d)


def halley_iterations(d: float) -> int:
    """Iteration count the Halley backend spends on ``d`` (performance guard)."""
    if d < 0.0 or not math.isfinite(d):
        raise ValueError(f"argument must be finite and nonnegative, got {d!r}")
    return _w0_halley(d)[1]


def _w0_log_halley(log_d: float) -> float:
    # Solve g(w) = w + log w - L = 0; g' = 1 + 1/w, g'' = -1/w^2. For L > 1
    # the root exceeds 1, and L - log L seeds the iteration well.
    w = log_d - math.log(log_d) if log_d > math.e else max(1.0, log_d * 0.5)
    g_tol = 1e-14 * max(1.0, log_d)
    for _ in range(_MAX_ITER):
        g = w + math.log(w) - log_d
        if abs(g) <= g_tol:
            return w
        gp = 1.0 + 1.0 / w
        step = 2.0 * g * gp / (2.0 * gp * gp + g / (w * w))
        w -= step
        if abs(step) < 1e-15 * (1.0 + abs(w)):
            return w
    raise NoConvergenceError(f"log-form Halley did not converge for log_d = {log_d!r}")


def _w0_log_bisection(log_d: float) -> float:
    # g(1) = 1 - L < 0 and g(L) = log L > 0 bracket the root for L > 1.
    lo, hi = 1.0, log_d
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        if mid + math.log(mid) - log_d < 0.0:
            lo = mid
        else:
            hi = mid
    return lo


def lambert_w0_log(log_d: float, backend: str = HALLEY) -> float:
    """W0(exp(log_d)) computed without forming exp(log_d).

    Safe for any finite log_d; this is the evaluation path for arguments
    beyond the double-precision range of exp.
    """
    _check_backend(backend)
    if not math.isfinite(log_d):
        raise ValueError(f"log-argument must be finite, got {log_d!r}")
    if log_d <= 1.0:
        # exp(log_d) <= e is comfortably representable; use the direct form.
        return lambert_w0(math.exp(log_d), backend)
    if backend == HALLEY:
        return _w0_log_halley(log_d)
    return _w0_log_bisection(log_d)


def solve_transcendental(a: float, b: float, c: float) -> float:
    """Root of a*e^x + b*x + c = 0 for a >= 0, b > 0.

    Substituting y = b*x + c turns the equation into the Lambert form, giving

        x = -W(d) - c/b,    d = (a/b) * exp(-c/b)

    For a = 0 the equation is linear and -c/b is returned directly. Raises
    OverflowError when d is not representable as a double (callers that can
    work in logs should use ``lambert_w0_log`` instead).
    """
    for name, value in (("a", a), ("b", b), ("c", c)):
        if not math.isfinite(value):
            raise ValueError(f"{name} must be finite, got {value!r}")
    if a < 0.0:
        raise ValueError(f"a must be >= 0, got {a!r}")
    if b <= 0.0:
        raise ValueError(f"b must be > 0, got {b!r}")
    if a == 0.0:
        return -c / b
    q = -c / b
    if q > _EXP_OVERFLOW:
        raise OverflowError(
            f"exp(-c/b) = exp({q:g}) overflows; evaluate via lambert_w0_log instead"
        )
    d = (a / b) * math.exp(q)
    if math.isinf(d):
        raise OverflowError(f"(a/b) * exp(-c/b) overflows for a={a!r}, b={b!r}, c={c!r}")
    return -lambert_w0(d) - c / b
