"""Inverse-transform simulation with the quantile equation solved numerically.

This is the historical baseline the Lambert route replaces: each gap solves
G(delta) = Lambda(delta) + log(u) = 0 by safeguarded Newton-Raphson, where
Lambda is the compensator increment and G' is the decayed intensity. Both
inverse-transform methods consume one uniform per event and target the same
root, so on a shared stream they generate the same trajectory up to solver
tolerance.
"""

from __future__ import annotations

import math

from ..core import EventSequence, HawkesParams, NoConvergenceError
from ..intensity import compensator_increment, intensity_after, update_s
from .base import StoppingRule, first_event, resolve_stream

DEFAULT_TOL = 1e-12


def next_delta_ozaki(params: HawkesParams, s_k: float, u: float,
                     tol: float = DEFAULT_TOL, max_iter: int = 100) -> float:
    """Gap to the next event, solved to |Lambda(delta) + log(u)| <= tol.

    Newton starts from delta0 = -log(u) / lambda(t_k+), which never overshoots
    because the intensity only decays across the gap. The iterate is kept
    inside a bracket whose upper end is grown geometrically until the
    compensator increment overshoots the target; any Newton step that leaves
    the bracket is replaced by its midpoint.
    """
    if not 0.0 < u < 1.0:
        raise ValueError(f"u must lie in (0, 1), got {u!r}")
    if tol <= 0.0:
        raise ValueError(f"tol must be > 0, got {tol!r}")
    target = -math.log(u)
    x = target / intensity_after(params, s_k, 0.0)
    lo = 0.0
    evals = 0

    # Bracket: G(0) = -target < 0; push the upper probe out until G >= 0.
    g = compensator_increment(params, s_k, x) - target
    evals += 1
    while g < 0.0:
        if evals >= max_iter:
            raise NoConvergenceError(
                f"no bracket after {evals} evaluations (u={u!r}, s_k={s_k!r})")
        lo, x = x, 2.0 * x
        g = compensator_increment(params, s_k, x) - target
        evals += 1
    hi = x

    while abs(g) > tol:
        if evals >= max_iter:
            raise NoConvergenceError(
                f"Newton exceeded {max_iter} evaluations (u={u!r}, s_k={s_k!r}, tol={tol!r})")
        if g < 0.0:
            lo = x
        else:
            hi = x
        nxt = x - g / intensity_after(params, s_k, x)
        if not lo < nxt <= hi:
            nxt = 0.5 * (lo + hi)
        x = nxt
        g = compensator_increment(params, s_k, x) - target
        evals += 1
    return x


def simulate_ozaki(params: HawkesParams, stop: StoppingRule, seed,
                   tol: float = DEFAULT_TOL) -> EventSequence:
    """Simulate a trajectory with the Newton-based gap solver.

    One uniform per event, on the same draw discipline as the Lambert
    simulator.
    """
    stream = resolve_stream(seed)
    draw = stream.uniform_open
    beta = params.beta

    t = first_event(params, stream)
    if stop.horizon is not None and t > stop.horizon:
        return EventSequence([])
    times = [t]
    s = 1.0
    if stop.n_events is not None:
        for _ in range(stop.n_events - 1):
            delta = next_delta_ozaki(params, s, draw(), tol)
            t += delta
            times.append(t)
            s = update_s(s, delta, beta)
    else:
        while True:
            delta = next_delta_ozaki(params, s, draw(), tol)
            if t + delta > stop.horizon:
                break
            t += delta
            times.append(t)
            s = update_s(s, delta, beta)
    return EventSequence(times)
