"""Inverse-transform simulation where each gap comes from one closed-form
Lambert-W evaluation.

Each inter-arrival time solves the quantile equation Lambda(delta) = -log(u)
for the compensator increment Lambda. Rearranged, the equation becomes
a*e^x + b*x + c = 0 in x = -beta*delta, whose root is a single W evaluation:

    delta = (W(d) - log B - A) / beta
    d     = A * B * exp(A),   A = (alpha/mu) * S_k,   B = u^(beta/mu)

No iteration on the process state is involved: one uniform in, one gap out.
"""

from __future__ import annotations

import math

from ..core import EventSequence, HawkesParams
from ..intensity import update_s
from ..lambertw import HALLEY, _check_backend, lambert_w0, lambert_w0_log
from .base import StoppingRule, first_event, resolve_stream

# Beyond this value of log d = log A + log B + A, forming d would overflow a
# double; the log-argument evaluation takes over.
_LOG_D_DIRECT_MAX = 700.0


def next_delta_lambert(params: HawkesParams, s_k: float, u: float,
                       backend: str = HALLEY) -> float:
    """Gap to the next event: the closed-form root of the quantile equation.

    Requires at least one prior event (s_k >= 1) and u in (0, 1). For
    alpha = 0 the process is Poisson and the gap is -log(u)/mu exactly.
    """
    mu, alpha, beta = params.mu, params.alpha, params.beta
    lnu = math.log(u)
    if alpha == 0.0:
        return -lnu / mu
    a_coef = (alpha / mu) * s_k
    z = (beta / mu) * lnu + a_coef          # log B + A
    log_d = math.log(a_coef) + z
    if log_d > _LOG_D_DIRECT_MAX:
        w = lambert_w0_log(log_d, backend)
    else:
        w = lambert_w0(a_coef * math.exp(z), backend)
    return (w - z) / beta


def simulate_lambert(params: HawkesParams, stop: StoppingRule, seed,
                     backend: str = HALLEY) -> EventSequence:
    """Simulate a trajectory by repeated Lambert-W gap draws.

    One uniform is consumed per event. ``seed`` may be an integer or an
    existing RngStream (one stream per trajectory).
    """
    _check_backend(backend)
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
            delta = next_delta_lambert(params, s, draw(), backend)
            t += delta
            times.append(t)
            s = update_s(s, delta, beta)
    else:
        while True:
            delta = next_delta_lambert(params, s, draw(), backend)
            if t + delta > stop.horizon:
                break
            t += delta
            times.append(t)
            s = update_s(s, delta, beta)
    return EventSequence(times)
