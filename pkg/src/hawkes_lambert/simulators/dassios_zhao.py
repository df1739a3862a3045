"""Exact sampling from the cluster decomposition: no rejection, two uniforms
per event.

After an event with post-jump excess intensity g+ = alpha * S_k, the next gap
is the minimum of two independent pieces: the first arrival of the decaying
excitation (a defective distribution, sampled by inverting its survival
function) and the first arrival of the background Poisson stream:

    D  = 1 + beta * log(u1) / g+          (excitation piece, if D > 0)
    S1 = -log(D) / beta                   (+infinity when D <= 0 or g+ = 0)
    S2 = -log(u2) / mu                    (background piece)
    gap = min(S1, S2)

Draw counts are fixed: u1 then u2, every event, even when g+ = 0.
"""

from __future__ import annotations

import math

from ..core import EventSequence, HawkesParams
from ..intensity import update_s
from .base import StoppingRule, resolve_stream


def simulate_dassios_zhao(params: HawkesParams, stop: StoppingRule, seed) -> EventSequence:
    """Simulate a trajectory by exact cluster-based sampling."""
    stream = resolve_stream(seed)
    draw = stream.uniform_open
    mu, alpha, beta = params.mu, params.alpha, params.beta

    t = 0.0
    s = 0.0
    times: list[float] = []
    n_target = stop.n_events
    horizon = stop.horizon

    while True:
        if n_target is not None and len(times) >= n_target:
            break
        g_plus = alpha * s
        u1 = draw()
        if g_plus > 0.0:
            decayed = 1.0 + beta * math.log(u1) / g_plus
            s1 = -math.log(decayed) / beta if decayed > 0.0 else math.inf
        else:
            s1 = math.inf
        u2 = draw()
        s2 = -math.log(u2) / mu
        gap = s1 if s1 < s2 else s2
        if horizon is not None and t + gap > horizon:
            break
        t += gap
        times.append(t)
        s = update_s(s, gap, beta)
    return EventSequence(times)
