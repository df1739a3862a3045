"""Modified thinning: propose candidates from a piecewise-constant bound and
accept probabilistically.

Between events the intensity only decays, so the post-jump value
M = lambda(t_i+) = mu + alpha * S_i dominates it until the next event
(M = mu before the first). Candidates arrive at rate M; each costs two
uniforms (one for the gap, one for the accept test). On rejection the clock
still advances and M stays valid; on acceptance the state and bound are
refreshed.
"""

from __future__ import annotations

import math

from ..core import EventSequence, HawkesParams
from ..intensity import update_s
from .base import StoppingRule, resolve_stream


def simulate_ogata(params: HawkesParams, stop: StoppingRule, seed) -> EventSequence:
    """Simulate a trajectory by thinning. Two uniforms per candidate."""
    stream = resolve_stream(seed)
    draw = stream.uniform_open
    mu, alpha, beta = params.mu, params.alpha, params.beta

    clock = 0.0
    t_last = 0.0          # clock origin until the first event arrives
    s = 0.0
    bound = mu
    times: list[float] = []
    n_target = stop.n_events
    horizon = stop.horizon

    while True:
        if n_target is not None and len(times) >= n_target:
            break
        u1 = draw()
        u2 = draw()
        cand = clock - math.log(u1) / bound
        if horizon is not None and cand > horizon:
            break
        lam = mu + alpha * s * math.exp(-beta * (cand - t_last))
        assert lam <= bound + 1e-12  # decay-only regime keeps the bound valid
        if u2 <= lam / bound:
            times.append(cand)
            s = update_s(s, cand - t_last, beta)
            t_last = cand
            bound = mu + alpha * s
        clock = cand
    return EventSequence(times)
