"""Conditional intensity, compensator increments, the inter-arrival CDF, and
the sum-of-exponents recursion that keeps every simulator O(1) per event.

All functions are pure. The state-based forms take ``s_k``, the sum of
exponents over the history re-centred at the last event, so nothing here
ever needs the O(k) sweep over past events except ``conditional_intensity``,
which exists precisely as the direct-summation reference.
"""

from __future__ import annotations

import math

import numpy as np

from .core import HawkesParams


def conditional_intensity(params: HawkesParams, history, t: float) -> float:
    """Intensity mu + alpha * sum_{t_i < t} exp(-beta (t - t_i)) by direct summation.

    The sum is strict (t_i < t): the intensity is left-continuous, so an
    event at exactly t does not contribute. An empty history is legal and
    gives the background rate mu.
    """
    times = np.asarray(getattr(history, "times", history), dtype=float)
    if times.size == 0:
        return params.mu
    past = times[times < t]
    if past.size == 0:
        return params.mu
    return params.mu + params.alpha * float(np.sum(np.exp(-params.beta * (t - past))))


def intensity_after(params: HawkesParams, s_k: float, delta: float) -> float:
    """Intensity a duration ``delta`` after the last event, from the decayed state.

    Equals mu + alpha * s_k * exp(-beta * delta); at delta = 0 this is the
    post-jump intensity lambda(t_k+).
    """
    if delta < 0:
        raise ValueError(f"delta must be >= 0, got {delta!r}")
    return params.mu + params.alpha * s_k * math.exp(-params.beta * delta)


def update_s(s_k: float, dt: float, beta: float) -> float:
    """Advance the sum of exponents across a gap of length ``dt`` to the next event.

    S_{k+1} = 1 + exp(-beta * dt) * S_k: every prior term decays by the gap
    and the new event contributes exp(0) = 1. Nonpositive gaps are rejected
    rather than clamped; coincident events cannot occur for u in (0, 1).
    """
    if dt <= 0:
        raise ValueError(f"dt must be > 0, got {dt!r}")
    if s_k < 0:
        raise ValueError(f"s_k must be >= 0, got {s_k!r}")
    return 1.0 + math.exp(-beta * dt) * s_k


def compensator_increment(params: HawkesParams, s_k: float, delta: float) -> float:
    """Integrated intensity over a window of length ``delta`` after the last event.

    Closed form of int_{t_k}^{t_k+delta} lambda(s) ds given the state s_k:

        mu * delta + (alpha / beta) * (1 - exp(-beta * delta)) * s_k

    Nonnegative, zero iff delta = 0, and monotone increasing in delta.
    """
    if delta < 0:
        raise ValueError(f"delta must be >= 0, got {delta!r}")
    if s_k < 0:
        raise ValueError(f"s_k must be >= 0, got {s_k!r}")
    mu, alpha, beta = params.mu, params.alpha, params.beta
    return mu * delta + (alpha / beta) * (1.0 - math.exp(-beta * delta)) * s_k


def interarrival_cdf(params: HawkesParams, s_k: float, delta: float) -> float:
    """P(next gap <= delta | state): 1 - exp(-compensator_increment).

    Strictly increasing in delta, in [0, 1), and tends to 1 as delta grows
    because mu > 0.
    """
    return -math.expm1(-compensator_increment(params, s_k, delta))
