"""Shared domain types: process parameters, event sequences, recursion state,
and the seeded uniform-draw contract used by every simulator."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

# Nearest representable neighbours of the (0, 1) endpoints. Raw generator
# output that lands exactly on an endpoint is mapped onto these so that
# -log(u) and log(1 - u) stay finite.
TINY_OPEN = math.nextafter(0.0, 1.0)
ONE_MINUS = math.nextafter(1.0, 0.0)


class UnstableProcessError(ValueError):
    """Branching ratio alpha/beta >= 1 without the explicit unstable flag."""


class NoConvergenceError(RuntimeError):
    """An iterative solver hit its iteration cap."""


@dataclass(frozen=True)
class HawkesParams:
    """Parameter triple of the exponential-kernel conditional intensity

        lambda(t) = mu + alpha * sum_{t_i < t} exp(-beta * (t - t_i))

    mu is the background rate (> 0), alpha the jump added to the intensity
    at each event (>= 0), beta the decay rate of that excitation (> 0).

    The process is stationary only for branching ratio alpha/beta < 1;
    construction rejects alpha/beta >= 1 unless ``allow_unstable`` is set.
    """

    mu: float
    alpha: float
    beta: float
    allow_unstable: bool = field(default=False, repr=False, compare=False)

    def __post_init__(self):
        mu, alpha, beta = self.mu, self.alpha, self.beta
        for name, value in (("mu", mu), ("alpha", alpha), ("beta", beta)):
            if not math.isfinite(value):
                raise ValueError(f"{name} must be finite, got {value!r}")
        if mu <= 0:
            raise ValueError(f"mu must be > 0, got {mu!r}")
        if alpha < 0:
            raise ValueError(f"alpha must be >= 0, got {alpha!r}")
        if beta <= 0:
            raise ValueError(f"beta must be > 0, got {beta!r}")
        if alpha / beta >= 1.0 and not self.allow_unstable:
            raise UnstableProcessError(
                f"branching ratio alpha/beta = {alpha / beta:g} >= 1; the process "
                "is non-stationary (pass allow_unstable=True to permit this)"
            )

    @property
    def branching_ratio(self) -> float:
        return self.alpha / self.beta

    @property
    def mean_rate(self) -> float:
        """Stationary mean event rate mu / (1 - alpha/beta)."""
        return self.mu / (1.0 - self.alpha / self.beta)


def validate_params(mu: float, alpha: float, beta: float,
                    allow_unstable: bool = False) -> HawkesParams:
    """Validate (mu, alpha, beta) and return the parameter triple.

    Raises ValueError for sign violations and UnstableProcessError when
    alpha/beta >= 1 without the flag.
    """
    return HawkesParams(mu, alpha, beta, allow_unstable=allow_unstable)


@dataclass(frozen=True, eq=False)
class EventSequence:
    """Strictly increasing, finite, nonnegative arrival timestamps."""

    times: np.ndarray

    def __post_init__(self):
        t = np.asarray(self.times, dtype=float)
        object.__setattr__(self, "times", t)
        if t.ndim != 1:
            raise ValueError(f"timestamps must be one-dimensional, got shape {t.shape}")
        if t.size == 0:
            return
        if not np.all(np.isfinite(t)):
            raise ValueError("timestamps must all be finite")
        if t[0] < 0:
            raise ValueError(f"timestamps must be nonnegative, got t[0] = {t[0]!r}")
        if t.size > 1 and not np.all(np.diff(t) > 0):
            raise ValueError("timestamps must be strictly increasing")

    def __len__(self) -> int:
        return self.times.size

    def __iter__(self):
        return iter(self.times)

    def __getitem__(self, idx):
        return self.times[idx]


@dataclass(frozen=True)
class SimulatorState:
    """Per-trajectory recursion state right after an event.

    ``s_k`` is the sum of exponents sum_i exp(-beta * (t_k - t_i)) over all
    events up to and including t_k (so s_k >= 1 once an event exists), and
    ``lambda_plus`` is the post-jump intensity mu + alpha * s_k.
    """

    t_last: float
    s_k: float
    lambda_plus: float

    @classmethod
    def after_event(cls, params: HawkesParams, t_last: float, s_k: float) -> "SimulatorState":
        return cls(t_last=t_last, s_k=s_k,
                   lambda_plus=params.mu + params.alpha * s_k)


class RngStream:
    """Seeded deterministic source of uniform draws on the open interval (0, 1).

    Backed by the counter-based Philox bit generator, which has a published
    reference sequence and produces the identical stream for a given seed on
    every platform. Draws that land exactly on an interval endpoint are mapped
    to the nearest interior double, so 0 < u < 1 always holds.

    A stream is single-owner: one stream per trajectory, never shared.
    """

    def __init__(self, seed: int):
        self.seed = int(seed)
        self._gen = np.random.Generator(np.random.Philox(self.seed))
        self._raw = self._gen.random

    def uniform_open(self) -> float:
        u = self._raw()
        if u <= 0.0:
            return TINY_OPEN
        if u >= 1.0:
            return ONE_MINUS
        return u

    def __repr__(self) -> str:
        return f"RngStream(seed={self.seed})"


def uniform_open(stream: RngStream) -> float:
    """One uniform draw strictly inside (0, 1), advancing the stream."""
    return stream.uniform_open()
