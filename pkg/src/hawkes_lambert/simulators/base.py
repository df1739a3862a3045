"""Common pieces shared by the four trajectory generators: the stopping rule,
the first-event draw, and stream handling."""

from __future__ import annotations

import math
from dataclasses import dataclass

from ..core import HawkesParams, RngStream


@dataclass(frozen=True)
class StoppingRule:
    """When to stop a simulation: an exact event count or a time horizon.

    Exactly one of the two bounds is set. In event-count mode the trajectory
    has exactly ``n_events`` events; in horizon mode it contains every event
    at or before ``horizon``, and the first candidate beyond it is discarded.
    """

    n_events: int | None = None
    horizon: float | None = None

    def __post_init__(self):
        if (self.n_events is None) == (self.horizon is None):
            raise ValueError("set exactly one of n_events or horizon")
        if self.n_events is not None:
            if int(self.n_events) != self.n_events or self.n_events < 1:
                raise ValueError(f"n_events must be an integer >= 1, got {self.n_events!r}")
            object.__setattr__(self, "n_events", int(self.n_events))
        else:
            if not math.isfinite(self.horizon) or self.horizon <= 0:
                raise ValueError(f"horizon must be a finite positive time, got {self.horizon!r}")

    @classmethod
    def event_count(cls, n: int) -> "StoppingRule":
        return cls(n_events=n)

    @classmethod
    def until(cls, t: float) -> "StoppingRule":
        return cls(horizon=t)


def resolve_stream(seed) -> RngStream:
    """Accept either a seed or an already-constructed stream."""
    if isinstance(seed, RngStream):
        return seed
    return RngStream(seed)


def first_event(params: HawkesParams, stream: RngStream) -> float:
    """Time of the first event: exponential with rate mu.

    With no history to condition on, the intensity is the background rate,
    so t0 = -log(u) / mu for a single uniform draw.
    """
    return -math.log(stream.uniform_open()) / params.mu
