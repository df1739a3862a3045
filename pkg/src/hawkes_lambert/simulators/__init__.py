"""The four trajectory generators behind one interface: given parameters, a
stopping rule, and a seed, produce an event sequence."""

from __future__ import annotations

from ..core import EventSequence, HawkesParams
from ..lambertw import BISECTION_REFERENCE, HALLEY
from .base import StoppingRule, first_event, resolve_stream
from .dassios_zhao import simulate_dassios_zhao
from .lambert import next_delta_lambert, simulate_lambert
from .ogata import simulate_ogata
from .ozaki import DEFAULT_TOL, next_delta_ozaki, simulate_ozaki

LAMBERT_HALLEY = "lambert_halley"
LAMBERT_REFERENCE_W = "lambert_reference_w"
OZAKI_NEWTON = "ozaki_newton"
OGATA_THINNING = "ogata_thinning"
DASSIOS_ZHAO = "dassios_zhao"

ALGORITHM_IDS = (
    LAMBERT_HALLEY,
    LAMBERT_REFERENCE_W,
    OZAKI_NEWTON,
    OGATA_THINNING,
    DASSIOS_ZHAO,
)


def simulate(algorithm: str, params: HawkesParams, stop: StoppingRule,
             seed) -> EventSequence:
    """Run the named algorithm. ``seed`` is an integer or an RngStream."""
    if algorithm == LAMBERT_HALLEY:
        return simulate_lambert(params, stop, seed, backend=HALLEY)
    if algorithm == LAMBERT_REFERENCE_W:
        return simulate_lambert(params, stop, seed, backend=BISECTION_REFERENCE)
    if algorithm == OZAKI_NEWTON:
        return simulate_ozaki(params, stop, seed)
    if algorithm == OGATA_THINNING:
        return simulate_ogata(params, stop, seed)
    if algorithm == DASSIOS_ZHAO:
        return simulate_dassios_zhao(params, stop, seed)
    raise ValueError(f"unknown algorithm {algorithm!r}, expected one of {ALGORITHM_IDS}")


__all__ = [
    "ALGORITHM_IDS",
    "DASSIOS_ZHAO",
    "DEFAULT_TOL",
    "LAMBERT_HALLEY",
    "LAMBERT_REFERENCE_W",
    "OGATA_THINNING",
    "OZAKI_NEWTON",
    "StoppingRule",
    "first_event",
    "next_delta_lambert",
    "next_delta_ozaki",
    "resolve_stream",
    "simulate",
    "simulate_dassios_zhao",
    "simulate_lambert",
    "simulate_ogata",
    "simulate_ozaki",
]
