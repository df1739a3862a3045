"""Simulation of the exponential-kernel Hawkes process via four
interchangeable algorithms, with distributional validation and a runtime
benchmark CLI.

The fast path draws each inter-arrival time with a single closed-form
Lambert-W evaluation; a Newton-based inverse-transform sampler, Ogata's
modified thinning, and exact cluster sampling provide the comparison set.
"""

from .bench import BenchConfig, BenchRecord, emit_plot, median_times, read_csv, run_bench, write_csv
from .core import (EventSequence, HawkesParams, NoConvergenceError, RngStream,
                   SimulatorState, UnstableProcessError, uniform_open, validate_params)
from .intensity import (compensator_increment, conditional_intensity,
                        intensity_after, interarrival_cdf, update_s)
from .lambertw import (BACKENDS, BISECTION_REFERENCE, HALLEY, halley_iterations,
                       lambert_w0, lambert_w0_log, solve_transcendental)
from .simulators import (ALGORITHM_IDS, DASSIOS_ZHAO, LAMBERT_HALLEY,
                         LAMBERT_REFERENCE_W, OGATA_THINNING, OZAKI_NEWTON,
                         StoppingRule, first_event, next_delta_lambert,
                         next_delta_ozaki, simulate, simulate_dassios_zhao,
                         simulate_lambert, simulate_ogata, simulate_ozaki)
from .validation import (SEED_PANEL, PanelResult, empirical_rate, ks_statistic_exp1,
                         lag1_autocorrelation, run_ks_panel, time_rescaling_residuals)

__version__ = "0.1.0"
