"""Benchmark harness: wall-clock timing of the simulators across a grid of
event counts, with CSV output and a dependency-free SVG chart.

Timing covers the full event loop of one trajectory and excludes generator
seeding and output writing. The reported statistic everywhere is the median
over repetitions, which is robust to scheduler noise.
"""

from __future__ import annotations

import time
import zlib
from dataclasses import dataclass

from .core import HawkesParams, RngStream
from .simulators import ALGORITHM_IDS, StoppingRule, simulate

DEFAULT_PARAMS = HawkesParams(mu=1.2, alpha=0.6, beta=0.8)
DEFAULT_N_GRID = (1_000, 3_000, 10_000, 30_000, 100_000)
DEFAULT_REPETITIONS = 10
DEFAULT_WARMUP = 1
DEFAULT_SEED_BASE = 20_250_401

CSV_HEADER = "algorithm,n_events,repetition,wall_time_s"


@dataclass(frozen=True)
class BenchConfig:
    params: HawkesParams = DEFAULT_PARAMS
    algorithms: tuple[str, ...] = ALGORITHM_IDS
    n_grid: tuple[int, ...] = DEFAULT_N_GRID
    repetitions: int = DEFAULT_REPETITIONS
    warmup: int = DEFAULT_WARMUP
    seed_base: int = DEFAULT_SEED_BASE
    output_path: str = "bench_results.csv"

    def __post_init__(self):
        object.__setattr__(self, "algorithms", tuple(self.algorithms))
        object.__setattr__(self, "n_grid", tuple(int(n) for n in self.n_grid))
        unknown = [a for a in self.algorithms if a not in ALGORITHM_IDS]
        if unknown:
            raise ValueError(f"unknown algorithm ids {unknown}, expected from {ALGORITHM_IDS}")
        if not self.algorithms:
            raise ValueError("need at least one algorithm")
        if not self.n_grid:
            raise ValueError("need at least one event count")
        if any(b <= a for a, b in zip(self.n_grid, self.n_grid[1:])):
            raise ValueError(f"n_grid must be strictly increasing, got {self.n_grid}")
        if self.n_grid[0] < 1:
            raise ValueError("event counts must be >= 1")
        if self.repetitions < 1:
            raise ValueError(f"repetitions must be >= 1, got {self.repetitions}")
        if self.warmup < 0:
            raise ValueError(f"warmup must be >= 0, got {self.warmup}")


@dataclass(frozen=True)
class BenchRecord:
    algorithm: str
    n_events: int
    repetition: int
    wall_time: float


def record_seed(seed_base: int, algorithm: str, n_events: int, repetition: int) -> int:
    """Deterministic per-cell seed: base plus a CRC mix of the cell labels."""
    tag = f"{algorithm}|{n_events}|{repetition}".encode()
    return seed_base + zlib.crc32(tag)


def run_bench(config: BenchConfig) -> list[BenchRecord]:
    """Time every (algorithm, n, repetition) cell, warmup rounds untimed.

    Records come back in deterministic order: algorithms in config order,
    then event counts, then repetitions.
    """
    records = []
    for algorithm in config.algorithms:
        for n in config.n_grid:
            stop = StoppingRule.event_count(n)
            for rep in range(config.repetitions):
                seed = record_seed(config.seed_base, algorithm, n, rep)
                for _ in range(config.warmup):
                    simulate(algorithm, config.params, stop, RngStream(seed))
                stream = RngStream(seed)
                t0 = time.perf_counter_ns()
                events = simulate(algorithm, config.params, stop, stream)
                t1 = time.perf_counter_ns()
                if len(events) != n:
                    raise RuntimeError(
                        f"{algorithm} produced {len(events)} events, expected {n}")
                records.append(BenchRecord(algorithm=algorithm, n_events=n,
                                           repetition=rep,
                                           wall_time=(t1 - t0) / 1e9))
    return records


def median_times(records) -> dict[tuple[str, int], float]:
    """Median wall time per (algorithm, n_events) cell."""
    cells: dict[tuple[str, int], list[float]] = {}
    for r in records:
        cells.setdefault((r.algorithm, r.n_events), []).append(r.wall_time)
    out = {}
    for key, values in cells.items():
        values.sort()
        m = len(values) // 2
        out[key] = values[m] if len(values) % 2 else 0.5 * (values[m - 1] + values[m])
    return out


def write_csv(records, path) -> None:
    """Write records as CSV: header plus one row per record, LF newlines.

    Floats are rendered with repr (shortest round-trip form, locale-free),
    so identical records always produce identical bytes.
    """
    records = list(records)
    if not records:
        raise ValueError("no records to write")
    lines = [CSV_HEADER]
    lines.extend(f"{r.algorithm},{r.n_events},{r.repetition},{r.wall_time!r}"
                 for r in records)
    with open(path, "w", newline="\n") as fh:
        fh.write("\n".join(lines) + "\n")


def read_csv(path) -> list[BenchRecord]:
    """Parse a file written by write_csv back into records."""
    with open(path) as fh:
        lines = [ln for ln in fh.read().split("\n") if ln]
    if not lines or lines[0] != CSV_HEADER:
        raise ValueError(f"unexpected header in {path!r}")
    out = []
    for ln in lines[1:]:
        algorithm, n, rep, wt = ln.split(",")
        out.append(BenchRecord(algorithm=algorithm, n_events=int(n),
                               repetition=int(rep), wall_time=float(wt)))
    return out


# --- SVG chart -------------------------------------------------------------

_PALETTE = {
    "lambert_halley": "#1f77b4",
    "lambert_reference_w": "#ff7f0e",
    "ozaki_newton": "#2ca02c",
    "ogata_thinning": "#d62728",
    "dassios_zhao": "#9467bd",
}
_FALLBACK_COLORS = ("#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf")


def _log_ticks(lo: float, hi: float):
    import math
    first = math.ceil(math.log10(lo) - 1e-9)
    last = math.floor(math.log10(hi) + 1e-9)
    return [10.0 ** k for k in range(first, last + 1)]


def emit_plot(records, path) -> None:
    """Write a self-contained SVG: median wall time vs event count, log-log,
    one polyline per algorithm, with a legend.

    Requires at least two distinct event counts.
    """
    import math

    med = median_times(records)
    if not med:
        raise ValueError("no records to plot")
    ns = sorted({n for _, n in med})
    if len(ns) < 2:
        raise ValueError(f"insufficient data: need >= 2 event-count grid points, got {len(ns)}")
    algorithms = list(dict.fromkeys(r.algorithm for r in records))

    width, height = 720, 480
    ml, mr, mt, mb = 70, 170, 30, 50
    x0, x1 = math.log10(ns[0]), math.log10(ns[-1])
    t_lo = min(med.values())
    t_hi = max(med.values())
    y0, y1 = math.log10(t_lo) - 0.05, math.log10(t_hi) + 0.05

    def sx(n):
        return ml + (math.log10(n) - x0) / (x1 - x0) * (width - ml - mr)

    def sy(t):
        return height - mb - (math.log10(t) - y0) / (y1 - y0) * (height - mt - mb)

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
        f'<line x1="{ml}" y1="{height - mb}" x2="{width - mr}" y2="{height - mb}" '
        'stroke="black" stroke-width="1"/>',
        f'<line x1="{ml}" y1="{mt}" x2="{ml}" y2="{height - mb}" '
        'stroke="black" stroke-width="1"/>',
    ]
    for n in ns:
        x = sx(n)
        parts.append(f'<line x1="{x:.2f}" y1="{height - mb}" x2="{x:.2f}" '
                     f'y2="{height - mb + 5}" stroke="black" stroke-width="1"/>')
        parts.append(f'<text x="{x:.2f}" y="{height - mb + 18}" font-size="11" '
                     f'text-anchor="middle">{n}</text>')
    for tick in _log_ticks(10.0 ** y0, 10.0 ** y1):
        y = sy(tick)
        parts.append(f'<line x1="{ml - 5}" y1="{y:.2f}" x2="{ml}" y2="{y:.2f}" '
                     'stroke="black" stroke-width="1"/>')
        parts.append(f'<text x="{ml - 8}" y="{y + 4:.2f}" font-size="11" '
                     f'text-anchor="end">{tick:g}</text>')
    parts.append(f'<text x="{(ml + width - mr) / 2:.2f}" y="{height - 12}" font-size="12" '
                 'text-anchor="middle">events per trajectory</text>')
    parts.append(f'<text x="16" y="{(mt + height - mb) / 2:.2f}" font-size="12" '
                 f'text-anchor="middle" transform="rotate(-90 16 {(mt + height - mb) / 2:.2f})">'
                 'median wall time (s)</text>')

    for i, algorithm in enumerate(algorithms):
        color = _PALETTE.get(algorithm, _FALLBACK_COLORS[i % len(_FALLBACK_COLORS)])
        pts = " ".join(f"{sx(n):.2f},{sy(med[(algorithm, n)]):.2f}"
                       for n in ns if (algorithm, n) in med)
        parts.append(f'<polyline points="{pts}" fill="none" stroke="{color}" '
                     'stroke-width="1.8"/>')
        ly = mt + 18 + 20 * i
        lx = width - mr + 14
        parts.append(f'<rect x="{lx}" y="{ly - 9}" width="14" height="4" fill="{color}"/>')
        parts.append(f'<text x="{lx + 20}" y="{ly}" font-size="12">{algorithm}</text>')

    parts.append("</svg>")
    with open(path, "w", newline="\n") as fh:
        fh.write("\n".join(parts) + "\n")
