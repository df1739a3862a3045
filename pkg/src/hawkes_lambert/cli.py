"""hawkes-bench: benchmark, single-trajectory, and validation commands.

Subcommands
-----------
run        time the selected algorithms over a grid of event counts; writes
           the timing CSV, optionally the SVG chart and a matplotlib figure
simulate   write one trajectory as a CSV of timestamps
validate   residual KS panel for one algorithm (or all); exit 0 on pass

Options may also be supplied as a flat key=value file via --config; flags
given on the command line override file values.
"""

from __future__ import annotations

import argparse
import sys

from .bench import (BenchConfig, DEFAULT_N_GRID, DEFAULT_PARAMS,
                    DEFAULT_REPETITIONS, DEFAULT_SEED_BASE, DEFAULT_WARMUP,
                    emit_plot, run_bench, write_csv)
from .core import HawkesParams
from .simulators import ALGORITHM_IDS, StoppingRule, simulate
from .validation import SEED_PANEL, run_ks_panel

_VALIDATE_DEFAULTS = {"mu": 1.0, "alpha": 0.5, "beta": 1.0}


def _parse_algos(text: str) -> tuple[str, ...]:
    algos = tuple(a.strip() for a in text.split(",") if a.strip())
    unknown = [a for a in algos if a not in ALGORITHM_IDS]
    if unknown:
        raise argparse.ArgumentTypeError(
            f"unknown algorithm(s) {unknown}; choose from {', '.join(ALGORITHM_IDS)}")
    return algos


def _parse_grid(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(v.strip()) for v in text.split(",") if v.strip())
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad event-count grid {text!r}") from exc


def _load_config_file(path: str) -> dict:
    """Flat key=value file; blank lines and '#' comments are ignored."""
    values = {}
    with open(path) as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected key=value, got {raw.rstrip()!r}")
            key, value = line.split("=", 1)
            values[key.strip().replace("-", "_")] = value.strip()
    return values


_CONVERTERS = {
    "mu": float, "alpha": float, "beta": float,
    "algos": _parse_algos, "n_grid": _parse_grid,
    "reps": int, "warmup": int, "seed": int, "n": int, "seeds": int,
    "out": str, "plot": str, "fig": str, "algo": str,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hawkes-bench", description=__doc__,
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="time algorithms over an event-count grid")
    run.add_argument("--mu", type=float, default=DEFAULT_PARAMS.mu)
    run.add_argument("--alpha", type=float, default=DEFAULT_PARAMS.alpha)
    run.add_argument("--beta", type=float, default=DEFAULT_PARAMS.beta)
    run.add_argument("--algos", type=_parse_algos, default=ALGORITHM_IDS,
                     help="comma-separated algorithm ids")
    run.add_argument("--n-grid", dest="n_grid", type=_parse_grid, default=DEFAULT_N_GRID,
                     help="comma-separated event counts, strictly increasing")
    run.add_argument("--reps", type=int, default=DEFAULT_REPETITIONS)
    run.add_argument("--warmup", type=int, default=DEFAULT_WARMUP)
    run.add_argument("--seed", type=int, default=DEFAULT_SEED_BASE)
    run.add_argument("--out", default="bench_results.csv", help="timing CSV path")
    run.add_argument("--plot", default=None, help="optional SVG chart path")
    run.add_argument("--fig", default=None,
                     help="optional matplotlib figure path (png/pdf/...)")
    run.add_argument("--config", default=None, help="flat key=value option file")

    sim = sub.add_parser("simulate", help="write one trajectory as CSV timestamps")
    sim.add_argument("--algo", required=True, choices=ALGORITHM_IDS)
    sim.add_argument("--n", type=int, required=True, help="number of events")
    sim.add_argument("--seed", type=int, required=True)
    sim.add_argument("--out", required=True)
    sim.add_argument("--mu", type=float, default=DEFAULT_PARAMS.mu)
    sim.add_argument("--alpha", type=float, default=DEFAULT_PARAMS.alpha)
    sim.add_argument("--beta", type=float, default=DEFAULT_PARAMS.beta)

    val = sub.add_parser("validate", help="residual KS panel; exit 0 on pass")
    val.add_argument("--algo", required=True, choices=ALGORITHM_IDS + ("all",))
    val.add_argument("--n", type=int, default=10_000, help="events per trajectory")
    val.add_argument("--seeds", type=int, default=len(SEED_PANEL),
                     help="number of panel seeds")
    val.add_argument("--mu", type=float, default=_VALIDATE_DEFAULTS["mu"])
    val.add_argument("--alpha", type=float, default=_VALIDATE_DEFAULTS["alpha"])
    val.add_argument("--beta", type=float, default=_VALIDATE_DEFAULTS["beta"])

    return parser


def _cmd_run(ns) -> int:
    config = BenchConfig(params=HawkesParams(ns.mu, ns.alpha, ns.beta),
                         algorithms=ns.algos, n_grid=ns.n_grid,
                         repetitions=ns.reps, warmup=ns.warmup,
                         seed_base=ns.seed, output_path=ns.out)
    records = run_bench(config)
    write_csv(records, config.output_path)
    print(f"wrote {len(records)} records to {config.output_path}")
    if ns.plot:
        emit_plot(records, ns.plot)
        print(f"wrote chart to {ns.plot}")
    if ns.fig:
        from .figures import render_runtime_figure
        render_runtime_figure(records, ns.fig)
        print(f"wrote figure to {ns.fig}")
    return 0


def _cmd_simulate(ns) -> int:
    params = HawkesParams(ns.mu, ns.alpha, ns.beta)
    events = simulate(ns.algo, params, StoppingRule.event_count(ns.n), ns.seed)
    with open(ns.out, "w", newline="\n") as fh:
        fh.write("t\n")
        fh.writelines(f"{t!r}\n" for t in events)
    print(f"wrote {len(events)} timestamps to {ns.out}")
    return 0


def _cmd_validate(ns) -> int:
    params = HawkesParams(ns.mu, ns.alpha, ns.beta)
    seeds = SEED_PANEL[:ns.seeds] if ns.seeds <= len(SEED_PANEL) else \
        tuple(range(SEED_PANEL[0], SEED_PANEL[0] + ns.seeds))
    algorithms = ALGORITHM_IDS if ns.algo == "all" else (ns.algo,)
    all_ok = True
    for algorithm in algorithms:
        panel = run_ks_panel(algorithm, params, ns.n, seeds)
        print(f"{algorithm}: KS critical value {panel.ks_critical:.5f} "
              f"(1% level, n={ns.n})")
        for row in panel.rows:
            flag = "ok" if row.ks < panel.ks_critical else "KS EXCEEDED"
            print(f"  seed {row.seed}: ks={row.ks:.5f} mean={row.residual_mean:.4f} "
                  f"lag1={row.lag1_autocorr:+.4f}  {flag}")
        verdict = "PASS" if panel.passed else "FAIL"
        print(f"{algorithm}: {verdict} ({panel.ks_failures} of {len(panel.rows)} "
              "seeds exceeded the KS critical value)")
        all_ok &= panel.passed
    return 0 if all_ok else 1


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    ns = parser.parse_args(argv)
    if getattr(ns, "config", None):
        # file values become parser defaults, so explicit flags keep precedence
        overrides = {}
        for key, text in _load_config_file(ns.config).items():
            if key not in _CONVERTERS:
                raise SystemExit(f"unknown config key {key!r} in {ns.config}")
            overrides[key] = _CONVERTERS[key](text)
        reparser = build_parser()
        reparser.set_defaults(**overrides)
        ns = reparser.parse_args(argv)
    if ns.command == "run":
        return _cmd_run(ns)
    if ns.command == "simulate":
        return _cmd_simulate(ns)
    return _cmd_validate(ns)


if __name__ == "__main__":
    raise SystemExit(main())
