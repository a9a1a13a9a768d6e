"""Blocking-probability accounting, console line formats and load sweeps.

Console output uses three fixed, greppable line formats:

* header:   ``# eonsim algorithm=FF lambda=18 mu=10 goal=100000 erlang=1.8
  strict_audit=on seeds=12345,12347,12349,12351,12353``
* progress: ``progress requests=5000 blocked=37 blocking=7.400000e-03``
* summary:  ``done requests=100000 accepted=99963 blocked=37
  blocking=3.700000e-04 wall_seconds=4.512``

The ``.dat`` sweep table has one row per load, ``<erlang> <blocking>``,
space separated, blocking with seven significant digits.
"""

from __future__ import annotations

import dataclasses
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .allocation import ALLOCATED, Verdict
from .errors import EonSimError
from .traffic import Seeds


@dataclass
class SimulationReport:
    """Counters plus an echo of the configuration that produced them."""

    algorithm: str
    arrival_rate: float
    departure_rate: float
    goal_connections: int
    seeds: Seeds
    strict_audit: bool
    processed: int = 0
    accepted: int = 0
    blocked: int = 0
    wall_clock_seconds: float = 0.0
    per_bitrate: dict[str, list[int]] = field(default_factory=dict)

    @property
    def erlang(self) -> float:
        return self.arrival_rate / self.departure_rate

    @property
    def blocking_probability(self) -> float:
        return self.blocked / self.processed if self.processed else 0.0

    def record_outcome(self, verdict: Verdict, bitrate_label: str | None = None) -> None:
        """Count one processed request and its verdict."""
        self.processed += 1
        blocked = verdict is not ALLOCATED
        if blocked:
            self.blocked += 1
        else:
            self.accepted += 1
        if bitrate_label is not None:
            counters = self.per_bitrate.setdefault(bitrate_label, [0, 0])
            counters[0] += 1
            if blocked:
                counters[1] += 1

    # -- console line formats ------------------------------------------------

    def header_line(self) -> str:
        audit = "on" if self.strict_audit else "off"
        seeds = ",".join(str(s) for s in self.seeds)
        return (f"# eonsim algorithm={self.algorithm} "
                f"lambda={self.arrival_rate:g} mu={self.departure_rate:g} "
                f"goal={self.goal_connections} erlang={self.erlang:g} "
                f"strict_audit={audit} seeds={seeds}")

    def progress_line(self) -> str:
        return (f"progress requests={self.processed} blocked={self.blocked} "
                f"blocking={self.blocking_probability:.6e}")

    def summary_line(self) -> str:
        return (f"done requests={self.processed} accepted={self.accepted} "
                f"blocked={self.blocked} "
                f"blocking={self.blocking_probability:.6e} "
                f"wall_seconds={self.wall_clock_seconds:.3f}")

    def per_bitrate_lines(self) -> list[str]:
        lines = []
        for label, (requests, blocked) in self.per_bitrate.items():
            probability = blocked / requests if requests else 0.0
            lines.append(f"bitrate={label} requests={requests} "
                         f"blocked={blocked} blocking={probability:.6e}")
        return lines


def _sweep_worker(config, arrival_rate: float, algorithm_name: str,
                  progress_every: int | None) -> tuple[float, float]:
    # Local import: the engine module imports this one.
    import sys

    from .algorithms import ALGORITHMS
    from .engine import Simulator

    run_config = dataclasses.replace(
        config,
        network=config.network.fresh_copy(),
        profile=dataclasses.replace(config.profile, arrival_rate=arrival_rate),
    )
    simulator = Simulator(run_config, ALGORITHMS[algorithm_name],
                          algorithm_name=algorithm_name,
                          progress_every=progress_every,
                          out=sys.stdout if progress_every else None)
    simulator.init()
    report = simulator.run()
    return arrival_rate, report.blocking_probability


def run_sweep(config, lambdas, algorithm_name: str, *,
              workers: int = 1,
              progress_every: int | None = None) -> list[tuple[float, float]]:
    """One independent simulation per arrival rate, same seeds each time.

    Returns ``(erlang, blocking_probability)`` pairs ordered by increasing
    load.  Each run gets a fresh copy of the network, so runs share no
    mutable state and ``workers > 1`` executes them in parallel processes
    without changing the results.
    """
    from .algorithms import ALGORITHMS

    if algorithm_name not in ALGORITHMS:
        raise EonSimError(
            f"unknown algorithm {algorithm_name!r}; "
            f"registered: {sorted(ALGORITHMS)}"
        )
    rates = sorted(float(lam) for lam in lambdas)
    if not rates:
        raise ValueError("at least one arrival rate is required")
    results: dict[float, float] = {}
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = {pool.submit(_sweep_worker, config, lam, algorithm_name,
                                   progress_every): lam for lam in rates}
            for future, lam in futures.items():
                try:
                    rate, blocking = future.result()
                except EonSimError as err:
                    raise EonSimError(f"sweep run at lambda={lam:g} failed: {err}") from err
                results[rate] = blocking
    else:
        for lam in rates:
            try:
                rate, blocking = _sweep_worker(config, lam, algorithm_name,
                                               progress_every)
            except EonSimError as err:
                raise EonSimError(f"sweep run at lambda={lam:g} failed: {err}") from err
            results[rate] = blocking
    mu = config.profile.departure_rate
    return [(lam / mu, results[lam]) for lam in rates]


def write_dat(results, path) -> None:
    """Write a plot-ready table: one ``<erlang> <blocking>`` row per load.

    Blocking is written with seven significant digits; a blocking of zero is
    recorded as zero, never clipped.  Refuses empty results without creating
    the file.
    """
    rows = list(results)
    if not rows:
        raise ValueError("no sweep results to write")
    with open(path, "w", encoding="utf-8") as handle:
        for erlang, blocking in rows:
            handle.write(f"{erlang:g} {blocking:.6e}\n")
