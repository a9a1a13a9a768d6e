"""Discrete-event core: event queue, arrival/departure lifecycle, run loop.

The queue pops events in (time, kind, event id) order with departures
ordered before arrivals at equal times — spectrum is freed before a
competing request is evaluated, so tie handling never inflates blocking.
One arrival is pending at any moment; processing it schedules the next one
until the configured number of requests has been dispatched, after which
the remaining departures drain and every grid ends all-free.
"""

from __future__ import annotations

import heapq
import time as _time
from dataclasses import dataclass
from enum import IntEnum
from typing import Callable, NamedTuple, TextIO

from .allocation import ALLOCATED, NOT_ALLOCATED, AllocationContext
from .errors import (
    AllocatorFaultError,
    AlreadyInitializedError,
    InvalidConfigError,
    MissingRoutesError,
    NoAllocatorSetError,
    NotInitializedError,
    TimeInPastError,
    UnknownConnectionError,
)
from .network import Network, RouteSet
from .report import SimulationReport
from .traffic import (
    BitRateCatalog,
    RngStreams,
    Seeds,
    TrafficProfile,
    next_exponential,
    sample_bitrate,
    sample_src_dst,
)


class EventKind(IntEnum):
    DEPARTURE = 0  # lower value pops first on time ties
    ARRIVAL = 1


class Event(NamedTuple):
    """A queued simulation event; field order defines the queue ordering."""

    time: float
    kind: EventKind
    event_id: int
    connection_id: int | None = None


@dataclass(frozen=True)
class ConnectionRecord:
    """Slot holdings of one live connection, released in full at departure."""

    connection_id: int
    holdings: tuple[tuple[int, int, int], ...]
    departure_time: float


@dataclass(frozen=True)
class SimulatorConfig:
    """Frozen bundle of everything one run needs."""

    network: Network
    routes: RouteSet
    catalog: BitRateCatalog
    profile: TrafficProfile = TrafficProfile()
    seeds: Seeds = Seeds()
    strict_audit: bool = True


class Simulator:
    """Drives ``goal_connections`` requests through an allocation callback.

    Usage::

        sim = Simulator(config, first_fit, algorithm_name="FF")
        sim.init()
        report = sim.run()

    The configuration is frozen; the allocator can only be (re)assigned
    before :meth:`init`.  A simulator instance performs exactly one run.
    """

    def __init__(self, config: SimulatorConfig,
                 allocator: Callable[[AllocationContext], object] | None = None,
                 *,
                 algorithm_name: str | None = None,
                 progress_every: int | None = None,
                 out: TextIO | None = None,
                 event_listener: Callable[["Simulator", Event], None] | None = None):
        self._config = config
        self._allocator = allocator
        self._algorithm_name = algorithm_name or getattr(
            allocator, "__name__", "unnamed")
        self._progress_every = progress_every
        self._out = out
        self._event_listener = event_listener
        self._initialized = False
        self._finished = False
        self._clock = 0.0
        self._queue: list[Event] = []
        self._live: dict[int, ConnectionRecord] = {}
        self._next_event_id = 0
        self._next_connection_id = 0
        self._arrivals_dispatched = 0
        self._report: SimulationReport | None = None

    # -- wiring ------------------------------------------------------------

    @classmethod
    def from_files(cls, network_path, routes_path, bit_rates_path=None,
                   **kwargs) -> "Simulator":
        """Build a simulator from the three input documents.

        When ``bit_rates_path`` is omitted the bundled default bitrate
        catalog is used.  Keyword arguments beyond the file paths are
        forwarded: ``profile``, ``seeds`` and ``strict_audit`` go into the
        configuration, the rest to the constructor.
        """
        from . import data
        from .inputs import load_bit_rates, load_network, load_routes

        network = load_network(network_path)
        routes = load_routes(routes_path, network)
        if bit_rates_path is None:
            catalog = data.load_bit_rates()
        else:
            catalog = load_bit_rates(bit_rates_path)
        config = SimulatorConfig(
            network=network, routes=routes, catalog=catalog,
            profile=kwargs.pop("profile", TrafficProfile()),
            seeds=kwargs.pop("seeds", Seeds()),
            strict_audit=kwargs.pop("strict_audit", True),
        )
        return cls(config, **kwargs)

    def use_allocator(self, allocator, name: str | None = None) -> None:
        """Assign the allocation callback; rejected after init()."""
        if self._initialized:
            raise AlreadyInitializedError(
                "the simulator accepts no changes after init()")
        self._allocator = allocator
        self._algorithm_name = name or getattr(allocator, "__name__", "unnamed")

    # -- read-only state -----------------------------------------------------

    @property
    def config(self) -> SimulatorConfig:
        return self._config

    @property
    def clock(self) -> float:
        return self._clock

    @property
    def pending_events(self) -> int:
        return len(self._queue)

    @property
    def live_connections(self) -> dict[int, ConnectionRecord]:
        return dict(self._live)

    @property
    def report(self) -> SimulationReport | None:
        return self._report

    # -- lifecycle -------------------------------------------------------------

    def init(self) -> None:
        """Freeze the configuration, zero the clock, schedule the first arrival."""
        if self._initialized:
            raise AlreadyInitializedError("init() may only be called once")
        if self._allocator is None:
            raise NoAllocatorSetError("assign an allocation callback before init()")
        config = self._config
        if config.network.node_count < 2 or not config.network.links:
            raise InvalidConfigError(
                "the network needs at least 2 nodes and 1 link")
        if config.routes.pair_count == 0:
            raise InvalidConfigError("the route set is empty")
        if len(config.catalog) == 0:
            raise InvalidConfigError("the bitrate catalog is empty")
        self._streams = RngStreams(config.seeds)
        self._clock = 0.0
        self._report = SimulationReport(
            algorithm=self._algorithm_name,
            arrival_rate=config.profile.arrival_rate,
            departure_rate=config.profile.departure_rate,
            goal_connections=config.profile.goal_connections,
            seeds=config.seeds,
            strict_audit=config.strict_audit,
        )
        first = next_exponential(self._streams.arrival, config.profile.arrival_rate)
        self.schedule_event(self._new_event(first, EventKind.ARRIVAL))
        self._initialized = True

    def schedule_event(self, event: Event) -> None:
        """Insert an event; its time must not precede the current clock."""
        if event.time < self._clock:
            raise TimeInPastError(
                f"event at t={event.time} is before the clock t={self._clock}")
        heapq.heappush(self._queue, event)

    def _new_event(self, at: float, kind: EventKind,
                   connection_id: int | None = None) -> Event:
        event = Event(at, kind, self._next_event_id, connection_id)
        self._next_event_id += 1
        return event

    def run(self) -> SimulationReport:
        """Process events until the request goal is met and departures drain."""
        if not self._initialized:
            raise NotInitializedError("call init() before run()")
        if self._finished:
            return self._report
        out = self._out
        report = self._report
        progress_every = self._progress_every
        listener = self._event_listener
        if out is not None:
            print(report.header_line(), file=out)
        started = _time.perf_counter()
        queue = self._queue
        while queue:
            event = heapq.heappop(queue)
            self._clock = event.time
            if event.kind is EventKind.ARRIVAL:
                self._process_arrival()
                if (out is not None and progress_every
                        and report.processed % progress_every == 0):
                    print(report.progress_line(), file=out)
            else:
                self._process_departure(event.connection_id)
            if listener is not None:
                listener(self, event)
        report.wall_clock_seconds = _time.perf_counter() - started
        if out is not None:
            print(report.summary_line(), file=out)
        self._finished = True
        return report

    # -- event handlers -----------------------------------------------------

    def _process_arrival(self) -> None:
        config = self._config
        streams = self._streams
        src, dst = sample_src_dst(streams, config.network.node_count)
        entry = config.catalog[sample_bitrate(streams.bitrate, config.catalog)]
        routes = config.routes.routes_for(src, dst)
        if not routes:
            raise MissingRoutesError(f"no candidate routes for pair ({src}, {dst})")
        ctx = AllocationContext(config.network, src, dst, routes, entry,
                                strict_audit=config.strict_audit)
        try:
            verdict = self._allocator(ctx)
        except AllocatorFaultError:
            raise
        except Exception as err:
            raise AllocatorFaultError(
                f"allocator {self._algorithm_name!r} raised "
                f"{type(err).__name__}: {err}") from err
        if verdict is ALLOCATED:
            holdings = ctx.commit_staged()
            holding_time = next_exponential(streams.departure,
                                            config.profile.departure_rate)
            connection_id = self._next_connection_id
            self._next_connection_id += 1
            record = ConnectionRecord(connection_id, holdings,
                                      self._clock + holding_time)
            self._live[connection_id] = record
            self.schedule_event(self._new_event(record.departure_time,
                                                EventKind.DEPARTURE,
                                                connection_id))
        elif verdict is NOT_ALLOCATED:
            ctx.discard_staged()
        else:
            raise AllocatorFaultError(
                f"allocator {self._algorithm_name!r} returned {verdict!r} "
                "instead of ALLOCATED or NOT_ALLOCATED")
        self._report.record_outcome(verdict, entry.label)
        self._arrivals_dispatched += 1
        if self._arrivals_dispatched < config.profile.goal_connections:
            delta = next_exponential(streams.arrival, config.profile.arrival_rate)
            self.schedule_event(self._new_event(self._clock + delta,
                                                EventKind.ARRIVAL))

    def _process_departure(self, connection_id: int) -> None:
        record = self._live.pop(connection_id, None)
        if record is None:
            raise UnknownConnectionError(
                f"departure for unknown connection {connection_id}")
        links = self._config.network.links
        for link_id, start, stop in record.holdings:
            links[link_id].release_slots(start, stop)
