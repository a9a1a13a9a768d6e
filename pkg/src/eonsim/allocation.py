"""Algorithm-facing view of one connection request.

An allocation algorithm is a plain callable ``(context) -> verdict`` invoked
once per connection request.  Through the context it can read the candidate
routes for the requested node pair, inspect link grids, read the sampled
bitrate's modulation options, and *stage* slot ranges with
:meth:`AllocationContext.alloc_slots`.  Staging never touches the live
grids: only when the callback returns :data:`ALLOCATED` does the engine
commit the staged ranges (atomically, after validating them); on
:data:`NOT_ALLOCATED` everything staged is discarded.  That makes the
returned verdict authoritative — a rejected request can never leak slots.

A minimal algorithm looks like::

    from eonsim import ALLOCATED, NOT_ALLOCATED

    def lowest_slot_first(ctx):
        need = ctx.request_slots(0)
        for route in range(ctx.route_count()):
            first = ctx.link_in_route(route, 0)
            for start in range(first.slot_count - need + 1):
                if all(ctx.link_in_route(route, i).is_range_free(start, start + need)
                       for i in range(ctx.link_count_in_route(route))):
                    for i in range(ctx.link_count_in_route(route)):
                        ctx.alloc_slots(ctx.link_in_route(route, i).id,
                                        start, start + need)
                    return ALLOCATED
        return NOT_ALLOCATED

With strict auditing enabled (the default), commits additionally enforce the
two defining spectrum constraints: the staged slots on each link must form
one contiguous block, and every link of the connection must use the same
slot interval.
"""

from __future__ import annotations

from enum import Enum

import numpy as np

from .errors import (
    AlreadyOccupiedError,
    AuditViolationError,
    CommitConflictError,
    LinkIndexOutOfRangeError,
    OptionIndexOutOfRangeError,
    OutOfBoundsError,
    RouteIndexOutOfRangeError,
    StagedOverlapError,
)
from .network import Link, Network, Route
from .traffic import BitRateEntry


class Verdict(Enum):
    """Outcome of one allocation callback invocation."""

    ALLOCATED = "allocated"
    NOT_ALLOCATED = "not_allocated"


#: Return values for allocation callbacks.
ALLOCATED = Verdict.ALLOCATED
NOT_ALLOCATED = Verdict.NOT_ALLOCATED


class LinkView:
    """Read-only window onto one link of a candidate route.

    Exposes the link's identity, length and grid queries, but no way to
    mutate the grid — staging goes through
    :meth:`AllocationContext.alloc_slots` only.
    """

    __slots__ = ("_link",)

    def __init__(self, link: Link):
        self._link = link

    @property
    def id(self) -> int:
        return self._link.id

    @property
    def src(self) -> int:
        return self._link.src

    @property
    def dst(self) -> int:
        return self._link.dst

    @property
    def length_km(self) -> float:
        return self._link.length_km

    @property
    def slot_count(self) -> int:
        return self._link.slot_count

    @property
    def occupancy(self) -> np.ndarray:
        """Read-only occupancy array; True marks an occupied slot."""
        return self._link.occupancy

    def is_slot_occupied(self, slot: int) -> bool:
        if not 0 <= slot < self._link.slot_count:
            raise OutOfBoundsError(
                f"slot {slot} outside the {self._link.slot_count}-slot grid "
                f"of link {self._link.id}"
            )
        return bool(self._link.occupancy[slot])

    def is_range_free(self, start: int, stop: int) -> bool:
        return self._link.is_range_free(start, stop)

    def __repr__(self):
        return f"LinkView({self._link!r})"


class AllocationContext:
    """Everything one allocation callback may see and do for one request."""

    __slots__ = ("src", "dst", "_network", "_routes", "_request", "_staged",
                 "strict_audit")

    def __init__(self, network: Network, src: int, dst: int,
                 routes: tuple[Route, ...], request: BitRateEntry,
                 strict_audit: bool = True):
        self.src = src
        self.dst = dst
        self._network = network
        self._routes = routes
        self._request = request
        self._staged: list[tuple[int, int, int]] = []
        self.strict_audit = strict_audit

    # -- candidate route reads -------------------------------------------

    def route_count(self) -> int:
        """Number of candidate routes for the requested pair; index order is retry order."""
        return len(self._routes)

    def _route(self, route: int) -> Route:
        if not 0 <= route < len(self._routes):
            raise RouteIndexOutOfRangeError(
                f"route index {route} out of range [0, {len(self._routes)})"
            )
        return self._routes[route]

    def route_length_km(self, route: int) -> float:
        return self._route(route).length_km

    def link_count_in_route(self, route: int) -> int:
        return len(self._route(route).link_ids)

    def link_in_route(self, route: int, link: int) -> LinkView:
        """Read-only view of the ``link``-th link of the ``route``-th route."""
        link_ids = self._route(route).link_ids
        if not 0 <= link < len(link_ids):
            raise LinkIndexOutOfRangeError(
                f"link index {link} out of range [0, {len(link_ids)}) "
                f"in route {route}"
            )
        return LinkView(self._network.link(link_ids[link]))

    def route_link_ids(self, route: int) -> tuple[int, ...]:
        """Link ids of the route, in traversal order."""
        return self._route(route).link_ids

    def _route_grids(self, route: int) -> list:
        # Raw occupancy arrays for the search kernels; never handed to user
        # code un-copied.
        links = self._network.links
        return [links[lid]._slots for lid in self._route(route).link_ids]

    # -- request reads -----------------------------------------------------

    def option_count(self) -> int:
        return len(self._request.options)

    def _option(self, option: int):
        if not 0 <= option < len(self._request.options):
            raise OptionIndexOutOfRangeError(
                f"option index {option} out of range "
                f"[0, {len(self._request.options)})"
            )
        return self._request.options[option]

    def request_slots(self, option: int) -> int:
        """Slot need of the given modulation option."""
        return self._option(option).slot_count

    def request_reach_km(self, option: int) -> float:
        """Optical reach of the given modulation option, in km."""
        return self._option(option).reach_km

    def request_modulation(self, option: int) -> str:
        """Modulation format label of the given option."""
        return self._option(option).modulation

    def request_bitrate(self) -> float:
        """The sampled bitrate in Gbps, numeric form."""
        return self._request.bitrate_gbps

    def request_bitrate_label(self) -> str:
        """The sampled bitrate as the text label from the catalog document."""
        return self._request.label

    # -- staging -----------------------------------------------------------

    @property
    def staged(self) -> tuple[tuple[int, int, int], ...]:
        """Snapshot of the staged ``(link_id, start, stop)`` ranges."""
        return tuple(self._staged)

    def alloc_slots(self, link_id: int, start: int, stop: int) -> None:
        """Stage occupation of ``[start, stop)`` on a link.

        The live grid is untouched; validation against it happens at commit.
        Bounds are checked now, as is overlap with ranges already staged on
        the same link.
        """
        link = self._network.link(link_id)
        if not (0 <= start < stop <= link.slot_count):
            raise OutOfBoundsError(
                f"staged range [{start}, {stop}) outside the "
                f"{link.slot_count}-slot grid of link {link_id}"
            )
        for other_id, other_start, other_stop in self._staged:
            if other_id == link_id and start < other_stop and other_start < stop:
                raise StagedOverlapError(
                    f"staged range [{start}, {stop}) overlaps "
                    f"[{other_start}, {other_stop}) on link {link_id}"
                )
        self._staged.append((link_id, start, stop))

    def discard_staged(self) -> None:
        """Drop everything staged; live grids are untouched."""
        self._staged.clear()

    def commit_staged(self) -> tuple[tuple[int, int, int], ...]:
        """Engine-internal: validate and occupy all staged ranges atomically.

        Raises :class:`CommitConflictError` if any staged range is no longer
        free, and — in strict-audit mode — :class:`AuditViolationError` if
        the staged ranges are not contiguous per link or do not span the
        identical interval on every staged link.  On any error the live
        grids are left bit-identical to their prior state.
        """
        if self.strict_audit and self._staged:
            self._audit()
        links = self._network.links
        occupied: list[tuple[int, int, int]] = []
        try:
            for link_id, start, stop in self._staged:
                links[link_id].occupy_slots(start, stop)
                occupied.append((link_id, start, stop))
        except AlreadyOccupiedError as err:
            for link_id, start, stop in occupied:
                links[link_id].release_slots(start, stop)
            raise CommitConflictError(
                f"staged range is no longer free at commit time: {err}"
            ) from err
        holdings = tuple(self._staged)
        self._staged.clear()
        return holdings

    def _audit(self) -> None:
        per_link: dict[int, list[tuple[int, int]]] = {}
        for link_id, start, stop in self._staged:
            per_link.setdefault(link_id, []).append((start, stop))
        spans: set[tuple[int, int]] = set()
        for link_id, ranges in per_link.items():
            ranges.sort()
            for (_, stop_a), (start_b, _) in zip(ranges, ranges[1:]):
                if stop_a != start_b:
                    raise AuditViolationError(
                        f"link {link_id}: staged slots are not contiguous "
                        f"(gap between {stop_a} and {start_b})"
                    )
            spans.add((ranges[0][0], ranges[-1][1]))
        if len(spans) > 1:
            raise AuditViolationError(
                "staged links do not share one slot interval: "
                + ", ".join(f"[{a}, {b})" for a, b in sorted(spans))
            )
