"""Bundled spectrum-assignment policies: First Fit, Exact Fit, First-Last Fit.

All three share one kernel: build the joint occupancy of a route (a slot is
free only if free on every link), search that grid for a placement of the
required width, and stage the winning interval on each link of the route.
Routes are tried in their file order; within a route, the modulation options
admissible for the route length are tried fewest-slots-first.  Because the
same interval is staged on every link, accepted connections satisfy the
continuity and contiguity constraints by construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .allocation import ALLOCATED, NOT_ALLOCATED, AllocationContext, Verdict
from .errors import HeterogeneousSlotCountsError


class SearchDirection(Enum):
    LOW_TO_HIGH = "low_to_high"
    HIGH_TO_LOW = "high_to_low"


@dataclass(frozen=True)
class FreeBlock:
    """A half-open run of slots free on every link under consideration."""

    start: int
    stop: int

    @property
    def length(self) -> int:
        return self.stop - self.start


def intersection_grid(ctx: AllocationContext, route: int) -> np.ndarray:
    """Joint occupancy over the route: slot i is True if occupied on any link.

    Always a fresh array, detached from the live grids.
    """
    grids = ctx._route_grids(route)
    sizes = {grid.shape[0] for grid in grids}
    if len(sizes) > 1:
        raise HeterogeneousSlotCountsError(
            f"route {route} mixes links with slot counts {sorted(sizes)}"
        )
    if len(grids) == 1:
        return grids[0].copy()
    return np.logical_or.reduce(grids)


def first_free_block(grid: np.ndarray, size: int,
                     direction: SearchDirection = SearchDirection.LOW_TO_HIGH,
                     ) -> FreeBlock | None:
    """Placement of ``size`` consecutive free slots, or None.

    LOW_TO_HIGH returns the block with the minimal feasible start index,
    HIGH_TO_LOW the maximal one.  The returned block has length exactly
    ``size`` (a placement, not a maximal run).
    """
    if size < 1:
        raise ValueError(f"block size must be >= 1, got {size}")
    if size > grid.shape[0]:
        return None
    # A bool grid is one byte per slot, so a free run of `size` slots is
    # exactly `size` consecutive zero bytes; substring search finds it at
    # C speed.
    raw = grid.tobytes()
    needle = bytes(size)
    if direction is SearchDirection.LOW_TO_HIGH:
        start = raw.find(needle)
    else:
        start = raw.rfind(needle)
    if start < 0:
        return None
    return FreeBlock(start, start + size)


def exact_free_block(grid: np.ndarray, size: int) -> FreeBlock | None:
    """Lowest maximal free run whose length is exactly ``size``, or None.

    "Maximal" means the run cannot be extended: its neighbours (where they
    exist) are occupied.
    """
    if size < 1:
        raise ValueError(f"block size must be >= 1, got {size}")
    padded = np.empty(grid.shape[0] + 2, dtype=np.int8)
    padded[0] = padded[-1] = 1
    padded[1:-1] = grid
    edges = np.diff(padded)
    starts = np.flatnonzero(edges == -1)
    stops = np.flatnonzero(edges == 1)
    lengths = stops - starts
    matches = np.flatnonzero(lengths == size)
    if matches.size == 0:
        return None
    index = int(matches[0])
    return FreeBlock(int(starts[index]), int(stops[index]))


def modulation_options(ctx: AllocationContext, route: int) -> list[int]:
    """Option indices whose reach covers the route length, fewest slots first.

    Catalog entries already list options fewest-slots-first (highest-order
    modulation first), so filtering preserves the trial order.  The list is
    empty when the route is too long for every option.
    """
    length = ctx.route_length_km(route)
    return [i for i in range(ctx.option_count())
            if ctx.request_reach_km(i) >= length]


def _stage_route(ctx: AllocationContext, route: int, block: FreeBlock) -> None:
    for link_id in ctx.route_link_ids(route):
        ctx.alloc_slots(link_id, block.start, block.stop)


def _search_routes(ctx: AllocationContext, direction: SearchDirection,
                   exact_first: bool) -> Verdict:
    for route in range(ctx.route_count()):
        options = modulation_options(ctx, route)
        if not options:
            continue
        grid = intersection_grid(ctx, route)
        for option in options:
            size = ctx.request_slots(option)
            block = exact_free_block(grid, size) if exact_first else None
            if block is None:
                block = first_free_block(grid, size, direction)
            if block is not None:
                _stage_route(ctx, route, block)
                return ALLOCATED
    return NOT_ALLOCATED


def first_fit(ctx: AllocationContext) -> Verdict:
    """Place the request in the lowest free block of the first route that fits."""
    return _search_routes(ctx, SearchDirection.LOW_TO_HIGH, exact_first=False)


def exact_fit(ctx: AllocationContext) -> Verdict:
    """Prefer a maximal free run of exactly the required width; else First Fit."""
    return _search_routes(ctx, SearchDirection.LOW_TO_HIGH, exact_first=True)


def first_last_fit(ctx: AllocationContext,
                   threshold_gbps: float = 100.0) -> Verdict:
    """First Fit from opposite spectrum ends depending on the bitrate.

    Requests below ``threshold_gbps`` search low-to-high; requests at or
    above it search high-to-low.
    """
    if ctx.request_bitrate() >= threshold_gbps:
        direction = SearchDirection.HIGH_TO_LOW
    else:
        direction = SearchDirection.LOW_TO_HIGH
    return _search_routes(ctx, direction, exact_first=False)


#: Registry for CLI / sweep selection by name.
ALGORITHMS = {
    "FF": first_fit,
    "EF": exact_fit,
    "FLF": first_last_fit,
}
