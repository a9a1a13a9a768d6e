"""Physical network model: nodes, directed links, slot grids and candidate routes.

A link owns a dense boolean occupancy grid (True = occupied) over its
frequency slots.  All slot ranges in this package are half-open
``[start, stop)`` with 0-based indices.  The grid is only ever mutated
through :meth:`Link.occupy_slots` / :meth:`Link.release_slots`, both of
which validate first and leave the grid untouched when they fail.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import (
    AlreadyOccupiedError,
    NoSuchLinkError,
    NotOccupiedError,
    OutOfBoundsError,
)


@dataclass(frozen=True)
class Node:
    """A network node, identified by a dense 0-based integer id."""

    id: int


class Link:
    """Directed fiber link with a frequency-slot occupancy grid."""

    __slots__ = ("id", "src", "dst", "length_km", "_slots")

    def __init__(self, id: int, src: int, dst: int, length_km: float, slot_count: int):
        if src == dst:
            raise ValueError(f"link {id}: src and dst must differ (got {src})")
        if slot_count < 1:
            raise ValueError(f"link {id}: slot count must be >= 1, got {slot_count}")
        if length_km < 0:
            raise ValueError(f"link {id}: length must be non-negative, got {length_km}")
        self.id = id
        self.src = src
        self.dst = dst
        self.length_km = float(length_km)
        self._slots = np.zeros(slot_count, dtype=bool)

    def __repr__(self):
        return (f"Link(id={self.id}, src={self.src}, dst={self.dst}, "
                f"length_km={self.length_km}, slots={self.slot_count})")

    @property
    def slot_count(self) -> int:
        return self._slots.shape[0]

    @property
    def occupancy(self) -> np.ndarray:
        """Read-only view of the grid; True marks an occupied slot."""
        view = self._slots.view()
        view.flags.writeable = False
        return view

    @property
    def occupied_count(self) -> int:
        return int(self._slots.sum())

    def _check_range(self, start: int, stop: int) -> None:
        if not (0 <= start < stop <= self.slot_count):
            raise OutOfBoundsError(
                f"slot range [{start}, {stop}) outside the {self.slot_count}-slot "
                f"grid of link {self.id}"
            )

    def occupy_slots(self, start: int, stop: int) -> None:
        """Mark ``[start, stop)`` occupied; every slot must currently be free."""
        self._check_range(start, stop)
        if self._slots[start:stop].any():
            raise AlreadyOccupiedError(
                f"link {self.id}: range [{start}, {stop}) is not entirely free"
            )
        self._slots[start:stop] = True

    def release_slots(self, start: int, stop: int) -> None:
        """Free ``[start, stop)``; every slot must currently be occupied."""
        self._check_range(start, stop)
        if not self._slots[start:stop].all():
            raise NotOccupiedError(
                f"link {self.id}: range [{start}, {stop}) is not entirely occupied "
                "(double release?)"
            )
        self._slots[start:stop] = False

    def is_range_free(self, start: int, stop: int) -> bool:
        """True iff every slot in ``[start, stop)`` is free.  No mutation."""
        self._check_range(start, stop)
        return not self._slots[start:stop].any()


class Network:
    """A named set of nodes plus directed links, with (src, dst) -> link lookup.

    At most one directed link may exist per ordered node pair; an undirected
    topology is expressed as two directed links.  Node and link ids are both
    dense and 0-based, so links are indexable by id.
    """

    def __init__(self, name: str, nodes: Sequence[Node], links: Sequence[Link]):
        ids = sorted(node.id for node in nodes)
        if ids != list(range(len(nodes))):
            raise ValueError(f"network {name!r}: node ids must be exactly 0..N-1, got {ids}")
        link_ids = sorted(link.id for link in links)
        if link_ids != list(range(len(links))):
            raise ValueError(f"network {name!r}: link ids must be exactly 0..L-1, got {link_ids}")
        adjacency: dict[tuple[int, int], int] = {}
        for link in links:
            for endpoint in (link.src, link.dst):
                if not 0 <= endpoint < len(nodes):
                    raise ValueError(
                        f"network {name!r}: link {link.id} references unknown node {endpoint}"
                    )
            pair = (link.src, link.dst)
            if pair in adjacency:
                raise ValueError(f"network {name!r}: duplicate directed link for pair {pair}")
            adjacency[pair] = link.id
        self.name = name
        self.nodes = tuple(sorted(nodes, key=lambda n: n.id))
        self.links = tuple(sorted(links, key=lambda l: l.id))
        self.adjacency = adjacency

    @classmethod
    def build(cls, name: str, node_count: int,
              links: Iterable[tuple[int, int, float, int]]) -> "Network":
        """Assemble a network from ``(src, dst, length_km, slot_count)`` tuples.

        Link ids are assigned in the order given.
        """
        nodes = [Node(i) for i in range(node_count)]
        built = [Link(i, src, dst, length, slots)
                 for i, (src, dst, length, slots) in enumerate(links)]
        return cls(name, nodes, built)

    def __repr__(self):
        return (f"Network(name={self.name!r}, nodes={self.node_count}, "
                f"links={len(self.links)})")

    @property
    def node_count(self) -> int:
        return len(self.nodes)

    def link(self, link_id: int) -> Link:
        if not 0 <= link_id < len(self.links):
            raise NoSuchLinkError(f"network {self.name!r} has no link with id {link_id}")
        return self.links[link_id]

    def link_by_endpoints(self, src: int, dst: int) -> int:
        """Id of the directed link src -> dst."""
        try:
            return self.adjacency[(src, dst)]
        except KeyError:
            raise NoSuchLinkError(
                f"network {self.name!r} has no directed link ({src} -> {dst})"
            ) from None

    def all_grids_free(self) -> bool:
        return all(link.occupied_count == 0 for link in self.links)

    def fresh_copy(self) -> "Network":
        """Same topology with brand-new, all-free occupancy grids."""
        links = [Link(l.id, l.src, l.dst, l.length_km, l.slot_count) for l in self.links]
        return Network(self.name, self.nodes, links)


@dataclass(frozen=True)
class Route:
    """An ordered chain of directed links; ``length_km`` is the exact sum."""

    link_ids: tuple[int, ...]
    length_km: float

    def recomputed_length_km(self, network: Network) -> float:
        return sum(network.link(lid).length_km for lid in self.link_ids)


class RouteSet:
    """Ordered candidate routes per ordered node pair.

    The per-pair list order is the retry order used by multi-route
    algorithms; it is preserved exactly as routes are added.
    """

    def __init__(self):
        self._routes: dict[tuple[int, int], list[Route]] = {}

    def add_route(self, network: Network, src: int, dst: int,
                  link_ids: Sequence[int]) -> Route:
        """Append a route built from explicit link ids, validating the chain."""
        if not link_ids:
            raise ValueError(f"route for ({src}, {dst}) must contain at least one link")
        links = [network.link(lid) for lid in link_ids]
        if links[0].src != src:
            raise ValueError(
                f"route for ({src}, {dst}) starts at node {links[0].src}, not {src}"
            )
        if links[-1].dst != dst:
            raise ValueError(
                f"route for ({src}, {dst}) ends at node {links[-1].dst}, not {dst}"
            )
        for a, b in zip(links, links[1:]):
            if a.dst != b.src:
                raise ValueError(
                    f"route for ({src}, {dst}): link {a.id} ends at {a.dst} but "
                    f"link {b.id} starts at {b.src}"
                )
        route = Route(tuple(link_ids), sum(l.length_km for l in links))
        self._routes.setdefault((src, dst), []).append(route)
        return route

    def add_node_path(self, network: Network, node_path: Sequence[int]) -> Route:
        """Append a route given as a node-id sequence, resolving each hop."""
        if len(node_path) < 2:
            raise ValueError(f"node path {list(node_path)} needs at least two nodes")
        link_ids = [network.link_by_endpoints(a, b)
                    for a, b in zip(node_path, node_path[1:])]
        return self.add_route(network, node_path[0], node_path[-1], link_ids)

    def routes_for(self, src: int, dst: int) -> tuple[Route, ...]:
        return tuple(self._routes.get((src, dst), ()))

    def pairs(self) -> Iterator[tuple[int, int]]:
        return iter(self._routes)

    @property
    def pair_count(self) -> int:
        return len(self._routes)

    def truncated(self, max_routes: int) -> "RouteSet":
        """Copy keeping only the first ``max_routes`` routes of every pair."""
        if max_routes < 1:
            raise ValueError(f"max_routes must be >= 1, got {max_routes}")
        clone = RouteSet()
        for pair, routes in self._routes.items():
            clone._routes[pair] = list(routes[:max_routes])
        return clone
