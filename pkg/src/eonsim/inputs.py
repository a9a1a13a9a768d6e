"""Input documents: network topology, candidate routes and bitrate catalog.

All three are UTF-8 JSON.  Unknown fields are ignored with a warning so
documents stay forward compatible.

Network::

    {"name": "NSFNet",
     "nodes": [{"id": 0}, ...],
     "links": [{"id": 0, "src": 0, "dst": 1, "length": 1050, "slots": 320}, ...]}

Routes (paths are node-id sequences, resolved against the network; the
per-pair file order is the retry order)::

    {"name": "NSFNet 3 shortest",
     "routes": [{"src": 0, "dst": 1, "paths": [[0, 1], [0, 2, 1], ...]}, ...]}

Bitrates (keys are the bitrate labels; option arrays are ordered fewest
slots first, which is the trial order)::

    {"10":  [{"modulation": "64-QAM", "slots": 1, "reach": 80}, ...],
     "40":  [...],
     ...}

Parsing is total: a document either yields a validated model or raises a
located :class:`~eonsim.errors.InputError`; no partially built model ever
escapes.
"""

from __future__ import annotations

import json
import logging
from pathlib import Path

from .errors import MalformedDocumentError, SchemaError, ValidationError
from .network import Link, Network, Node, RouteSet
from .traffic import BitRateCatalog, BitRateEntry, ModulationOption

LOGGER = logging.getLogger(__name__)

_NETWORK_FIELDS = {"name", "nodes", "links"}
_NODE_FIELDS = {"id"}
_LINK_FIELDS = {"id", "src", "dst", "length", "slots"}
_ROUTES_FIELDS = {"name", "routes"}
_ROUTE_FIELDS = {"src", "dst", "paths"}
_OPTION_FIELDS = {"modulation", "slots", "reach"}


def _load_document(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as err:
        raise MalformedDocumentError(f"not valid JSON: {err}") from err


def _require(mapping, key, kind, path):
    if not isinstance(mapping, dict):
        raise SchemaError(f"{path}: expected an object, got {type(mapping).__name__}")
    if key not in mapping:
        raise SchemaError(f"{path}.{key}: missing field")
    value = mapping[key]
    if kind is float:
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise SchemaError(f"{path}.{key}: expected a number, "
                              f"got {type(value).__name__}")
        return float(value)
    if kind is int and (isinstance(value, bool) or not isinstance(value, int)):
        raise SchemaError(f"{path}.{key}: expected an integer, "
                          f"got {type(value).__name__}")
    if kind in (str, list) and not isinstance(value, kind):
        raise SchemaError(f"{path}.{key}: expected {kind.__name__}, "
                          f"got {type(value).__name__}")
    return value


def _warn_unknown(mapping, known, path):
    for key in mapping:
        if key not in known:
            LOGGER.warning("%s: ignoring unknown field %r", path, key)


def parse_network(text: str) -> Network:
    """Parse and validate a network topology document."""
    doc = _load_document(text)
    name = _require(doc, "name", str, "network")
    nodes_doc = _require(doc, "nodes", list, "network")
    links_doc = _require(doc, "links", list, "network")
    _warn_unknown(doc, _NETWORK_FIELDS, "network")
    if not nodes_doc:
        raise ValidationError("network: the nodes list is empty")
    nodes = []
    for i, node_doc in enumerate(nodes_doc):
        path = f"nodes[{i}]"
        nodes.append(Node(_require(node_doc, "id", int, path)))
        _warn_unknown(node_doc, _NODE_FIELDS, path)
    ids = sorted(node.id for node in nodes)
    if ids != list(range(len(nodes))):
        raise ValidationError(f"network: node ids must be exactly 0..{len(nodes) - 1}")
    links = []
    seen_pairs: dict[tuple[int, int], int] = {}
    for i, link_doc in enumerate(links_doc):
        path = f"links[{i}]"
        link_id = _require(link_doc, "id", int, path)
        src = _require(link_doc, "src", int, path)
        dst = _require(link_doc, "dst", int, path)
        length = _require(link_doc, "length", float, path)
        slots = _require(link_doc, "slots", int, path)
        _warn_unknown(link_doc, _LINK_FIELDS, path)
        for endpoint in (src, dst):
            if not 0 <= endpoint < len(nodes):
                raise ValidationError(
                    f"{path}: link {link_id} references unknown node {endpoint}")
        if src == dst:
            raise ValidationError(f"{path}: link {link_id} is a self-loop on node {src}")
        if (src, dst) in seen_pairs:
            raise ValidationError(
                f"{path}: duplicate directed link ({src} -> {dst}), "
                f"already declared by link {seen_pairs[(src, dst)]}")
        seen_pairs[(src, dst)] = link_id
        if slots < 1:
            raise ValidationError(f"{path}: link {link_id} has non-positive slots {slots}")
        if length < 0:
            raise ValidationError(f"{path}: link {link_id} has negative length {length}")
        links.append(Link(link_id, src, dst, length, slots))
    link_ids = sorted(link.id for link in links)
    if link_ids != list(range(len(links))):
        raise ValidationError(f"network: link ids must be exactly 0..{len(links) - 1}")
    return Network(name, nodes, links)


def parse_routes(text: str, network: Network) -> RouteSet:
    """Parse candidate routes, resolving node sequences against the network."""
    doc = _load_document(text)
    _require(doc, "name", str, "routes")
    routes_doc = _require(doc, "routes", list, "routes")
    _warn_unknown(doc, _ROUTES_FIELDS, "routes")
    route_set = RouteSet()
    for i, pair_doc in enumerate(routes_doc):
        path = f"routes[{i}]"
        src = _require(pair_doc, "src", int, path)
        dst = _require(pair_doc, "dst", int, path)
        paths = _require(pair_doc, "paths", list, path)
        _warn_unknown(pair_doc, _ROUTE_FIELDS, path)
        for j, node_path in enumerate(paths):
            where = f"{path}.paths[{j}]"
            if (not isinstance(node_path, list) or len(node_path) < 2
                    or not all(isinstance(n, int) and not isinstance(n, bool)
                               for n in node_path)):
                raise SchemaError(f"{where}: expected a list of >= 2 node ids")
            if node_path[0] != src or node_path[-1] != dst:
                raise ValidationError(
                    f"{where}: path {node_path} does not run from the declared "
                    f"src {src} to dst {dst}")
            link_ids = []
            for a, b in zip(node_path, node_path[1:]):
                if (a, b) not in network.adjacency:
                    raise ValidationError(
                        f"{where}: no directed link ({a} -> {b}) in network "
                        f"{network.name!r}")
                link_ids.append(network.adjacency[(a, b)])
            route_set.add_route(network, src, dst, link_ids)
    return route_set


def parse_bit_rates(text: str) -> BitRateCatalog:
    """Parse a bitrate catalog; entry and option order follow the document."""
    doc = _load_document(text)
    if not isinstance(doc, dict):
        raise SchemaError("bit_rates: expected an object keyed by bitrate label")
    entries = []
    for label, options_doc in doc.items():
        path = f"bit_rates[{label!r}]"
        try:
            bitrate = float(label)
        except ValueError:
            raise SchemaError(f"{path}: key is not a numeric bitrate label") from None
        if bitrate <= 0:
            raise ValidationError(f"{path}: bitrate must be positive")
        if not isinstance(options_doc, list) or not options_doc:
            raise ValidationError(f"{path}: needs a non-empty option list")
        options = []
        for j, option_doc in enumerate(options_doc):
            where = f"{path}[{j}]"
            modulation = _require(option_doc, "modulation", str, where)
            slots = _require(option_doc, "slots", int, where)
            reach = _require(option_doc, "reach", float, where)
            _warn_unknown(option_doc, _OPTION_FIELDS, where)
            if slots < 1:
                raise ValidationError(f"{where}: slots must be >= 1, got {slots}")
            if reach <= 0:
                raise ValidationError(f"{where}: reach must be > 0, got {reach}")
            options.append(ModulationOption(modulation, slots, reach))
        entries.append(BitRateEntry(bitrate, label, tuple(options)))
    return BitRateCatalog(entries)


# -- file helpers ------------------------------------------------------------

def load_network(path) -> Network:
    return parse_network(Path(path).read_text(encoding="utf-8"))


def load_routes(path, network: Network) -> RouteSet:
    return parse_routes(Path(path).read_text(encoding="utf-8"), network)


def load_bit_rates(path) -> BitRateCatalog:
    return parse_bit_rates(Path(path).read_text(encoding="utf-8"))


# -- serialization (round-trip counterparts) ----------------------------------

def serialize_network(network: Network) -> str:
    doc = {
        "name": network.name,
        "nodes": [{"id": node.id} for node in network.nodes],
        "links": [{"id": link.id, "src": link.src, "dst": link.dst,
                   "length": link.length_km, "slots": link.slot_count}
                  for link in network.links],
    }
    return json.dumps(doc, indent=2)


def serialize_routes(routes: RouteSet, network: Network) -> str:
    blocks = []
    for src, dst in routes.pairs():
        paths = []
        for route in routes.routes_for(src, dst):
            node_path = [network.link(route.link_ids[0]).src]
            node_path.extend(network.link(lid).dst for lid in route.link_ids)
            paths.append(node_path)
        blocks.append({"src": src, "dst": dst, "paths": paths})
    return json.dumps({"name": network.name, "routes": blocks}, indent=2)


def serialize_bit_rates(catalog: BitRateCatalog) -> str:
    doc = {
        entry.label: [{"modulation": option.modulation,
                       "slots": option.slot_count,
                       "reach": option.reach_km}
                      for option in entry.options]
        for entry in catalog
    }
    return json.dumps(doc, indent=2)
