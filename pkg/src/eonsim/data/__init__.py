"""Bundled scenario data.

* ``nsfnet_network.json`` — the classic 14-node NSFNet backbone as 42
  directed links of 320 slots each; link lengths (km) follow the distance
  map commonly used in spectrum-assignment studies of this topology.
* ``nsfnet_routes_k3.json`` — for every ordered node pair, its three
  shortest loop-free paths by length, shortest first (the retry order).
* ``bit_rates.json`` — five bitrates (10..1000 Gbps), each with six
  modulation options ordered fewest slots first, with per-option reach.
* ``bit_rates_bpsk.json`` — the same bitrates restricted to their BPSK slot
  need, with reach set to an effectively unbounded 1e9 km so route length
  never excludes an option.
"""

from importlib import resources
from pathlib import Path

from ..inputs import parse_bit_rates, parse_network, parse_routes
from ..network import Network, RouteSet
from ..traffic import BitRateCatalog


def data_path(name: str) -> Path:
    """Filesystem path of a bundled data file (handy for CLI invocations)."""
    return Path(resources.files(__package__) / name)


def _read(name: str) -> str:
    return (resources.files(__package__) / name).read_text(encoding="utf-8")


def load_nsfnet() -> Network:
    return parse_network(_read("nsfnet_network.json"))


def load_nsfnet_routes(network: Network) -> RouteSet:
    return parse_routes(_read("nsfnet_routes_k3.json"), network)


def load_bit_rates() -> BitRateCatalog:
    """The default catalog: all modulation formats with their reach."""
    return parse_bit_rates(_read("bit_rates.json"))


def load_bpsk_bit_rates() -> BitRateCatalog:
    """Single-option BPSK catalog with unbounded reach."""
    return parse_bit_rates(_read("bit_rates_bpsk.json"))
