"""Regenerate the JSON files bundled under src/eonsim/data/.

The topology is the classic 14-node NSFNet backbone (21 bidirectional
fiber pairs, so 42 directed links) with the distance map in km that
spectrum-assignment studies of this network conventionally use.  Candidate
routes are the 3 shortest loop-free paths per ordered pair (Yen's
algorithm over link lengths, ties broken by node sequence).  Not a library
component: run it only to rebuild the fixtures.

    python tools/generate_fixtures.py
"""

import heapq
import json
from pathlib import Path

DATA_DIR = Path(__file__).resolve().parent.parent / "src" / "eonsim" / "data"

SLOTS_PER_LINK = 320
ROUTES_PER_PAIR = 3

# Undirected NSFNet edges: (node a, node b, length km).
NSFNET_EDGES = [
    (0, 1, 1050), (0, 2, 1500), (0, 7, 2400),
    (1, 2, 600), (1, 3, 750),
    (2, 5, 1800),
    (3, 4, 600), (3, 10, 1950),
    (4, 5, 1200), (4, 6, 600),
    (5, 9, 1050), (5, 13, 1800),
    (6, 7, 750),
    (7, 8, 750),
    (8, 9, 300), (8, 11, 300),
    (9, 12, 300),
    (10, 11, 750), (10, 13, 300),
    (11, 12, 300),
    (12, 13, 300),
]
NODE_COUNT = 14

# Reach (km) per modulation, highest-order first, and slot need per bitrate.
MODULATIONS = [
    ("64-QAM", 80),
    ("32-QAM", 240),
    ("16-QAM", 560),
    ("8-QAM", 1360),
    ("QPSK", 2720),
    ("BPSK", 5520),
]
SLOT_NEEDS = {
    "10": [1, 1, 1, 1, 1, 1],
    "40": [1, 1, 1, 2, 2, 4],
    "100": [2, 2, 2, 3, 4, 8],
    "400": [6, 7, 8, 11, 16, 32],
    "1000": [14, 16, 20, 27, 40, 80],
}
UNBOUNDED_REACH = 1_000_000_000


def build_network_doc():
    links = []
    for a, b, length in NSFNET_EDGES:
        links.append({"id": len(links), "src": a, "dst": b,
                      "length": length, "slots": SLOTS_PER_LINK})
        links.append({"id": len(links), "src": b, "dst": a,
                      "length": length, "slots": SLOTS_PER_LINK})
    return {
        "name": "NSFNet",
        "nodes": [{"id": i} for i in range(NODE_COUNT)],
        "links": links,
    }


def adjacency_map():
    adjacency = {i: {} for i in range(NODE_COUNT)}
    for a, b, length in NSFNET_EDGES:
        adjacency[a][b] = length
        adjacency[b][a] = length
    return adjacency


def dijkstra(adjacency, src, dst, banned_nodes=(), banned_edges=()):
    """Shortest path by length; ties broken by node sequence. None if cut off."""
    banned_nodes = set(banned_nodes)
    banned_edges = set(banned_edges)
    best = {src: (0.0, (src,))}
    heap = [(0.0, (src,))]
    while heap:
        dist, path = heapq.heappop(heap)
        node = path[-1]
        if best.get(node, (float("inf"), ()))[0] < dist:
            continue
        if node == dst:
            return dist, path
        for neighbor, length in sorted(adjacency[node].items()):
            if neighbor in banned_nodes or (node, neighbor) in banned_edges:
                continue
            candidate = (dist + length, path + (neighbor,))
            if candidate < best.get(neighbor, (float("inf"), ())):
                best[neighbor] = candidate
                heapq.heappush(heap, candidate)
    return None


def k_shortest_paths(adjacency, src, dst, k):
    """Yen's algorithm: k shortest loop-free paths, shortest first."""
    first = dijkstra(adjacency, src, dst)
    if first is None:
        return []
    accepted = [first]
    candidates = []
    while len(accepted) < k:
        _, previous = accepted[-1]
        for i in range(len(previous) - 1):
            spur_node = previous[i]
            root = previous[: i + 1]
            banned_edges = {(path[i], path[i + 1])
                            for _, path in accepted
                            if len(path) > i + 1 and path[: i + 1] == root}
            banned_nodes = set(root[:-1])
            spur = dijkstra(adjacency, spur_node, dst, banned_nodes, banned_edges)
            if spur is None:
                continue
            root_length = sum(adjacency[a][b] for a, b in zip(root, root[1:]))
            total = root_length + spur[0]
            path = root[:-1] + tuple(spur[1])
            entry = (total, path)
            if entry not in candidates and all(path != p for _, p in accepted):
                heapq.heappush(candidates, entry)
        if not candidates:
            break
        accepted.append(heapq.heappop(candidates))
    return [(length, list(path)) for length, path in accepted]


def build_routes_doc():
    adjacency = adjacency_map()
    blocks = []
    longest_first_route = 0.0
    for src in range(NODE_COUNT):
        for dst in range(NODE_COUNT):
            if src == dst:
                continue
            paths = k_shortest_paths(adjacency, src, dst, ROUTES_PER_PAIR)
            assert len(paths) == ROUTES_PER_PAIR, (src, dst, paths)
            longest_first_route = max(longest_first_route, paths[0][0])
            blocks.append({"src": src, "dst": dst,
                           "paths": [path for _, path in paths]})
    print(f"longest shortest-route length: {longest_first_route} km")
    return {"name": "NSFNet 3 shortest routes", "routes": blocks}


def build_bit_rates_doc():
    return {
        label: [{"modulation": name, "slots": slots, "reach": reach}
                for (name, reach), slots in zip(MODULATIONS, needs)]
        for label, needs in SLOT_NEEDS.items()
    }


def build_bpsk_doc():
    return {
        label: [{"modulation": "BPSK", "slots": needs[-1],
                 "reach": UNBOUNDED_REACH}]
        for label, needs in SLOT_NEEDS.items()
    }


def main():
    DATA_DIR.mkdir(parents=True, exist_ok=True)
    documents = {
        "nsfnet_network.json": build_network_doc(),
        "nsfnet_routes_k3.json": build_routes_doc(),
        "bit_rates.json": build_bit_rates_doc(),
        "bit_rates_bpsk.json": build_bpsk_doc(),
    }
    for name, doc in documents.items():
        path = DATA_DIR / name
        path.write_text(json.dumps(doc, indent=1) + "\n", encoding="utf-8")
        print(f"wrote {path}")


if __name__ == "__main__":
    main()
