"""Writing your own allocation algorithm.

An algorithm is a plain function taking the per-request context and
returning ALLOCATED or NOT_ALLOCATED.  Slot ranges are *staged* with
ctx.alloc_slots(); the engine commits them only when the verdict is
ALLOCATED, so returning NOT_ALLOCATED after staging can never leak slots.

The example below is a "widest fit": it places each request in the middle
of the largest joint free block of the first route that fits, and keeps a
private statistic on the side.  It is deliberately simple, not good -- the
point is the shape of the code.
"""

import eonsim
from eonsim import ALLOCATED, NOT_ALLOCATED, data
from eonsim.algorithms import exact_free_block, intersection_grid

hop_histogram = {}  # private statistics live in plain module/closure state


def widest_fit(ctx):
    need = ctx.request_slots(0)  # single-option catalog in this demo
    for route in range(ctx.route_count()):
        grid = intersection_grid(ctx, route)

        # largest maximal free run on this route
        best = None
        for size in range(grid.shape[0], need - 1, -1):
            block = exact_free_block(grid, size)
            if block is not None:
                best = block
                break
        if best is None or best.length < need:
            continue

        start = best.start + (best.length - need) // 2
        for link_id in ctx.route_link_ids(route):
            ctx.alloc_slots(link_id, start, start + need)
        hops = ctx.link_count_in_route(route)
        hop_histogram[hops] = hop_histogram.get(hops, 0) + 1
        return ALLOCATED
    return NOT_ALLOCATED


def run(allocator, name):
    network = data.load_nsfnet()
    config = eonsim.SimulatorConfig(
        network=network,
        routes=data.load_nsfnet_routes(network),
        catalog=data.load_bpsk_bit_rates(),
        profile=eonsim.TrafficProfile(arrival_rate=160.0, departure_rate=10.0,
                                      goal_connections=20_000),
    )
    sim = eonsim.Simulator(config, allocator, algorithm_name=name)
    sim.init()
    return sim.run()


if __name__ == "__main__":
    mine = run(widest_fit, "widest")
    reference = run(eonsim.first_fit, "FF")
    print(f"widest fit blocking : {mine.blocking_probability:.4e}")
    print(f"first fit blocking  : {reference.blocking_probability:.4e}")
    print(f"hops of accepted connections (widest fit): {sorted(hop_histogram.items())}")
