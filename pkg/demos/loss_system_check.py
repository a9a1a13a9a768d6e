"""Validating the engine against queueing theory.

A 10-slot link carrying single-slot requests with exponential holding
times is an M/M/10/10 loss system, so its blocking probability must match
the Erlang-B formula.  Uniform sampling over the two ordered node pairs
sends half the traffic to each direction, so with lambda/mu = 10 each
directed link is offered 5 Erlang and the pooled blocking estimates
B(10, 5).
"""

import eonsim

SLOTS = 10
OFFERED_PER_LINK = 5.0
GOAL = 200_000


def erlang_b(servers, offered):
    blocking = 1.0
    for n in range(1, servers + 1):
        blocking = offered * blocking / (n + offered * blocking)
    return blocking


network = eonsim.Network.build(
    "loss", 2, [(0, 1, 10.0, SLOTS), (1, 0, 10.0, SLOTS)])
routes = eonsim.RouteSet()
routes.add_node_path(network, [0, 1])
routes.add_node_path(network, [1, 0])
catalog = eonsim.BitRateCatalog([eonsim.BitRateEntry(
    10.0, "10", (eonsim.ModulationOption("BPSK", 1, 1e9),))])

config = eonsim.SimulatorConfig(
    network=network, routes=routes, catalog=catalog,
    profile=eonsim.TrafficProfile(arrival_rate=2 * OFFERED_PER_LINK * 10.0,
                                  departure_rate=10.0,
                                  goal_connections=GOAL),
)
sim = eonsim.Simulator(config, eonsim.first_fit, algorithm_name="FF")
sim.init()
report = sim.run()

analytic = erlang_b(SLOTS, OFFERED_PER_LINK)
measured = report.blocking_probability
print(f"analytic  B({SLOTS}, {OFFERED_PER_LINK:g}) = {analytic:.6f}")
print(f"measured  ({GOAL} requests)    = {measured:.6f}")
print(f"relative error                 = {abs(measured - analytic) / analytic:.2%}")
