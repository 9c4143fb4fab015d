"""Classical (graph-theoretic) maximum flow, computed exactly.

This ignores susceptances and the power law entirely: every undirected
edge simply has its capacity available in both directions.  The value from
a super-source over all generators to a super-sink over all loads upper
bounds the power-law-constrained maximum of the network and of every one
of its sub-networks, which is what makes it useful as a pruning bound for
the switching search.
"""

from __future__ import annotations

from collections import deque
from fractions import Fraction

from .network import Edge, Network
from .rational import ZERO


def _edmonds_karp(num_nodes: int, arcs: dict[tuple[int, int], Fraction], source: int, sink: int) -> dict[tuple[int, int], Fraction]:
    """Max flow on a directed arc-capacity dict; returns the flow per arc."""
    residual = dict(arcs)
    adj: dict[int, list[int]] = {i: [] for i in range(num_nodes)}
    for (u, v) in arcs:
        adj[u].append(v)
        if (v, u) not in arcs:
            residual[(v, u)] = ZERO
            adj[v].append(u)
    for u in adj:
        adj[u].sort()

    while True:
        parent: dict[int, int] = {source: source}
        queue = deque([source])
        while queue and sink not in parent:
            u = queue.popleft()
            for v in adj[u]:
                if v not in parent and residual[(u, v)] > 0:
                    parent[v] = u
                    queue.append(v)
        if sink not in parent:
            break
        bottleneck = None
        v = sink
        while v != source:
            u = parent[v]
            r = residual[(u, v)]
            bottleneck = r if bottleneck is None or r < bottleneck else bottleneck
            v = u
        v = sink
        while v != source:
            u = parent[v]
            residual[(u, v)] -= bottleneck
            residual[(v, u)] += bottleneck
            v = u

    return {arc: arcs[arc] - residual[arc] for arc in arcs}


def _classical_flow_detail(n: Network) -> tuple[Fraction, dict[Edge, Fraction]]:
    """(max-flow value, signed net flow per edge relative to canonical orientation)."""
    if not n.generators or not n.loads or not n.edges:
        return ZERO, {e: ZERO for e in n.edges}
    index = {name: i for i, name in enumerate(n.node_names)}
    source = len(index)
    sink = len(index) + 1
    big = sum((e.cap for e in n.edges), ZERO) + 1

    arcs: dict[tuple[int, int], Fraction] = {}
    for e in n.edges:
        u, v = index[e.a], index[e.b]
        arcs[(u, v)] = arcs.get((u, v), ZERO) + e.cap
        arcs[(v, u)] = arcs.get((v, u), ZERO) + e.cap
    for g in n.generators:
        arcs[(source, index[g])] = big
    for l in n.loads:
        arcs[(index[l], sink)] = big

    flow = _edmonds_karp(len(index) + 2, arcs, source, sink)
    value = sum((flow[(source, index[g])] for g in n.generators), ZERO)
    # cap - residual on the forward arc is already the signed net flow
    per_edge = {e: flow[(index[e.a], index[e.b])] for e in n.edges}
    return value, per_edge


def classical_max_flow(n: Network) -> Fraction:
    """Standard max flow from all generators to all loads, capacities only."""
    value, _ = _classical_flow_detail(n)
    return value
