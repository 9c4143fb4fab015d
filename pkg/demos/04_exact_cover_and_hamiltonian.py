"""The two strongest encodings: exact cover and Hamiltonian path.

Exact cover by 3-sets becomes a FACTS problem: one adjustable-susceptance
gadget per candidate set, predicted value 3 + 18.3|S| + |M|.  The value
is reached exactly when a subfamily covers every element once, and the
active gadgets read the cover back out.  (Swapping in switching gadgets
gives the same construction at 9 per set.)

Hamiltonian path becomes a pure switching problem on a unit-capacity
network: value 2 is reachable exactly when the graph has a spanning a-b
path, because only such a path can supply the angle spread the parallel
comparison chain forces.
"""

from ldcflow import (
    ExactCover3Instance,
    HamiltonianInstance,
    decode_exact_cover,
    encode_exact_cover_mff,
    encode_hamiltonian,
    solve_mff_endpoints,
    solve_msf_bnb,
)
from ldcflow.rational import format_value

cover = ExactCover3Instance(
    universe=("a", "b", "c", "d", "e", "f"),
    sets=(("a", "b", "c"), ("b", "c", "d"), ("d", "e", "f")),
)
enc = encode_exact_cover_mff(cover)
print("exact cover, universe a..f, three candidate sets:")
print("  network:", len(enc.network.node_names), "nodes /", len(enc.network.edges), "edges,", len(enc.network.facts_edges), "adjustable")
print("  predicted value:", format_value(enc.predicted_value))
outcome = solve_mff_endpoints(enc.network)
print("  endpoint search reaches:", format_value(outcome.value))
print("  decoded cover:", [list(s) for s in decode_exact_cover(outcome, cover)])

graph = HamiltonianInstance(
    nodes=("a", "c", "d", "b"),
    edges=(("a", "c"), ("a", "d"), ("c", "d"), ("c", "b"), ("d", "b")),
    a="a",
    b="b",
)
henc = encode_hamiltonian(graph)
print("\nHamiltonian path: 4-node graph with an a->b spanning path:")
print("  switching optimum:", format_value(solve_msf_bnb(henc.network).value), "(2 = path exists)")

star = HamiltonianInstance(("a", "c", "d", "b"), (("a", "c"), ("c", "b"), ("c", "d")), "a", "b")
senc = encode_hamiltonian(star)
print("  star graph (no spanning path):", format_value(solve_msf_bnb(senc.network).value), "< 2")
