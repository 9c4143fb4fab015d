"""Subset sum as a switching problem, on two restricted topologies.

Both encoders emit a network plus a predicted value; the switching
optimum reaches the prediction exactly when some subset of the values
sums to the target, and the optimal switch set reveals which subset.

The cactus encoding hangs one switching gadget per value off a path (the
network is a cactus: every edge on at most one cycle).  The two-level
tree encoding instead wires the values to a distributor node p whose
edges are congested exactly by the rigid chain's angles; the explicit
witness construction below shows a solvable instance meeting its
predicted value without running any search.
"""

from ldcflow import (
    SubsetSumInstance,
    decode_subset_sum,
    encode_subset_sum_cactus_msf,
    encode_subset_sum_tree,
    is_cactus,
    solve_msf_bnb,
    subnetwork,
    total_generation,
    validate_solution,
    witness_tree,
)
from ldcflow.rational import format_value

inst = SubsetSumInstance(values=(1, 2, 3), target=5)
enc = encode_subset_sum_cactus_msf(inst)
print(f"cactus encoding of M={inst.values}, w={inst.target}:")
print("  network is a cactus:", is_cactus(enc.network))
print("  predicted value:", format_value(enc.predicted_value))
outcome = solve_msf_bnb(enc.network)
print("  switching optimum:", format_value(outcome.value))
print("  decoded subset:", sorted(decode_subset_sum(outcome, inst, "subset-sum-cactus-msf")))

bad = SubsetSumInstance(values=(2,), target=1)
bad_enc = encode_subset_sum_cactus_msf(bad)
print(f"\nunsolvable instance M={bad.values}, w={bad.target}:")
print("  predicted:", format_value(bad_enc.predicted_value), "- optimum:", format_value(solve_msf_bnb(bad_enc.network).value))

tree_inst = SubsetSumInstance(values=(2, 1, 3), target=5)
tree_enc = encode_subset_sum_tree(tree_inst)
print(f"\ntwo-level tree encoding of M={tree_inst.values}, w={tree_inst.target}:")
print("  predicted value:", format_value(tree_enc.predicted_value))
switched, solution = witness_tree(tree_inst, {2, 3})
sub = subnetwork(tree_enc.network, switched)
print("  witness for V={2,3} validates:", validate_solution(sub, solution).ok)
print("  witness generation:", format_value(total_generation(solution)))
print("  edges the witness switches off:", ", ".join(f"{e.a}--{e.b}" for e in sorted(switched)))
print("  search agrees:", format_value(solve_msf_bnb(tree_enc.network).value))
