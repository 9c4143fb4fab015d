"""JSON formats for networks, solutions, outcomes and problem instances.

Rationals serialize as strings -- "p/q", an integer, or a finite decimal
-- and parse back exactly; floats are rejected.  Edge-keyed maps
serialize as arrays of {"a", "b", ...} records in canonical edge order,
node-keyed maps as plain objects, so files are deterministic and
round-trip byte-for-byte.
"""

from __future__ import annotations

import json
from typing import Any

from .mff import MffOutcome, SusAssignment
from .msf import MsfOutcome
from .network import Edge, Network, NodeRole, Solution, SwitchSet, subnetwork
from .rational import Rational, rat, rat_str
from .reductions import (
    EncodedInstance,
    ExactCover3Instance,
    HamiltonianInstance,
    SubsetSumInstance,
)


def _rat_in(value: Any) -> Rational:
    if isinstance(value, bool) or isinstance(value, float):
        raise ValueError(f"expected an exact rational (string or int), got {value!r}")
    return rat(value)


# --- networks ---------------------------------------------------------------


def network_to_json(n: Network) -> dict:
    return {
        "nodes": [{"id": name, "role": role.value} for name, role in n.nodes],
        "edges": [
            {
                "a": e.a,
                "b": e.b,
                "s_min": rat_str(e.s_min),
                "s_max": rat_str(e.s_max),
                "cap": rat_str(e.cap),
            }
            for e in n.edges
        ],
    }


def network_from_json(data: dict) -> Network:
    nodes = [(nd["id"], NodeRole(nd["role"])) for nd in data["nodes"]]
    edges = [
        Edge(ed["a"], ed["b"], _rat_in(ed["s_min"]), _rat_in(ed["s_max"]), _rat_in(ed["cap"]))
        for ed in data["edges"]
    ]
    return Network(nodes, edges)


# --- solutions and outcomes --------------------------------------------------


def _edge_map_out(mapping) -> list[dict]:
    return [
        {"a": e.a, "b": e.b, "value": rat_str(v)}
        for e, v in sorted(mapping.items())
    ]


def _node_map_out(mapping) -> dict:
    return {v: rat_str(x) for v, x in sorted(mapping.items())}


def _edge_map_in(records: list[dict], n: Network) -> dict[Edge, Rational]:
    by_pair = {e.pair: e for e in n.edges}
    out = {}
    for rec in records:
        pair = tuple(sorted((rec["a"], rec["b"])))
        if pair not in by_pair:
            raise ValueError(f"no edge {pair[0]}--{pair[1]} in the network")
        out[by_pair[pair]] = _rat_in(rec["value"])
    return out


def solution_to_json(sol: Solution) -> dict:
    return {
        "susceptance": _edge_map_out(sol.susceptance),
        "flow": _edge_map_out(sol.flow),
        "angle": _node_map_out(sol.angle),
        "gen": _node_map_out(sol.gen),
        "load": _node_map_out(sol.load),
    }


def solution_from_json(data: dict, n: Network) -> Solution:
    """Rebuild a solution against the network its maps refer to."""
    return Solution(
        susceptance=_edge_map_in(data["susceptance"], n),
        flow=_edge_map_in(data["flow"], n),
        angle={v: _rat_in(x) for v, x in data["angle"].items()},
        gen={v: _rat_in(x) for v, x in data["gen"].items()},
        load={v: _rat_in(x) for v, x in data["load"].items()},
    )


def _switch_set_out(switched: SwitchSet) -> list[dict]:
    return [{"a": e.a, "b": e.b} for e in sorted(switched)]


def switch_set_from_json(records: list[dict], n: Network) -> SwitchSet:
    by_pair = {e.pair: e for e in n.edges}
    out = set()
    for rec in records:
        pair = tuple(sorted((rec["a"], rec["b"])))
        if pair not in by_pair:
            raise ValueError(f"no edge {pair[0]}--{pair[1]} in the network")
        out.add(by_pair[pair])
    return frozenset(out)


def msf_outcome_to_json(out: MsfOutcome) -> dict:
    return {
        "problem": "msf",
        "value": rat_str(out.value),
        "switched": _switch_set_out(out.switched),
        "solution": solution_to_json(out.solution),
    }


def msf_outcome_from_json(data: dict, n: Network) -> MsfOutcome:
    switched = switch_set_from_json(data["switched"], n)
    sub = subnetwork(n, switched)
    return MsfOutcome(
        value=_rat_in(data["value"]),
        switched=switched,
        solution=solution_from_json(data["solution"], sub),
    )


def mff_outcome_to_json(out: MffOutcome) -> dict:
    return {
        "problem": "mff",
        "value": rat_str(out.value),
        "assignment": _edge_map_out(out.assignment),
        "certified": out.certified,
        "solution": solution_to_json(out.solution),
    }


def mff_outcome_from_json(data: dict, n: Network) -> MffOutcome:
    assignment: SusAssignment = _edge_map_in(data["assignment"], n)
    return MffOutcome(
        value=_rat_in(data["value"]),
        assignment=assignment,
        solution=solution_from_json(data["solution"], n),
        certified=bool(data["certified"]),
    )


# --- problem instances --------------------------------------------------------


def subset_sum_from_json(data: dict) -> SubsetSumInstance:
    return SubsetSumInstance(values=tuple(int(x) for x in data["M"]), target=int(data["w"]))


def subset_sum_to_json(inst: SubsetSumInstance) -> dict:
    return {"M": list(inst.values), "w": inst.target}


def exact_cover_from_json(data: dict) -> ExactCover3Instance:
    return ExactCover3Instance(
        universe=tuple(str(x) for x in data["M"]),
        sets=tuple(tuple(str(x) for x in xs) for xs in data["S"]),
    )


def exact_cover_to_json(inst: ExactCover3Instance) -> dict:
    return {"M": list(inst.universe), "S": [list(xs) for xs in inst.sets]}


def hamiltonian_from_json(data: dict) -> HamiltonianInstance:
    return HamiltonianInstance(
        nodes=tuple(str(x) for x in data["nodes"]),
        edges=tuple((str(u), str(v)) for u, v in data["edges"]),
        a=str(data["a"]),
        b=str(data["b"]),
    )


def hamiltonian_to_json(inst: HamiltonianInstance) -> dict:
    return {"nodes": list(inst.nodes), "edges": [list(e) for e in inst.edges], "a": inst.a, "b": inst.b}


def encoded_to_json(enc: EncodedInstance) -> dict:
    return {
        "kind": enc.kind,
        "network": network_to_json(enc.network),
        "predicted_value": rat_str(enc.predicted_value),
    }


# --- files ---------------------------------------------------------------------


def dump(data: dict, path: str) -> None:
    with open(path, "w") as fh:
        json.dump(data, fh, indent=1, sort_keys=True)
        fh.write("\n")


def load(path: str) -> dict:
    with open(path) as fh:
        return json.load(fh)
