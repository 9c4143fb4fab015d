"""Encodings of combinatorial problems as reconfiguration instances.

Each encoder takes a problem instance and emits a network together with a
closed-form predicted value: the reconfiguration optimum equals the
predicted value exactly when the combinatorial instance is solvable, and
stays strictly below it otherwise.  Decoders read a certificate back out
of an optimal outcome; `witness_tree` builds the explicit switch set and
solution showing a solvable subset-sum instance attains its predicted
value on the two-level tree encoding.

Encodings provided:
  exact cover by 3-sets  -> FACTS network,  value 3 + 18.3|S| + |M|
  exact cover by 3-sets  -> switching,      value 3 + 9|S| + |M|
  Hamiltonian a-b path   -> switching,      value 2
  subset sum             -> cactus switching, value 3 + w + 3m,  m = sum(M)
  subset sum             -> cactus FACTS,     value 3 + w + 6.1m
  subset sum             -> 2-level tree switching, value m + 2 + w, m = sum(M) - 1

Generated node names: glue nodes are short lowercase names ("g", "l",
"v1", ..., "a1", "p", ...); gadget-internal nodes carry an "X<i>." prefix
and Hamiltonian helper nodes an "H." prefix.  Instance symbols may not
collide with these.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DecodingFailed, InvalidInstance, NotACertificate, NotOptimal
from .gadgets import Polarity, gfch, gsch
from .mff import MffOutcome
from .msf import MsfOutcome
from .network import (
    Edge,
    Network,
    NodeId,
    NodeRole,
    Solution,
    SwitchSet,
    fixed_edge,
    network_sum,
    subnetwork,
)
from .rational import ONE, Rational, ZERO

KIND_EXACT_COVER_MFF = "exact-cover-mff"
KIND_EXACT_COVER_MSF = "exact-cover-msf"
KIND_HAMILTONIAN = "hamiltonian"
KIND_CACTUS_MSF = "subset-sum-cactus-msf"
KIND_CACTUS_MFF = "subset-sum-cactus-mff"
KIND_TREE = "subset-sum-tree"


@dataclass(frozen=True)
class ExactCover3Instance:
    """Universe M and a family S of 3-element subsets of M."""

    universe: tuple[str, ...]
    sets: tuple[tuple[str, str, str], ...]


@dataclass(frozen=True)
class SubsetSumInstance:
    """Distinct positive integers and a target; order of values is kept."""

    values: tuple[int, ...]
    target: int


@dataclass(frozen=True)
class HamiltonianInstance:
    """A simple undirected graph with designated endpoints a and b."""

    nodes: tuple[str, ...]
    edges: tuple[tuple[str, str], ...]
    a: str
    b: str


@dataclass(frozen=True)
class EncodedInstance:
    network: Network
    predicted_value: Rational
    kind: str


# ---------------------------------------------------------------------------
# Instance validation
# ---------------------------------------------------------------------------


def _check_subset_sum(inst: SubsetSumInstance) -> None:
    if not inst.values:
        raise InvalidInstance("subset-sum instance needs at least one value")
    if len(set(inst.values)) != len(inst.values):
        raise InvalidInstance("subset-sum values must be distinct")
    if any(x <= 0 for x in inst.values) or inst.target <= 0:
        raise InvalidInstance("subset-sum values and target must be positive integers")


def _check_exact_cover(inst: ExactCover3Instance) -> None:
    universe = set(inst.universe)
    if len(universe) != len(inst.universe):
        raise InvalidInstance("universe elements must be distinct")
    reserved = {"g", "l"} | {f"v{i}" for i in range(1, len(inst.sets) + 1)}
    for sym in inst.universe:
        if not sym or sym in reserved or sym.startswith("X"):
            raise InvalidInstance(f"element name {sym!r} collides with generated node names")
    seen = set()
    for X in inst.sets:
        if len(X) != 3 or len(set(X)) != 3:
            raise InvalidInstance(f"{X} is not a 3-element set")
        if not set(X) <= universe:
            raise InvalidInstance(f"{X} is not a subset of the universe")
        key = frozenset(X)
        if key in seen:
            raise InvalidInstance(f"{X} appears twice")
        seen.add(key)


def _check_hamiltonian(inst: HamiltonianInstance) -> None:
    nodes = set(inst.nodes)
    if len(nodes) != len(inst.nodes):
        raise InvalidInstance("graph nodes must be distinct")
    if inst.a == inst.b or inst.a not in nodes or inst.b not in nodes:
        raise InvalidInstance("endpoints must be two distinct graph nodes")
    for name in inst.nodes:
        if not name or name.startswith("H."):
            raise InvalidInstance(f"node name {name!r} collides with generated node names")
    seen = set()
    for u, v in inst.edges:
        if u == v or u not in nodes or v not in nodes:
            raise InvalidInstance(f"bad edge {(u, v)}")
        key = frozenset((u, v))
        if key in seen:
            raise InvalidInstance(f"duplicate edge {(u, v)}")
        seen.add(key)


# ---------------------------------------------------------------------------
# Exact cover by 3-sets
# ---------------------------------------------------------------------------


def _exact_cover_glue(inst: ExactCover3Instance) -> Network:
    nodes = [("g", NodeRole.GENERATOR), ("l", NodeRole.LOAD)]
    nodes += [(x, NodeRole.PLAIN) for x in inst.universe]
    nodes += [(f"v{i}", NodeRole.PLAIN) for i in range(1, len(inst.sets) + 1)]
    edges = [fixed_edge("g", "l", 1, 3)]
    for x in inst.universe:
        edges.append(fixed_edge("g", x, 1, 1))
        edges.append(fixed_edge(x, "l", 1, 2))
    for i, X in enumerate(inst.sets, start=1):
        for x in X:
            edges.append(fixed_edge(f"v{i}", x, 1, 1))
    return Network(nodes, edges)


def _encode_exact_cover(inst: ExactCover3Instance, gadget, per_gadget: Rational, kind: str) -> EncodedInstance:
    _check_exact_cover(inst)
    net = _exact_cover_glue(inst)
    for i in range(1, len(inst.sets) + 1):
        net = network_sum(net, gadget(3, port=f"v{i}", polarity=Polarity.PORT, prefix=f"X{i}."))
    predicted = 3 + per_gadget * len(inst.sets) + len(inst.universe)
    return EncodedInstance(net, predicted, kind)


def encode_exact_cover_mff(inst: ExactCover3Instance) -> EncodedInstance:
    """FACTS-choice encoding; predicted value 3 + 18.3|S| + |M|."""
    return _encode_exact_cover(inst, gfch, Fraction(183, 10), KIND_EXACT_COVER_MFF)


def encode_exact_cover_msf(inst: ExactCover3Instance) -> EncodedInstance:
    """Switching-choice encoding; predicted value 3 + 9|S| + |M|."""
    return _encode_exact_cover(inst, gsch, Fraction(9), KIND_EXACT_COVER_MSF)


def _port_outflows(enc: EncodedInstance, sol: Solution, port: NodeId, prefix: str) -> dict[Edge, Rational]:
    """Signed flow out of `port` on its glue edges (gadget edges excluded)."""
    out = {}
    for e in enc.network.incident[port]:
        other = e.b if e.a == port else e.a
        if other.startswith(prefix):
            continue
        if e not in sol.flow:  # switched away
            continue
        out[e] = sol.flow[e] if e.a == port else -sol.flow[e]
    return out


def decode_exact_cover(outcome: MffOutcome | MsfOutcome, inst: ExactCover3Instance) -> tuple[tuple[str, str, str], ...]:
    """Read the exact cover out of an optimal outcome.

    A choice gadget is active exactly when it pushes one unit down each of
    its three port--element edges; the active sets must cover every
    element once.
    """
    _check_exact_cover(inst)
    kind = KIND_EXACT_COVER_MFF if isinstance(outcome, MffOutcome) else KIND_EXACT_COVER_MSF
    enc = encode_exact_cover_mff(inst) if kind == KIND_EXACT_COVER_MFF else encode_exact_cover_msf(inst)
    if outcome.value != enc.predicted_value:
        raise NotOptimal(f"outcome value {outcome.value} is below the predicted {enc.predicted_value}")
    cover = []
    for i, X in enumerate(inst.sets, start=1):
        flows = _port_outflows(enc, outcome.solution, f"v{i}", f"X{i}.")
        if all(f == 1 for f in flows.values()) and len(flows) == 3:
            cover.append(X)
    counts = {x: 0 for x in inst.universe}
    for X in cover:
        for x in X:
            counts[x] += 1
    if any(c != 1 for c in counts.values()):
        raise DecodingFailed(f"active sets do not cover every element exactly once: {counts}")
    return tuple(cover)


# ---------------------------------------------------------------------------
# Hamiltonian path (planar switching hardness)
# ---------------------------------------------------------------------------


def encode_hamiltonian(inst: HamiltonianInstance) -> EncodedInstance:
    """Unit-capacity switching encoding; value 2 iff an a-b Hamiltonian path exists.

    The graph is flanked by a generator H.s feeding a and a load H.t fed
    by b, plus a disjoint comparison chain of n+1 unit edges between the
    same terminals.  Serving 2 units congests both chains, which forces an
    angle spread only a spanning a-b path can supply on the graph side.
    """
    _check_hamiltonian(inst)
    n = len(inst.nodes)
    middle = [v for v in inst.nodes if v not in (inst.a, inst.b)]
    ordered = [inst.a, *middle, inst.b]
    assert len(ordered) == n
    nodes = [("H.s", NodeRole.GENERATOR), ("H.t", NodeRole.LOAD)]
    nodes += [(v, NodeRole.PLAIN) for v in ordered]
    nodes += [(f"H.p{i}", NodeRole.PLAIN) for i in range(1, n + 1)]
    edges = [fixed_edge(u, v, 1, 1) for u, v in inst.edges]
    edges.append(fixed_edge("H.s", inst.a, 1, 1))
    edges.append(fixed_edge(inst.b, "H.t", 1, 1))
    chain = ["H.s"] + [f"H.p{i}" for i in range(1, n + 1)] + ["H.t"]
    edges += [fixed_edge(u, v, 1, 1) for u, v in zip(chain, chain[1:])]
    return EncodedInstance(Network(nodes, edges), Fraction(2), KIND_HAMILTONIAN)


# ---------------------------------------------------------------------------
# Subset sum on a cactus
# ---------------------------------------------------------------------------


def _cactus_glue(inst: SubsetSumInstance) -> Network:
    w = inst.target
    n = len(inst.values)
    nodes = [("g", NodeRole.GENERATOR), ("l", NodeRole.LOAD)]
    nodes += [(f"v{i}", NodeRole.PLAIN) for i in range(1, n + 1)]
    edges = [
        fixed_edge("g", "l", 1, 2 + w),
        fixed_edge("g", "v1", 1, 1),
        fixed_edge("v1", "l", 1, w + 1),
    ]
    for i in range(1, n):
        edges.append(fixed_edge(f"v{i}", f"v{i + 1}", 1, w))
    return Network(nodes, edges)


def _encode_cactus(inst: SubsetSumInstance, gadget, per_unit: Rational, kind: str) -> EncodedInstance:
    _check_subset_sum(inst)
    net = _cactus_glue(inst)
    for i, x in enumerate(inst.values, start=1):
        net = network_sum(net, gadget(x, port=f"v{i}", polarity=Polarity.PORT, prefix=f"X{i}."))
    m = sum(inst.values)
    predicted = 3 + inst.target + per_unit * m
    return EncodedInstance(net, predicted, kind)


def encode_subset_sum_cactus_msf(inst: SubsetSumInstance) -> EncodedInstance:
    """Cactus switching encoding; predicted value 3 + w + 3m with m = sum(M)."""
    return _encode_cactus(inst, gsch, Fraction(3), KIND_CACTUS_MSF)


def encode_subset_sum_cactus_mff(inst: SubsetSumInstance) -> EncodedInstance:
    """Cactus FACTS encoding; predicted value 3 + w + 6.1m with m = sum(M)."""
    return _encode_cactus(inst, gfch, Fraction(61, 10), KIND_CACTUS_MFF)


# ---------------------------------------------------------------------------
# Subset sum on a two-level tree
# ---------------------------------------------------------------------------


def encode_subset_sum_tree(inst: SubsetSumInstance) -> EncodedInstance:
    """Two-level tree switching encoding; predicted value m + 2 + w, m = sum(M) - 1.

    Values are indexed a_2 .. a_n (n = |M| + 1) along a rigid chain
    a_1 .. a_{n+1} whose congestion pins angle(a_i) = i in any solution
    attaining the predicted value.  The distributor node p then feeds
    a_i through an edge of susceptance a_i / (i - 1) and capacity a_i,
    which is congested exactly at that angle; keeping the p--a_i edges of
    a subset V therefore drains exactly sum(V) out of p, and conservation
    at p holds iff sum(V) = w.
    """
    _check_subset_sum(inst)
    w = inst.target
    n = len(inst.values) + 1
    m = sum(inst.values) - 1

    nodes = [("g", NodeRole.GENERATOR), ("p", NodeRole.PLAIN), ("g1", NodeRole.PLAIN), (f"g{n + 1}", NodeRole.PLAIN)]
    nodes += [(f"a{i}", NodeRole.PLAIN) for i in range(1, n + 2)]
    nodes += [(f"l{i}", NodeRole.LOAD) for i in range(1, n + 2)]

    edges = []
    for i in range(2, n + 1):
        a_i = inst.values[i - 2]
        edges.append(fixed_edge("p", f"a{i}", Fraction(a_i, i - 1), a_i))
        edges.append(fixed_edge(f"a{i}", f"l{i}", 1, a_i))
    if m > 0:  # a zero-capacity chain is modeled by omitting its edges
        for i in range(1, n + 1):
            edges.append(fixed_edge(f"a{i}", f"a{i + 1}", m, m))
    edges += [
        fixed_edge("g", "g1", 2 * m + 2, m + 1),
        fixed_edge("g1", "a1", 2 * m + 2, m + 1),
        fixed_edge("a1", "l1", 1, 1),
        fixed_edge("g", "p", w, w),
        fixed_edge("g", f"g{n + 1}", Fraction(2, n + 1), 1),
        fixed_edge(f"g{n + 1}", f"a{n + 1}", Fraction(2, n + 1), 1),
        fixed_edge(f"a{n + 1}", f"l{n + 1}", 1, m + 1),
    ]
    return EncodedInstance(Network(nodes, edges), Fraction(m + 2 + w), KIND_TREE)


def witness_tree(inst: SubsetSumInstance, chosen: set[int]) -> tuple[SwitchSet, Solution]:
    """Explicit optimal configuration of the tree encoding for sum(V) = w.

    Switches off the p--a_i edges of the values outside V and assigns the
    congestion-forced angles; the result validates on the sub-network and
    generates exactly the predicted m + 2 + w.
    """
    _check_subset_sum(inst)
    if sum(chosen) != inst.target or not chosen <= set(inst.values):
        raise NotACertificate(f"{sorted(chosen)} does not certify target {inst.target}")
    enc = encode_subset_sum_tree(inst)
    net = enc.network
    n = len(inst.values) + 1
    m = sum(inst.values) - 1
    w = inst.target

    by_pair = {e.pair: e for e in net.edges}
    switched = frozenset(
        by_pair[tuple(sorted(("p", f"a{i}")))]
        for i in range(2, n + 1)
        if inst.values[i - 2] not in chosen
    )
    sub = subnetwork(net, switched)

    angle: dict[NodeId, Rational] = {
        "g": ZERO,
        "g1": Fraction(1, 2),
        f"g{n + 1}": Fraction(n + 1, 2),
        "p": ONE,
        "l1": Fraction(2),
        f"l{n + 1}": Fraction(n + 2 + m),
    }
    for i in range(1, n + 2):
        angle[f"a{i}"] = Fraction(i)
    for i in range(2, n + 1):
        a_i = inst.values[i - 2]
        angle[f"l{i}"] = Fraction(i + a_i) if a_i in chosen else Fraction(i)

    flow = {e: e.s_min * (angle[e.b] - angle[e.a]) for e in sub.edges}
    gen = {v: ZERO for v in sub.node_names}
    gen["g"] = Fraction(m + 2 + w)
    load = {v: ZERO for v in sub.node_names}
    load["l1"] = ONE
    load[f"l{n + 1}"] = Fraction(m + 1)
    for i in range(2, n + 1):
        a_i = inst.values[i - 2]
        load[f"l{i}"] = Fraction(a_i) if a_i in chosen else ZERO

    sol = Solution(
        susceptance={e: e.s_min for e in sub.edges},
        angle=angle,
        flow=flow,
        gen=gen,
        load=load,
    )
    return switched, sol


# ---------------------------------------------------------------------------
# Subset-sum decoding (cactus and tree)
# ---------------------------------------------------------------------------


def decode_subset_sum(outcome: MsfOutcome | MffOutcome, inst: SubsetSumInstance, kind: str) -> set[int]:
    """Extract the chosen subset V from an optimal outcome; sum(V) must be w."""
    _check_subset_sum(inst)
    if kind == KIND_TREE:
        enc = encode_subset_sum_tree(inst)
        if outcome.value != enc.predicted_value:
            raise NotOptimal(f"outcome value {outcome.value} is below the predicted {enc.predicted_value}")
        switched_pairs = {e.pair for e in outcome.switched}
        chosen = {
            inst.values[i - 2]
            for i in range(2, len(inst.values) + 2)
            if tuple(sorted(("p", f"a{i}"))) not in switched_pairs
        }
    elif kind in (KIND_CACTUS_MSF, KIND_CACTUS_MFF):
        enc = encode_subset_sum_cactus_msf(inst) if kind == KIND_CACTUS_MSF else encode_subset_sum_cactus_mff(inst)
        if outcome.value != enc.predicted_value:
            raise NotOptimal(f"outcome value {outcome.value} is below the predicted {enc.predicted_value}")
        chosen = set()
        for i, x in enumerate(inst.values, start=1):
            outflows = _port_outflows(enc, outcome.solution, f"v{i}", f"X{i}.")
            if sum(outflows.values(), ZERO) == x:
                chosen.add(x)
    else:
        raise InvalidInstance(f"unknown subset-sum encoding kind {kind!r}")
    if sum(chosen) != inst.target:
        raise DecodingFailed(f"extracted subset {sorted(chosen)} does not sum to {inst.target}")
    return chosen
