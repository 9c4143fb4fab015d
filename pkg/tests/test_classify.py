from conftest import random_ldc_network, random_tree
from ldcflow.classify import is_cactus, is_connected, is_tree, max_degree
from ldcflow.gadgets import Polarity, gfch, gsch
from ldcflow.network import Network, NodeRole, fixed_edge

GEN, LOAD, PLAIN = NodeRole.GENERATOR, NodeRole.LOAD, NodeRole.PLAIN


def path3():
    return Network(
        [("a", GEN), ("b", PLAIN), ("c", LOAD)],
        [fixed_edge("a", "b", 1, 1), fixed_edge("b", "c", 1, 1)],
    )


def complete4():
    names = ["a", "b", "c", "d"]
    edges = [fixed_edge(u, v, 1, 1) for i, u in enumerate(names) for v in names[i + 1 :]]
    return Network([(v, PLAIN) for v in names], edges)


def test_path_is_tree():
    assert is_tree(path3())


def test_triangle_is_not_a_tree():
    assert not is_tree(gsch(1, "v", Polarity.MINUS))


def test_empty_network_is_tree_by_convention():
    assert is_tree(Network([], []))
    assert is_tree(Network([("a", PLAIN)], []))


def test_disconnected_forest_is_not_a_tree():
    n = Network([("a", PLAIN), ("b", PLAIN), ("c", PLAIN)], [fixed_edge("a", "b", 1, 1)])
    assert not is_tree(n)
    assert not is_connected(n)


def test_gadgets_are_cacti():
    assert is_cactus(gsch(1, "v", Polarity.MINUS))
    assert is_cactus(gfch(1, "v", Polarity.MINUS))


def test_complete_graph_is_not_a_cactus():
    assert not is_cactus(complete4())


def test_two_cycles_sharing_an_edge_is_not_a_cactus():
    edges = [
        fixed_edge("a", "b", 1, 1),
        fixed_edge("b", "c", 1, 1),
        fixed_edge("a", "c", 1, 1),
        fixed_edge("c", "d", 1, 1),
        fixed_edge("b", "d", 1, 1),
    ]
    n = Network([(v, PLAIN) for v in "abcd"], edges)
    assert not is_cactus(n)


def test_trees_are_cacti(rng):
    for _ in range(20):
        assert is_cactus(random_tree(rng))


def test_max_degree_examples():
    assert max_degree(gsch(1, "v", Polarity.MINUS)) == 2
    assert max_degree(gfch(1, "v", Polarity.MINUS)) == 4
    assert max_degree(Network([("a", PLAIN)], [])) == 0


def test_gfch_degree_four_sits_at_the_junction_node():
    n = gfch(1, "v", Polarity.MINUS)
    degree = {v: len(n.incident[v]) for v in n.node_names}
    assert degree["c"] == 4 and max(degree.values()) == 4


def test_classification_is_name_invariant(rng):
    for _ in range(10):
        n = random_ldc_network(rng, max_edges=7)
        mapping = {v: f"zz{i}" for i, v in enumerate(reversed(n.node_names))}
        renamed = Network(
            [(mapping[v], r) for v, r in n.nodes],
            [fixed_edge(mapping[e.a], mapping[e.b], e.s_min, e.cap) for e in n.edges],
        )
        assert is_cactus(renamed) == is_cactus(n)
        assert is_tree(renamed) == is_tree(n)
        assert max_degree(renamed) == max_degree(n)
