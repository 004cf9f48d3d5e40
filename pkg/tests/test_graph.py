import random
from collections import Counter

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ledgerkernel import ValidationError, build_graph, components, fundamental_cycles, spanning_forest
from ledgerkernel.graph import cycle_rank, tree_path

from conftest import EXAMPLE1_EDGES, random_connected_graph


def test_reversal_closure():
    g = build_graph("ab", [("a", "b")])
    assert g.edges == {("a", "b"), ("b", "a")}
    assert g.check_reversal_closure()


def test_example1_has_ten_directed_edges(example1_graph):
    assert len(example1_graph.edges) == 10
    assert example1_graph.check_reversal_closure()


@pytest.mark.parametrize("nodes, edges, needle", [
    ("a", [("a", "a")], "self-loop"),
    ("ab", [("a", "z")], "'z'"),
    (["a", "a"], [], "duplicate"),
])
def test_build_rejects(nodes, edges, needle):
    with pytest.raises(ValidationError, match=needle):
        build_graph(nodes, edges)


def test_components():
    assert components(build_graph("abcd", EXAMPLE1_EDGES)) == [tuple("abcd")]
    assert components(build_graph("ab")) == [("a",), ("b",)]
    assert components(build_graph("abc", [("a", "b")])) == [("a", "b"), ("c",)]
    assert components(build_graph("dcba", [("d", "c")])) == [("a",), ("b",), ("c", "d")]


def test_forest_example1(example1_graph):
    f = spanning_forest(example1_graph)
    assert f.roots == ("a",)
    assert f.parent == {"b": "a", "c": "a", "d": "a"}


def test_forest_path_and_singleton():
    f = spanning_forest(build_graph("abc", [("a", "b"), ("b", "c")]))
    assert f.parent == {"b": "a", "c": "b"}
    f = spanning_forest(build_graph("a"))
    assert f.roots == ("a",) and f.parent == {}


def test_triangle_cycle():
    g = build_graph("abc", [("a", "b"), ("b", "c"), ("a", "c")])
    basis = fundamental_cycles(g, spanning_forest(g))
    assert basis.cycles == ((("b", "c"), ("c", "a"), ("a", "b")),)


def test_tree_has_empty_basis():
    g = build_graph("abcd", [("a", "b"), ("b", "c"), ("b", "d")])
    assert len(fundamental_cycles(g)) == 0


def test_example1_basis(example1_graph):
    basis = fundamental_cycles(example1_graph)
    assert len(basis) == 2 == cycle_rank(example1_graph)


def test_mismatched_forest(example1_graph):
    other = build_graph("abcd", [("a", "b"), ("b", "c"), ("c", "d")])
    with pytest.raises(ValidationError):
        fundamental_cycles(example1_graph, spanning_forest(other))


def test_tree_path_across_components():
    g = build_graph("abcd", [("a", "b"), ("c", "d")])
    with pytest.raises(ValidationError):
        tree_path(spanning_forest(g), "a", "d")


@given(st.integers(1, 12), st.floats(0, 1), st.randoms(use_true_random=False))
def test_basis_size_and_closed_walks(n, p, rng):
    g = random_connected_graph(rng, n, p)
    # drop a few edges so some graphs are disconnected
    keep = [e for e in g.undirected if rng.random() > 0.2]
    g = build_graph(g.nodes, keep)
    basis = fundamental_cycles(g)
    assert len(basis) == len(g.undirected) - len(g.nodes) + len(components(g))
    for cyc in basis:
        assert all(g.has_edge(u, v) for u, v in cyc)
        net = Counter()
        for u, v in cyc:
            net[u] -= 1
            net[v] += 1
        assert all(c == 0 for c in net.values())
        inner = [u for u, _ in cyc]
        assert len(set(inner)) == len(inner)


@given(st.integers(1, 10), st.randoms(use_true_random=False))
def test_permuted_input_is_deterministic(n, rng):
    g = random_connected_graph(rng, n, 0.5)
    nodes, edges = list(g.nodes), [(v, u) if rng.random() < 0.5 else (u, v) for u, v in g.undirected]
    rng.shuffle(nodes)
    rng.shuffle(edges)
    h = build_graph(nodes, edges)
    assert h == g
    assert spanning_forest(h) == spanning_forest(g)
    assert fundamental_cycles(h).cycles == fundamental_cycles(g).cycles


def test_forest_is_bfs_and_acyclic():
    rng = random.Random(3)
    for _ in range(50):
        g = random_connected_graph(rng, rng.randint(1, 15), 0.3)
        f = spanning_forest(g)
        assert len(f.parent) == len(g.nodes) - len(f.roots)
        for c, p in f.parent.items():
            assert f.depth[c] == f.depth[p] + 1
            assert g.has_edge(p, c)
        assert set(f.roots) == {comp[0] for comp in components(g)}
