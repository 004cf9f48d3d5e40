import random
from pathlib import Path

import pytest

from ledgerkernel import EMPTY, Post, build_graph, make_trace

CORPUS = Path(__file__).parent / "corpus"

_criteria: list[tuple[str, bool, str]] = []


@pytest.fixture
def criterion():
    """Record one acceptance line; printed in the terminal summary."""

    def record(name, passed, detail=""):
        _criteria.append((name, bool(passed), detail))
        return passed

    return record


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for name, passed, detail in _criteria:
        terminalreporter.write_line(f"[{'PASS' if passed else 'FAIL'}] {name}  {detail}".rstrip())


@pytest.fixture
def corpus():
    return lambda name: (CORPUS / name).read_bytes()


EXAMPLE1_EDGES = [("a", "b"), ("b", "c"), ("c", "d"), ("d", "a"), ("a", "c")]


@pytest.fixture
def example1_graph():
    return build_graph("abcd", EXAMPLE1_EDGES)


def random_connected_graph(rng: random.Random, n: int, p: float = 0.4, labels=None):
    """Random spanning tree plus each remaining pair with probability p."""
    nodes = list(labels or range(n))
    order = nodes[:]
    rng.shuffle(order)
    edges = set()
    for i in range(1, n):
        u, v = order[i], order[rng.randrange(i)]
        edges.add((min(u, v), max(u, v)))
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < p:
                edges.add((nodes[i], nodes[j]))
    return build_graph(nodes, sorted(edges))


def random_trace(rng: random.Random, max_nodes=12, max_ticks=200, labels=False):
    n = rng.randint(2, max_nodes)
    g = random_connected_graph(rng, n, rng.random() * 0.6,
                               labels=[f"n{i}" for i in range(n)] if labels else None)
    directed = sorted(g.edges)
    events = []
    for _ in range(rng.randint(0, max_ticks)):
        if rng.random() < 0.2:
            events.append(EMPTY)
        else:
            u, v = rng.choice(directed)
            k = rng.choice([-1, 1]) * rng.randint(1, 5)
            events.append(Post(u, v, k))
    init = {x: rng.randint(-50, 50) for x in g.nodes}
    return make_trace(g, events, initial=init)
