"""Recognition graphs: finite directed graphs closed under edge reversal.

Node labels must be hashable and mutually comparable; their order is the
tie-break for every traversal, so forests and cycle bases are reproducible.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Hashable, Iterable, Sequence

from .errors import ValidationError

NodeId = Hashable
Edge = tuple  # directed (u, v)
Cycle = tuple  # tuple of directed edges forming a closed walk


@dataclass(frozen=True)
class RecognitionGraph:
    nodes: tuple
    undirected: tuple  # sorted (u, v) pairs with u < v
    adjacency: dict = field(compare=False, repr=False)

    @property
    def edges(self) -> frozenset:
        """All directed edges, both orientations."""
        return frozenset(
            e for u, v in self.undirected for e in ((u, v), (v, u))
        )

    def has_edge(self, u, v) -> bool:
        return v in self.adjacency.get(u, ())

    def neighbors(self, u) -> tuple:
        return self.adjacency[u]

    def __contains__(self, node) -> bool:
        return node in self.adjacency

    def __hash__(self):
        return hash((self.nodes, self.undirected))

    def check_reversal_closure(self) -> bool:
        return all(self.has_edge(v, u) for u, v in self.edges)


def build_graph(nodes: Iterable[NodeId], undirected_edges: Iterable[tuple] = ()) -> RecognitionGraph:
    nodes = list(nodes)
    seen = set()
    for n in nodes:
        if n in seen:
            raise ValidationError(f"duplicate node {n!r}")
        seen.add(n)
    try:
        ordered = tuple(sorted(nodes))
    except TypeError as exc:
        raise ValidationError(f"node labels are not mutually ordered: {exc}") from None
    pairs = set()
    for u, v in undirected_edges:
        for x in (u, v):
            if x not in seen:
                raise ValidationError(f"unknown endpoint {x!r} in edge ({u!r}, {v!r})")
        if u == v:
            raise ValidationError(f"self-loop at {u!r}")
        pairs.add((u, v) if u < v else (v, u))
    adj = {n: [] for n in ordered}
    for u, v in pairs:
        adj[u].append(v)
        adj[v].append(u)
    adjacency = {n: tuple(sorted(vs)) for n, vs in adj.items()}
    return RecognitionGraph(ordered, tuple(sorted(pairs)), adjacency)


def components(g: RecognitionGraph) -> list[tuple]:
    """Connected components, each sorted, listed by smallest node."""
    seen = set()
    out = []
    for root in g.nodes:
        if root in seen:
            continue
        comp = []
        stack = [root]
        seen.add(root)
        while stack:
            u = stack.pop()
            comp.append(u)
            for v in g.neighbors(u):
                if v not in seen:
                    seen.add(v)
                    stack.append(v)
        out.append(tuple(sorted(comp)))
    return out


@dataclass(frozen=True)
class SpanningForest:
    graph: RecognitionGraph
    roots: tuple
    parent: dict  # node -> parent node; roots absent
    order: tuple  # BFS visitation order, roots first within their component
    depth: dict

    def tree_edges(self) -> frozenset:
        """Undirected tree edges as sorted pairs."""
        return frozenset((p, c) if p < c else (c, p) for c, p in self.parent.items())

    def root_of(self, node):
        while node in self.parent:
            node = self.parent[node]
        return node


def spanning_forest(g: RecognitionGraph) -> SpanningForest:
    """BFS from the smallest node of each component, neighbors ascending."""
    parent, depth, order, roots = {}, {}, [], []
    for root in g.nodes:
        if root in depth:
            continue
        roots.append(root)
        depth[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            order.append(u)
            for v in g.neighbors(u):
                if v not in depth:
                    depth[v] = depth[u] + 1
                    parent[v] = u
                    queue.append(v)
    return SpanningForest(g, tuple(roots), parent, tuple(order), depth)


def tree_path(f: SpanningForest, src, dst) -> list[Edge]:
    """Directed edges of the unique tree path src -> dst (same component)."""
    up, down = [], []
    a, b = src, dst
    while f.depth[a] > f.depth[b]:
        up.append((a, f.parent[a]))
        a = f.parent[a]
    while f.depth[b] > f.depth[a]:
        down.append((f.parent[b], b))
        b = f.parent[b]
    while a != b:
        if a not in f.parent or b not in f.parent:
            raise ValidationError(f"{src!r} and {dst!r} lie in different trees")
        up.append((a, f.parent[a]))
        down.append((f.parent[b], b))
        a, b = f.parent[a], f.parent[b]
    return up + down[::-1]


@dataclass(frozen=True)
class CycleBasis:
    graph: RecognitionGraph
    cycles: tuple  # one Cycle per non-tree edge, ordered by that edge
    chords: tuple  # the non-tree edge (u, v), u < v, that generates each cycle

    def __len__(self):
        return len(self.cycles)

    def __iter__(self):
        return iter(self.cycles)


def _check_forest(g: RecognitionGraph, f: SpanningForest) -> None:
    if f.graph != g or set(f.depth) != set(g.nodes):
        raise ValidationError("spanning forest does not cover this graph")
    for c, p in f.parent.items():
        if not g.has_edge(p, c):
            raise ValidationError(f"forest edge ({p!r}, {c!r}) is not in the graph")
    if len(f.parent) != len(g.nodes) - len(f.roots):
        raise ValidationError("forest has the wrong number of tree edges")


def fundamental_cycles(g: RecognitionGraph, f: SpanningForest | None = None) -> CycleBasis:
    """Fundamental cycle of each non-tree edge u -> v (u < v): the chord, then the tree path v -> u."""
    if f is None:
        f = spanning_forest(g)
    _check_forest(g, f)
    tree = f.tree_edges()
    cycles, chords = [], []
    for u, v in g.undirected:
        if (u, v) in tree:
            continue
        cycles.append(((u, v), *tree_path(f, v, u)))
        chords.append((u, v))
    return CycleBasis(g, tuple(cycles), tuple(chords))


def cycle_rank(g: RecognitionGraph) -> int:
    return len(g.undirected) - len(g.nodes) + len(components(g))


def walk_edges(vertices: Sequence) -> list[Edge]:
    """Consecutive vertex pairs of a vertex sequence."""
    return list(zip(vertices[:-1], vertices[1:]))
