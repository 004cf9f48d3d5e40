"""Edge flows (antisymmetric integer 1-cochains), clearing windows and cycle closure."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .errors import BoundsError, SizeError, TopologyError, ValidationError
from .graph import CycleBasis, RecognitionGraph, fundamental_cycles


@dataclass(frozen=True)
class EdgeFlow:
    """Integer flow on the directed edges of a graph, in units of the quantum.

    Only one orientation per undirected edge is stored (u -> v with u < v);
    the reverse reads back negated, so antisymmetry cannot be broken.
    """

    graph: RecognitionGraph
    values: Mapping = field(default_factory=dict)  # (u, v) with u < v -> nonzero int

    @classmethod
    def zero(cls, graph: RecognitionGraph) -> "EdgeFlow":
        return cls(graph, {})

    @classmethod
    def from_directed(cls, graph: RecognitionGraph, values: Mapping) -> "EdgeFlow":
        """Build from {(u, v): k}; giving both orientations requires them to agree."""
        out: dict = {}
        given: dict = {}
        for (u, v), k in values.items():
            if not graph.has_edge(u, v):
                raise TopologyError(f"edge {u!r}->{v!r} not in graph")
            if k != int(k):
                raise ValidationError(f"flow on {u!r}->{v!r} is not an integer: {k!r}")
            key, val = ((u, v), int(k)) if u < v else ((v, u), -int(k))
            if key in given and given[key] != val:
                raise ValidationError(f"flow on {u!r}-{v!r} is not antisymmetric")
            given[key] = val
            if val:
                out[key] = val
        return cls(graph, out)

    def value(self, u, v) -> int:
        if not self.graph.has_edge(u, v):
            raise TopologyError(f"edge {u!r}->{v!r} not in graph")
        if u < v:
            return self.values.get((u, v), 0)
        return -self.values.get((v, u), 0)

    def __getitem__(self, edge) -> int:
        return self.value(*edge)

    def directed_items(self):
        """All directed edges with their values, sorted, zeros included."""
        for u, v in self.graph.undirected:
            k = self.values.get((u, v), 0)
            yield (u, v), k
            yield (v, u), -k

    def __add__(self, other: "EdgeFlow") -> "EdgeFlow":
        if other.graph != self.graph:
            raise ValidationError("cannot add flows on different graphs")
        out = dict(self.values)
        for e, k in other.values.items():
            s = out.get(e, 0) + k
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return EdgeFlow(self.graph, out)

    def __eq__(self, other):
        if not isinstance(other, EdgeFlow):
            return NotImplemented
        return self.graph == other.graph and dict(self.values) == dict(other.values)

    def __hash__(self):
        return hash((self.graph, frozenset(self.values.items())))


@dataclass(frozen=True)
class Window:
    """Half-open tick interval [t0, t0 + length)."""

    t0: int
    length: int

    def __post_init__(self):
        if self.t0 < 0:
            raise BoundsError(f"window start must be >= 0, got {self.t0}")
        if self.length < 1:
            raise BoundsError(f"window length must be >= 1, got {self.length}")

    @property
    def end(self) -> int:
        return self.t0 + self.length


def accumulate(increments: Sequence[EdgeFlow], w: Window) -> EdgeFlow:
    if w.end > len(increments):
        raise BoundsError(
            f"window [{w.t0}, {w.end}) exceeds trace length {len(increments)}"
        )
    total: dict = {}
    graph = None
    for inc in increments[w.t0:w.end]:
        if graph is None:
            graph = inc.graph
        elif inc.graph != graph:
            raise ValidationError("increments live on different graphs")
        for e, k in inc.values.items():
            total[e] = total.get(e, 0) + k
    return EdgeFlow(graph, {e: k for e, k in total.items() if k})


def _signed_sum(f: EdgeFlow, edges: Iterable) -> int:
    return sum(f.value(u, v) for u, v in edges)


def cycle_flux(f: EdgeFlow, cycle: Sequence) -> int:
    """Signed sum of f along a directed cycle given as a sequence of edges."""
    cycle = list(cycle)
    for (_, v), (u, _) in zip(cycle, cycle[1:] + cycle[:1]):
        if v != u:
            raise ValidationError(f"cycle is not closed at {v!r} / {u!r}")
    return _signed_sum(f, cycle)


def path_sum(f: EdgeFlow, path: Sequence) -> int:
    path = list(path)
    for (_, v), (u, _) in zip(path, path[1:]):
        if v != u:
            raise ValidationError(f"broken path: {v!r} does not continue at {u!r}")
    return _signed_sum(f, path)


@dataclass(frozen=True)
class ClosureReport:
    closed: bool
    violations: tuple  # (cycle, flux) pairs, basis order


def check_cycle_closure(f: EdgeFlow, basis: CycleBasis | None = None) -> ClosureReport:
    if basis is None:
        basis = fundamental_cycles(f.graph)
    elif basis.graph != f.graph:
        raise ValidationError("cycle basis was built from a different graph")
    bad = []
    for cyc in basis.cycles:
        flux = cycle_flux(f, cyc)
        if flux:
            bad.append((cyc, flux))
    return ClosureReport(not bad, tuple(bad))


_DONE = object()


def check_path_independence_bruteforce(f: EdgeFlow, max_nodes: int = 10) -> bool:
    """Enumerate every simple directed path between every ordered node pair
    and check that all paths joining the same pair carry the same sum.

    Exponential; used as an oracle for cycle closure on small graphs.
    """
    g = f.graph
    if len(g.nodes) > max_nodes:
        raise SizeError(f"graph has {len(g.nodes)} nodes, oracle limit is {max_nodes}")
    for src in g.nodes:
        first: dict = {}
        on_path = {src}

        # explicit stack: (node, running sum, neighbor iterator)
        stack = [(src, 0, iter(g.neighbors(src)))]
        while stack:
            u, acc, it = stack[-1]
            nxt = next(it, _DONE)
            if nxt is _DONE:
                stack.pop()
                on_path.discard(u)
                continue
            if nxt in on_path:
                continue
            s = acc + f.value(u, nxt)
            if first.setdefault(nxt, s) != s:
                return False
            on_path.add(nxt)
            stack.append((nxt, s, iter(g.neighbors(nxt))))
    return True
