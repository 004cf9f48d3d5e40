"""Scalar potentials of closed flows via spanning-tree path sums."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import ClosureError, ValidationError
from .flows import EdgeFlow, cycle_flux
from .graph import RecognitionGraph, fundamental_cycles, spanning_forest


@dataclass(frozen=True)
class Potential:
    values: Mapping  # node -> int
    roots: tuple = ()  # gauge-fixed roots (value 0), one per component

    def __getitem__(self, node) -> int:
        return self.values[node]

    def shifted(self, c: int) -> "Potential":
        return Potential({n: p + c for n, p in self.values.items()}, ())

    def __eq__(self, other):
        if not isinstance(other, Potential):
            return NotImplemented
        return dict(self.values) == dict(other.values)

    def __hash__(self):
        return hash(frozenset(self.values.items()))


def solve_potential(f: EdgeFlow) -> Potential:
    """Potential p with f(u->v) = p(v) - p(u), p = 0 at each component's smallest node.

    Raises ClosureError naming the first fundamental cycle (basis order)
    whose flux is nonzero.
    """
    g = f.graph
    forest = spanning_forest(g)
    p = {}
    for node in forest.order:
        if node in forest.parent:
            par = forest.parent[node]
            p[node] = p[par] + f.value(par, node)
        else:
            p[node] = 0
    basis = fundamental_cycles(g, forest)
    for (u, v), cyc in zip(basis.chords, basis.cycles):
        if f.value(u, v) != p[v] - p[u]:
            raise ClosureError(cyc, cycle_flux(f, cyc))
    return Potential(p, forest.roots)


def gradient(p, g: RecognitionGraph) -> EdgeFlow:
    """Discrete gradient: (u -> v) maps to p(v) - p(u)."""
    values = p.values if isinstance(p, Potential) else p
    missing = [n for n in g.nodes if n not in values]
    if missing:
        raise ValidationError(f"potential is undefined at {missing[0]!r}")
    out = {}
    for u, v in g.undirected:
        d = values[v] - values[u]
        if d:
            out[(u, v)] = d
    return EdgeFlow(g, out)


def differ_by_constant(p1, p2, component: Iterable) -> bool:
    a = p1.values if isinstance(p1, Potential) else p1
    b = p2.values if isinstance(p2, Potential) else p2
    component = list(component)
    for n in component:
        if n not in a or n not in b:
            raise ValidationError(f"node {n!r} not covered by both potentials")
    return len({a[n] - b[n] for n in component}) <= 1
