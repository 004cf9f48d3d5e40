"""Atomic-tick double-entry ledger.

Balances are plain integers counting multiples of the quantum; the quantum
itself is exact metadata and only matters at I/O boundaries.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Mapping, Sequence, Union

from .errors import (
    DegenerateEventError,
    LedgerOverflowError,
    ReplayError,
    TopologyError,
    ValidationError,
)
from .flows import EdgeFlow
from .graph import RecognitionGraph

INT64_MIN = -(2**63)
INT64_MAX = 2**63 - 1


@dataclass(frozen=True)
class Quantum:
    """Posting unit delta = numerator/denominator, positive and reduced."""

    numerator: int = 1
    denominator: int = 1

    def __post_init__(self):
        if self.numerator < 1 or self.denominator < 1:
            raise ValidationError(f"quantum must be positive, got {self}")
        if gcd(self.numerator, self.denominator) != 1:
            raise ValidationError(f"quantum {self} is not in reduced form")

    @property
    def value(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)

    def amount(self, k: int) -> Fraction:
        """The exact quantity represented by k units."""
        return k * self.value

    def __str__(self):
        return f"{self.numerator}/{self.denominator}"


@dataclass(frozen=True)
class Empty:
    pass


EMPTY = Empty()


@dataclass(frozen=True)
class Post:
    """Move k units along u -> v: v is credited k, u is debited k."""

    u: object
    v: object
    k: int

    @property
    def edge(self):
        return (self.u, self.v)


Event = Union[Empty, Post]


@dataclass(frozen=True)
class LedgerState:
    balances: Mapping  # node -> int, every graph node present
    quantum: Quantum = field(default_factory=Quantum)

    @classmethod
    def zero(cls, g: RecognitionGraph, quantum: Quantum | None = None) -> "LedgerState":
        return cls({n: 0 for n in g.nodes}, quantum or Quantum())

    def __getitem__(self, node) -> int:
        return self.balances[node]

    def __eq__(self, other):
        if not isinstance(other, LedgerState):
            return NotImplemented
        return self.quantum == other.quantum and dict(self.balances) == dict(other.balances)

    def __hash__(self):
        return hash((self.quantum, frozenset(self.balances.items())))


@dataclass(frozen=True)
class Trace:
    """Initial state plus one event slot per tick; index = tick."""

    graph: RecognitionGraph
    quantum: Quantum
    initial: LedgerState
    events: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "events", tuple(self.events))
        if set(self.initial.balances) != set(self.graph.nodes):
            raise ValidationError("initial state must cover exactly the graph nodes")
        if self.initial.quantum != self.quantum:
            raise ValidationError("initial state quantum differs from trace quantum")

    def __len__(self):
        return len(self.events)


def _checked(x: int) -> int:
    if not INT64_MIN <= x <= INT64_MAX:
        raise LedgerOverflowError(f"balance {x} leaves the signed 64-bit range")
    return x


def _check_event(e: Event, g: RecognitionGraph, strict_unit: bool) -> None:
    if isinstance(e, Empty):
        return
    if not isinstance(e, Post):
        raise ValidationError(f"not an event: {e!r}")
    if not g.has_edge(e.u, e.v):
        raise TopologyError(f"edge {e.u!r}->{e.v!r} not in graph")
    if e.k == 0:
        raise DegenerateEventError(f"zero-magnitude posting on {e.u!r}->{e.v!r}")
    if strict_unit and abs(e.k) != 1:
        raise DegenerateEventError(f"strict-unit mode forbids magnitude {e.k}")
    _checked(e.k)


def apply_tick(s: LedgerState, e: Event, g: RecognitionGraph, strict_unit: bool = False) -> LedgerState:
    _check_event(e, g, strict_unit)
    if isinstance(e, Empty):
        return s
    b = dict(s.balances)
    b[e.u] = _checked(b[e.u] - e.k)
    b[e.v] = _checked(b[e.v] + e.k)
    return LedgerState(b, s.quantum)


def per_tick_increment(e: Event, g: RecognitionGraph, strict_unit: bool = False) -> EdgeFlow:
    _check_event(e, g, strict_unit)
    if isinstance(e, Empty):
        return EdgeFlow.zero(g)
    return EdgeFlow.from_directed(g, {(e.u, e.v): e.k})


def total_balance(s: LedgerState) -> int:
    return sum(s.balances.values())


def replay(t: Trace, strict_unit: bool = False) -> tuple[LedgerState, list[EdgeFlow]]:
    """Fold apply_tick over the trace; returns the final state and per-tick increments."""
    s = t.initial
    increments = []
    for tick, e in enumerate(t.events):
        try:
            increments.append(per_tick_increment(e, t.graph, strict_unit))
            s = apply_tick(s, e, t.graph, strict_unit)
        except (TopologyError, DegenerateEventError, LedgerOverflowError, ValidationError) as exc:
            raise ReplayError(tick, exc) from exc
    return s, increments


def states(t: Trace) -> list[LedgerState]:
    """Full state history S_0 .. S_T."""
    out = [t.initial]
    for e in t.events:
        out.append(apply_tick(out[-1], e, t.graph))
    return out


def make_trace(g: RecognitionGraph, events: Sequence[Event], quantum: Quantum | None = None,
               initial: Mapping | None = None) -> Trace:
    """Convenience constructor; missing initial balances default to zero."""
    quantum = quantum or Quantum()
    b = {n: 0 for n in g.nodes}
    for n, k in (initial or {}).items():
        if n not in b:
            raise ValidationError(f"initial balance for unknown node {n!r}")
        b[n] = _checked(int(k))
    return Trace(g, quantum, LedgerState(b, quantum), tuple(events))
