"""Gray-code schedules on the hypercube Q_d and walk validation."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .errors import BoundsError, ValidationError
from .graph import RecognitionGraph, build_graph
from .ledger import Post, Quantum, Trace, make_trace

MAX_DIM = 24
GAP = 45
SYNC_PERIOD = 360


def _check_dim(d: int) -> None:
    if not 1 <= d <= MAX_DIM:
        raise BoundsError(f"dimension must be in 1..{MAX_DIM}, got {d}")


def gray_code(k: int, d: int) -> str:
    """k-th reflected Gray code word as a d-bit string, MSB first."""
    _check_dim(d)
    if not 0 <= k < 1 << d:
        raise BoundsError(f"index {k} out of range for d={d}")
    return format(k ^ (k >> 1), f"0{d}b")


@dataclass(frozen=True)
class Walk:
    d: int
    sequence: tuple

    def __post_init__(self):
        object.__setattr__(self, "sequence", tuple(self.sequence))

    def __len__(self):
        return len(self.sequence)


def gray_cycle(d: int) -> Walk:
    _check_dim(d)
    fmt = f"0{d}b"
    return Walk(d, tuple(format(k ^ (k >> 1), fmt) for k in range(1 << d)))


def minimal_period(d: int) -> int:
    _check_dim(d)
    return 1 << d


def hamming(a: str, b: str) -> int:
    return sum(x != y for x, y in zip(a, b))


@dataclass(frozen=True)
class WalkReport:
    atomic: bool
    complete: bool
    unique: bool
    period: int

    @property
    def valid(self) -> bool:
        return self.atomic and self.complete and self.unique


def _check_vertices(w: Walk) -> None:
    for i, v in enumerate(w.sequence):
        if len(v) != w.d or set(v) - {"0", "1"}:
            raise ValidationError(f"vertex {i} ({v!r}) is not a {w.d}-bit string")


def validate_walk(w: Walk, cyclic: bool = False) -> WalkReport:
    _check_vertices(w)
    seq = w.sequence
    steps = list(zip(seq, seq[1:]))
    if cyclic and seq:
        steps.append((seq[-1], seq[0]))
    atomic = all(hamming(a, b) == 1 for a, b in steps)
    distinct = set(seq)
    return WalkReport(
        atomic=atomic,
        complete=len(distinct) == 1 << w.d,
        unique=len(distinct) == len(seq),
        period=len(seq),
    )


def hypercube_graph(d: int) -> RecognitionGraph:
    _check_dim(d)
    fmt = f"0{d}b"
    nodes = [format(i, fmt) for i in range(1 << d)]
    edges = [
        (format(i, fmt), format(i | (1 << b), fmt))
        for i in range(1 << d)
        for b in range(d)
        if not i & (1 << b)
    ]
    return build_graph(nodes, edges)


def walk_to_trace(w: Walk, magnitude: int = 1, quantum: Quantum | None = None,
                  cyclic: bool = False) -> Trace:
    """Trace on Q_d whose tick t posts `magnitude` along v_t -> v_{t+1}.

    With cyclic=True the closing step v_{T-1} -> v_0 is included, giving T ticks.
    """
    _check_vertices(w)
    if magnitude == 0:
        raise ValidationError("magnitude must be nonzero")
    seq = list(w.sequence)
    steps = list(zip(seq, seq[1:]))
    if cyclic and len(seq) > 1:
        steps.append((seq[-1], seq[0]))
    for t, (a, b) in enumerate(steps):
        if hamming(a, b) != 1:
            raise ValidationError(f"step {t} ({a} -> {b}) is not a hypercube edge")
    g = hypercube_graph(w.d)
    return make_trace(g, [Post(a, b, magnitude) for a, b in steps], quantum)


@dataclass(frozen=True)
class ScanRow:
    d: int
    lcm: int
    passes_gap45: bool
    formula: int  # 2^max(d,3) * 45, the closed form asserted for lcm(2^d, 45)

    @property
    def formula_agrees(self) -> bool:
        return self.formula == self.lcm


def dimension_scan(d_max: int) -> list[ScanRow]:
    if d_max < 1:
        raise BoundsError(f"d_max must be >= 1, got {d_max}")
    rows = []
    for d in range(1, d_max + 1):
        lcm = math.lcm(1 << d, GAP)
        rows.append(ScanRow(d, lcm, lcm == SYNC_PERIOD, (1 << max(d, 3)) * GAP))
    return rows


def surviving_dimensions(rows: Sequence[ScanRow], assume_linking: bool = False) -> list[int]:
    """Dimensions passing the lcm test, intersected with d >= 3 when linking is assumed."""
    return [r.d for r in rows if r.passes_gap45 and (r.d >= 3 or not assume_linking)]
