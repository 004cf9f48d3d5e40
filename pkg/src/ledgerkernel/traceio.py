"""Line-oriented text formats for traces, walks and flows.

Trace grammar (one directive per line, ``#`` starts a comment)::

    ledger-trace v1
    delta <p>/<q>
    node <id>
    edge <u> <v>
    init <node> <k>
    tick <t> empty
    tick <t> <u> <v> <k>

Every parse failure raises TraceParseError with a 1-based line and column
and one of the codes below.
"""
from __future__ import annotations

import re
from math import gcd
from typing import Iterator, Union

from .errors import TraceParseError, ValidationError
from .flows import EdgeFlow
from .graph import build_graph
from .ledger import EMPTY, INT64_MAX, INT64_MIN, Empty, LedgerState, Post, Quantum, Trace
from .scheduler import Walk

TRACE_HEADER = ("ledger-trace", "v1")
FLOW_HEADER = ("edge-flow", "v1")

# error codes
E_ENCODING = "encoding"
E_HEADER = "bad-header"
E_VERSION = "bad-version"
E_DIRECTIVE = "unknown-directive"
E_ARITY = "arity"
E_INT = "bad-integer"
E_RANGE = "int-range"
E_DELTA_SYNTAX = "delta-syntax"
E_DELTA_NONPOSITIVE = "delta-nonpositive"
E_DELTA_NOT_REDUCED = "delta-not-reduced"
E_DELTA_MISSING = "delta-missing"
E_DELTA_DUPLICATE = "delta-duplicate"
E_ORDER = "directive-order"
E_DUP_NODE = "duplicate-node"
E_UNKNOWN_NODE = "unknown-node"
E_SELF_LOOP = "self-loop"
E_DUP_EDGE = "duplicate-edge"
E_UNKNOWN_EDGE = "unknown-edge"
E_DUP_INIT = "duplicate-init"
E_ZERO_K = "zero-magnitude"
E_DUP_TICK = "duplicate-tick"
E_TICK_GAP = "tick-gap"
E_DUP_FLOW = "duplicate-flow"
E_BITS = "bad-bitstring"
E_WALK_DIM = "walk-dimension"

_INT = re.compile(r"[+-]?[0-9]+\Z", re.ASCII)
_UINT = re.compile(r"[0-9]+\Z", re.ASCII)
_DELTA = re.compile(r"([+-]?[0-9]+)/([+-]?[0-9]+)\Z", re.ASCII)
_DIM_HEADER = re.compile(r"#\s*d\s*=\s*([0-9]+)\s*\Z", re.ASCII)

Text = Union[str, bytes, bytearray]


def _decode(text: Text) -> str:
    if isinstance(text, str):
        return text
    try:
        return bytes(text).decode("utf-8")
    except UnicodeDecodeError as exc:
        head = bytes(text)[: exc.start]
        line = head.count(b"\n") + 1
        col = len(head) - (head.rfind(b"\n") + 1) + 1
        raise TraceParseError(line, col, E_ENCODING, "invalid UTF-8") from None


def _lines(text: str) -> Iterator[tuple[int, list[tuple[int, str]]]]:
    """Yield (line number, [(column, token), ...]) for non-blank lines, comments stripped."""
    for lineno, raw in enumerate(text.split("\n"), start=1):
        if raw.endswith("\r"):
            raw = raw[:-1]
        cut = raw.find("#")
        if cut >= 0:
            raw = raw[:cut]
        tokens = [(m.start() + 1, m.group()) for m in re.finditer(r"[^ \t\r]+", raw)]
        if tokens:
            yield lineno, tokens


class _Line:
    def __init__(self, lineno, tokens):
        self.lineno = lineno
        self.tokens = tokens

    def error(self, idx, code, msg):
        col = self.tokens[min(idx, len(self.tokens) - 1)][0] if self.tokens else 1
        return TraceParseError(self.lineno, col, code, msg)

    def arity(self, *counts):
        if len(self.tokens) not in counts:
            want = " or ".join(str(c - 1) for c in counts)
            raise self.error(max(counts) if len(self.tokens) > max(counts) else 0,
                             E_ARITY, f"{self.tokens[0][1]} takes {want} argument(s)")

    def tok(self, idx):
        return self.tokens[idx][1]

    def integer(self, idx, pattern=_INT):
        s = self.tok(idx)
        if not pattern.match(s):
            raise self.error(idx, E_INT, f"expected an integer, got {s!r}")
        k = int(s)
        if not INT64_MIN <= k <= INT64_MAX:
            raise self.error(idx, E_RANGE, f"{s} is outside the signed 64-bit range")
        return k


def _header(lines, expected):
    first = next(lines, None)
    if first is None:
        raise TraceParseError(1, 1, E_HEADER, f"missing '{' '.join(expected)}' header")
    ln = _Line(*first)
    if ln.tok(0) != expected[0]:
        raise ln.error(0, E_HEADER, f"expected '{' '.join(expected)}' header")
    ln.arity(2)
    if ln.tok(1) != expected[1]:
        raise ln.error(1, E_VERSION, f"unsupported version {ln.tok(1)!r}")


def parse_trace(text: Text) -> Trace:
    lines = _lines(_decode(text))
    _header(lines, TRACE_HEADER)
    quantum = None
    nodes: list = []
    node_set: set = set()
    edges: dict = {}
    init: dict = {}
    events: list = []
    last_line = 1

    def need_node(ln, idx):
        n = ln.tok(idx)
        if n not in node_set:
            raise ln.error(idx, E_UNKNOWN_NODE, f"node {n!r} was not declared")
        return n

    for lineno, tokens in lines:
        ln = _Line(lineno, tokens)
        last_line = lineno
        kind = ln.tok(0)
        if kind not in ("delta", "node", "edge", "init", "tick"):
            raise ln.error(0, E_DIRECTIVE, f"unknown directive {kind!r}")
        if kind == "delta":
            if quantum is not None:
                raise ln.error(0, E_DELTA_DUPLICATE, "delta given twice")
            ln.arity(2)
            m = _DELTA.match(ln.tok(1))
            if not m:
                raise ln.error(1, E_DELTA_SYNTAX, "delta must be written p/q")
            p, q = int(m.group(1)), int(m.group(2))
            if p <= 0 or q <= 0:
                raise ln.error(1, E_DELTA_NONPOSITIVE, "delta must be positive with positive denominator")
            if gcd(p, q) != 1:
                raise ln.error(1, E_DELTA_NOT_REDUCED, f"{p}/{q} is not in lowest terms")
            quantum = Quantum(p, q)
            continue
        if quantum is None:
            raise ln.error(0, E_DELTA_MISSING, "delta must precede all other directives")
        if kind in ("node", "edge", "init") and events:
            raise ln.error(0, E_ORDER, f"{kind} after the first tick")
        if kind == "node":
            ln.arity(2)
            n = ln.tok(1)
            if n in node_set:
                raise ln.error(1, E_DUP_NODE, f"node {n!r} declared twice")
            nodes.append(n)
            node_set.add(n)
        elif kind == "edge":
            ln.arity(3)
            u, v = need_node(ln, 1), need_node(ln, 2)
            if u == v:
                raise ln.error(2, E_SELF_LOOP, f"self-loop at {u!r}")
            key = (u, v) if u < v else (v, u)
            if key in edges:
                raise ln.error(1, E_DUP_EDGE, f"edge {u}-{v} declared twice")
            edges[key] = True
        elif kind == "init":
            ln.arity(3)
            n = need_node(ln, 1)
            if n in init:
                raise ln.error(1, E_DUP_INIT, f"initial balance of {n!r} given twice")
            init[n] = ln.integer(2)
        else:
            ln.arity(3, 5)
            t = ln.integer(1, _UINT)
            if t < len(events):
                raise ln.error(1, E_DUP_TICK, f"tick {t} already given")
            if t > len(events):
                raise ln.error(1, E_TICK_GAP, f"expected tick {len(events)}, got {t}")
            if len(tokens) == 3:
                if ln.tok(2) != "empty":
                    raise ln.error(2, E_ARITY, "expected 'empty' or '<u> <v> <k>'")
                events.append(EMPTY)
                continue
            u, v = need_node(ln, 2), need_node(ln, 3)
            if u == v:
                raise ln.error(3, E_SELF_LOOP, f"self-loop at {u!r}")
            if (min(u, v), max(u, v)) not in edges:
                raise ln.error(2, E_UNKNOWN_EDGE, f"edge {u}-{v} was not declared")
            k = ln.integer(4)
            if k == 0:
                raise ln.error(4, E_ZERO_K, "posting magnitude must be nonzero")
            events.append(Post(u, v, k))

    if quantum is None:
        raise TraceParseError(last_line + 1, 1, E_DELTA_MISSING, "no delta directive")
    g = build_graph(nodes, list(edges))
    balances = {n: init.get(n, 0) for n in g.nodes}
    return Trace(g, quantum, LedgerState(balances, quantum), tuple(events))


def _node_token(n) -> str:
    s = str(n)
    if not s or any(c in s for c in " \t\r\n#"):
        raise ValidationError(f"node id {n!r} cannot be written as a single token")
    return s


def emit_trace(t: Trace) -> str:
    """Canonical text of a trace; parse_trace(emit_trace(t)) == t for string node ids."""
    out = [" ".join(TRACE_HEADER), f"delta {t.quantum.numerator}/{t.quantum.denominator}"]
    out += [f"node {_node_token(n)}" for n in t.graph.nodes]
    out += [f"edge {_node_token(u)} {_node_token(v)}" for u, v in t.graph.undirected]
    out += [f"init {_node_token(n)} {t.initial.balances[n]}"
            for n in t.graph.nodes if t.initial.balances[n]]
    for tick, e in enumerate(t.events):
        if isinstance(e, Empty):
            out.append(f"tick {tick} empty")
        else:
            out.append(f"tick {tick} {_node_token(e.u)} {_node_token(e.v)} {e.k}")
    return "\n".join(out) + "\n"


def parse_walk(text: Text) -> Walk:
    """One bitstring per line, optional leading ``# d=<n>`` header."""
    d = None
    seq = []
    for lineno, raw in enumerate(_decode(text).split("\n"), start=1):
        raw = raw.rstrip("\r")
        stripped = raw.strip()
        m = _DIM_HEADER.match(stripped)
        if m:
            if d is not None or seq:
                raise TraceParseError(lineno, 1, E_WALK_DIM, "dimension header must come first")
            d = int(m.group(1))
            continue
        cut = raw.find("#")
        if cut >= 0:
            raw = raw[:cut]
        tokens = [(m.start() + 1, m.group()) for m in re.finditer(r"[^ \t\r]+", raw)]
        if not tokens:
            continue
        ln = _Line(lineno, tokens)
        if len(tokens) != 1:
            raise ln.error(1, E_ARITY, "one bitstring per line")
        col, bits = tokens[0]
        bad = next((i for i, c in enumerate(bits) if c not in "01"), None)
        if bad is not None:
            raise TraceParseError(lineno, col + bad, E_BITS, f"non-binary character {bits[bad]!r}")
        if d is None:
            d = len(bits)
        if len(bits) != d:
            raise TraceParseError(lineno, col, E_WALK_DIM, f"expected {d} bits, got {len(bits)}")
        seq.append(bits)
    if d is None or d < 1:
        raise TraceParseError(1, 1, E_WALK_DIM, "walk dimension unknown or zero")
    return Walk(d, tuple(seq))


def emit_walk(w: Walk) -> str:
    return "\n".join([f"# d={w.d}", *w.sequence]) + "\n"


def parse_flow(text: Text) -> EdgeFlow:
    lines = _lines(_decode(text))
    _header(lines, FLOW_HEADER)
    nodes, node_set, edges, values = [], set(), {}, {}
    for lineno, tokens in lines:
        ln = _Line(lineno, tokens)
        kind = ln.tok(0)
        if kind == "node":
            ln.arity(2)
            n = ln.tok(1)
            if n in node_set:
                raise ln.error(1, E_DUP_NODE, f"node {n!r} declared twice")
            nodes.append(n)
            node_set.add(n)
            continue
        if kind not in ("edge", "flow"):
            raise ln.error(0, E_DIRECTIVE, f"unknown directive {kind!r}")
        ln.arity(3 if kind == "edge" else 4)
        for i in (1, 2):
            if ln.tok(i) not in node_set:
                raise ln.error(i, E_UNKNOWN_NODE, f"node {ln.tok(i)!r} was not declared")
        u, v = ln.tok(1), ln.tok(2)
        if u == v:
            raise ln.error(2, E_SELF_LOOP, f"self-loop at {u!r}")
        key = (u, v) if u < v else (v, u)
        if kind == "edge":
            if key in edges:
                raise ln.error(1, E_DUP_EDGE, f"edge {u}-{v} declared twice")
            edges[key] = True
        else:
            if key not in edges:
                raise ln.error(1, E_UNKNOWN_EDGE, f"edge {u}-{v} was not declared")
            if key in values:
                raise ln.error(1, E_DUP_FLOW, f"flow on {u}-{v} given twice")
            k = ln.integer(3)
            values[key] = k if key == (u, v) else -k
    g = build_graph(nodes, list(edges))
    return EdgeFlow(g, {e: k for e, k in values.items() if k})


def emit_flow(f: EdgeFlow) -> str:
    g = f.graph
    out = [" ".join(FLOW_HEADER)]
    out += [f"node {_node_token(n)}" for n in g.nodes]
    out += [f"edge {_node_token(u)} {_node_token(v)}" for u, v in g.undirected]
    out += [f"flow {_node_token(u)} {_node_token(v)} {f.values[(u, v)]}"
            for u, v in g.undirected if f.values.get((u, v))]
    return "\n".join(out) + "\n"
