import random

import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from ledgerkernel import (
    EMPTY,
    EdgeFlow,
    Post,
    Quantum,
    TraceParseError,
    build_graph,
    emit_flow,
    emit_trace,
    emit_walk,
    gray_cycle,
    make_trace,
    parse_flow,
    parse_trace,
    parse_walk,
    walk_to_trace,
)
from ledgerkernel import traceio

from conftest import CORPUS, random_trace

HEAD = "ledger-trace v1\ndelta 1/1\nnode a\nnode b\nnode c\nnode d\nedge a b\nedge b c\nedge c d\nedge a d\nedge a c\n"


def test_example1_tick():
    t = parse_trace(HEAD + "tick 0 a b 1\n")
    assert t.events == (Post("a", "b", 1),)
    assert t.quantum == Quantum(1, 1)
    assert len(t.graph.edges) == 10


def test_header_only():
    t = parse_trace("ledger-trace v1\ndelta 3/7\n")
    assert t.events == () and t.initial.balances == {} and t.quantum == Quantum(3, 7)
    assert emit_trace(t) == "ledger-trace v1\ndelta 3/7\n"


def test_comments_blank_lines_and_crlf():
    text = "# leading comment\n\nledger-trace v1   # trailing\r\ndelta 1/2\nnode x\nnode y\nedge x y\ninit x 4\ntick 0 empty\ntick 1 y x -2\n"
    t = parse_trace(text)
    assert t.initial.balances == {"x": 4, "y": 0}
    assert t.events == (EMPTY, Post("y", "x", -2))


@pytest.mark.parametrize("body, code, line, col", [
    ("tick 0 a b 1\ntick 0 c d 1\n", traceio.E_DUP_TICK, 13, 6),
    ("tick 1 a b 1\n", traceio.E_TICK_GAP, 12, 6),
    ("tick 0 a z 1\n", traceio.E_UNKNOWN_NODE, 12, 10),
    ("tick 0 b d 1\n", traceio.E_UNKNOWN_EDGE, 12, 8),
    ("tick 0 a a 1\n", traceio.E_SELF_LOOP, 12, 10),
    ("tick 0 a b 0\n", traceio.E_ZERO_K, 12, 12),
    ("tick 0 a b x\n", traceio.E_INT, 12, 12),
    ("tick 0 a b 9223372036854775808\n", traceio.E_RANGE, 12, 12),
    ("tick 0 a b\n", traceio.E_ARITY, 12, 1),
    ("tick 0 a b 1 2 3\n", traceio.E_ARITY, 12, 14),
    ("tock 0\n", traceio.E_DIRECTIVE, 12, 1),
    ("node a\n", traceio.E_DUP_NODE, 12, 6),
    ("edge b a\n", traceio.E_DUP_EDGE, 12, 6),
    ("edge c c\n", traceio.E_SELF_LOOP, 12, 8),
    ("init a 1\ninit a 2\n", traceio.E_DUP_INIT, 13, 6),
    ("tick 0 empty\nnode e\n", traceio.E_ORDER, 13, 1),
    ("delta 1/1\n", traceio.E_DELTA_DUPLICATE, 12, 1),
])
def test_error_codes_and_positions(body, code, line, col):
    with pytest.raises(TraceParseError) as info:
        parse_trace(HEAD + body)
    assert (info.value.code, info.value.line, info.value.column) == (code, line, col)


@pytest.mark.parametrize("text, code", [
    ("", traceio.E_HEADER),
    ("ledger-trace v2\ndelta 1/1\n", traceio.E_VERSION),
    ("trace v1\n", traceio.E_HEADER),
    ("ledger-trace v1\n", traceio.E_DELTA_MISSING),
    ("ledger-trace v1\nnode a\n", traceio.E_DELTA_MISSING),
    ("ledger-trace v1\ndelta 2/4\n", traceio.E_DELTA_NOT_REDUCED),
    ("ledger-trace v1\ndelta 0/1\n", traceio.E_DELTA_NONPOSITIVE),
    ("ledger-trace v1\ndelta -1/2\n", traceio.E_DELTA_NONPOSITIVE),
    ("ledger-trace v1\ndelta 1/0\n", traceio.E_DELTA_NONPOSITIVE),
    ("ledger-trace v1\ndelta 0.5\n", traceio.E_DELTA_SYNTAX),
    (b"ledger-trace v1\ndelta 1/1\nnode \xff\n", traceio.E_ENCODING),
])
def test_document_errors(text, code):
    with pytest.raises(TraceParseError) as info:
        parse_trace(text)
    assert info.value.code == code
    assert info.value.line >= 1 and info.value.column >= 1


def test_encoding_error_position():
    with pytest.raises(TraceParseError) as info:
        parse_trace(b"ledger-trace v1\ndelta 1/1\nnode ab\xffc\n")
    assert (info.value.line, info.value.column) == (3, 8)


@pytest.mark.parametrize("name", sorted(p.name for p in CORPUS.glob("*.trace")))
def test_corpus_is_canonical(name, corpus):
    raw = corpus(name)
    t = parse_trace(raw)
    canon = emit_trace(t)
    assert parse_trace(canon) == t
    assert emit_trace(parse_trace(canon)) == canon


def test_gray3_golden(corpus):
    t = walk_to_trace(gray_cycle(3), 1, cyclic=True)
    assert emit_trace(t).encode() == corpus("gray3.trace")
    assert parse_trace(corpus("gray3.trace")) == t


def test_round_trip_random_traces():
    rng = random.Random(2024)
    for _ in range(500):
        t = random_trace(rng, max_nodes=10, max_ticks=60, labels=True)
        q = Quantum(*rng.choice([(1, 1), (1, 2), (3, 7), (22, 5)]))
        t = make_trace(t.graph, t.events, q, t.initial.balances)
        text = emit_trace(t)
        assert parse_trace(text) == t
        assert emit_trace(parse_trace(text)) == text


@given(st.binary(max_size=400))
@settings(max_examples=300)
def test_fuzz_bytes_never_crash(data):
    try:
        parse_trace(data)
    except TraceParseError as exc:
        assert exc.line >= 1 and exc.column >= 1


directive = st.sampled_from(["ledger-trace v1", "delta 1/1", "delta 2/4", "node a", "node b",
                             "edge a b", "edge a a", "init a 3", "tick 0 empty", "tick 0 a b 1",
                             "tick 1 b a -2", "tick 0 a b 0", "# c", "", "tick x", "node"])


@given(st.lists(directive, max_size=12))
@settings(max_examples=300, suppress_health_check=[HealthCheck.too_slow])
def test_fuzz_directive_soup(lines):
    try:
        t = parse_trace("\n".join(lines))
    except TraceParseError as exc:
        assert exc.line >= 1 and exc.column >= 1
    else:
        assert parse_trace(emit_trace(t)) == t


class TestWalkFiles:
    def test_round_trip(self, corpus):
        w = parse_walk(corpus("gray3.walk"))
        assert w == gray_cycle(3)
        assert emit_walk(w).encode() == corpus("gray3.walk")

    def test_headerless(self):
        w = parse_walk("00\n01\n\n11\n")
        assert w.d == 2 and w.sequence == ("00", "01", "11")

    @pytest.mark.parametrize("text, code, line, col", [
        ("# d=3\n000\n0a0\n", traceio.E_BITS, 3, 2),
        ("# d=3\n000\n00\n", traceio.E_WALK_DIM, 3, 1),
        ("", traceio.E_WALK_DIM, 1, 1),
        ("000\n# d=3\n", traceio.E_WALK_DIM, 2, 1),
        ("000 001\n", traceio.E_ARITY, 1, 5),
    ])
    def test_errors(self, text, code, line, col):
        with pytest.raises(TraceParseError) as info:
            parse_walk(text)
        assert (info.value.code, info.value.line, info.value.column) == (code, line, col)


class TestFlowFiles:
    def test_round_trip(self):
        g = build_graph("abcd", [("a", "b"), ("b", "c"), ("c", "d"), ("a", "d"), ("a", "c")])
        f = EdgeFlow.from_directed(g, {("a", "b"): 2, ("b", "c"): 1, ("c", "d"): -3, ("a", "c"): 3})
        text = emit_flow(f)
        assert parse_flow(text) == f
        assert "flow a b 2" in text.splitlines()

    def test_reverse_orientation(self):
        f = parse_flow("edge-flow v1\nnode a\nnode b\nedge a b\nflow b a 5\n")
        assert f[("a", "b")] == -5

    def test_duplicate_flow(self):
        with pytest.raises(TraceParseError) as info:
            parse_flow("edge-flow v1\nnode a\nnode b\nedge a b\nflow a b 1\nflow b a -1\n")
        assert info.value.code == traceio.E_DUP_FLOW and info.value.line == 6
