import random

import pytest

from specls.graph import build_graph, complete_graph, empty_graph
from specls.graph6 import Graph6Error, emit_graph6, parse_graph6


def random_graph(rng, n, p=0.5):
    return build_graph(
        n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    )


def test_known_encodings():
    # K4 header 'F'? no: n=4 -> chr(67)='C', bits 111111 -> 63+63=126='~'
    assert emit_graph6(complete_graph(4)) == "C~"
    assert emit_graph6(empty_graph(1)) == "@"
    assert emit_graph6(empty_graph(5)) == "D??"  # 'D' + 10 zero bits in 2 chars


def test_round_trip_random():
    rng = random.Random(9)
    for _ in range(300):
        g = random_graph(rng, rng.randrange(0, 20))
        s = emit_graph6(g)
        h = parse_graph6(s)
        assert h == g
        assert emit_graph6(h) == s


def test_round_trip_long_header():
    rng = random.Random(10)
    g = random_graph(rng, 70, 0.1)
    s = emit_graph6(g)
    assert s.startswith("~")
    assert parse_graph6(s) == g


def test_parse_rejects_bad_bytes():
    with pytest.raises(Graph6Error) as ei:
        parse_graph6("C~!")
    assert ei.value.offset == 2
    with pytest.raises(Graph6Error) as ei:
        parse_graph6("C0~")  # '0' is below the graph6 byte range
    assert ei.value.offset == 1


def test_parse_rejects_bad_length():
    with pytest.raises(Graph6Error):
        parse_graph6("C~~")  # one char too many for n=4
    with pytest.raises(Graph6Error):
        parse_graph6("C")  # missing body


def test_parse_rejects_set_padding():
    # n=3 needs 3 bits; set a padding bit below them
    bad = chr(3 + 63) + chr(63 + 0b000001)
    with pytest.raises(Graph6Error) as ei:
        parse_graph6(bad)
    assert "padding" in str(ei.value)


def test_parse_strips_newline():
    assert parse_graph6("C~\n") == complete_graph(4)


def test_empty_input():
    with pytest.raises(Graph6Error):
        parse_graph6("")


def test_short_string_style():
    g = parse_graph6("D?{")
    assert g.n == 5
    assert emit_graph6(g) == "D?{"
