from __future__ import annotations

import random

import networkx as nx
import pytest

from tricrit.errors import GraphFormatError
from tricrit.graph import build_graph
from tricrit.graph6 import emit_graph6, parse_graph6


def test_bw_is_k3():
    g = parse_graph6("Bw")
    assert g.n == 3 and g.edges == ((0, 1), (0, 2), (1, 2))
    assert emit_graph6(g) == "Bw"


def test_header_variant():
    assert parse_graph6(">>graph6<<Bw").m == 3


def test_round_trip_fixtures(fx):
    for g in fx.values():
        assert parse_graph6(emit_graph6(g)).edges == g.edges


def test_against_reference_codec(fx):
    # networkx implements the same de-facto standard; byte-for-byte check
    rng = random.Random(11)
    pool = list(fx.values())
    for _ in range(50):
        n = rng.randint(1, 12)
        edges = [
            (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.4
        ]
        pool.append(build_graph(n, edges))
    for g in pool:
        gx = nx.Graph()
        gx.add_nodes_from(range(g.n))
        gx.add_edges_from(g.edges)
        ref = nx.to_graph6_bytes(gx, header=False).decode().strip()
        assert emit_graph6(g) == ref
        back = nx.from_graph6_bytes(emit_graph6(g).encode())
        assert sorted(back.edges()) == sorted(tuple(e) for e in g.edges)


def test_malformed_inputs():
    with pytest.raises(GraphFormatError):
        parse_graph6("")
    with pytest.raises(GraphFormatError):
        parse_graph6("B")  # truncated payload
    with pytest.raises(GraphFormatError):
        parse_graph6("Bww")  # overlong payload
    with pytest.raises(GraphFormatError):
        parse_graph6("B\x07")  # non-printable
    with pytest.raises(GraphFormatError):
        parse_graph6("~??")  # long form unsupported
    # padding bits must be zero: K2 payload with a stray bit
    with pytest.raises(GraphFormatError):
        parse_graph6("A" + chr(63 + 0b111111))
