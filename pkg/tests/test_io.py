import random

import pytest

from factorkit.generators import complete_graph, cycle_graph, random_graph
from factorkit.graph import Graph
from factorkit.io import (
    decode_graph6,
    encode_graph6,
    from_dimacs,
    from_edge_list,
    read_graphs,
    to_dimacs,
    to_edge_list,
    write_graph,
)


def test_k4_encodes_to_hand_value():
    # Hand encoding: header chr(4+63) = 'C'; the six upper-triangle bits
    # (0,1),(0,2),(1,2),(0,3),(1,3),(2,3) are all 1 -> 0b111111 = 63,
    # 63 + 63 = 126 = '~'.
    assert encode_graph6(complete_graph(4)) == b"C~"


def test_decode_hand_value():
    assert decode_graph6(b"C~") == complete_graph(4)


def test_roundtrip_c4():
    g = cycle_graph(4)
    assert decode_graph6(encode_graph6(g)) == g


def test_roundtrip_small_random():
    rng = random.Random(42)
    for _ in range(300):
        n = rng.randint(0, 30)
        g = random_graph(n, rng.randint(0, n * (n - 1) // 2), rng)
        assert decode_graph6(encode_graph6(g)) == g


def test_roundtrip_boundary_and_long_format():
    rng = random.Random(8)
    for n in (61, 62, 63, 64, 100):
        g = random_graph(n, rng.randint(0, 3 * n), rng)
        data = encode_graph6(g)
        if n <= 62:
            assert data[0] == n + 63
        else:
            assert data[0] == 126
        assert decode_graph6(data) == g


def test_decode_accepts_census_prefix():
    assert decode_graph6(b">>graph6<<C~") == complete_graph(4)


def test_decode_rejects_malformed():
    with pytest.raises(ValueError, match="length mismatch"):
        decode_graph6(b"C~~")
    with pytest.raises(ValueError, match="length mismatch"):
        decode_graph6(b"C")
    with pytest.raises(ValueError, match="padding"):
        # n=3 needs 3 bits; set a nonzero bit inside the padding
        decode_graph6(bytes([3 + 63, 63 + 1]))
    with pytest.raises(ValueError, match="printable"):
        decode_graph6(b"C\x1f")
    with pytest.raises(ValueError, match="empty"):
        decode_graph6(b"")


def test_dimacs_roundtrip():
    g = cycle_graph(5)
    text = to_dimacs(g)
    assert text.splitlines()[0] == "p edge 5 5"
    assert "e 1 2" in text  # 1-indexed
    assert from_dimacs(text) == g


def test_dimacs_rejects_bad_input():
    with pytest.raises(ValueError, match="p edge"):
        from_dimacs("e 1 2\n")
    with pytest.raises(ValueError, match="promises"):
        from_dimacs("p edge 3 2\ne 1 2\n")
    with pytest.raises(ValueError, match="unrecognized"):
        from_dimacs("p edge 2 1\nq 1 2\n")


def test_edge_list_roundtrip():
    g = cycle_graph(6)
    assert from_edge_list(to_edge_list(g)) == g
    assert to_edge_list(Graph(3, ())) == "3\n"


def test_read_graphs_batch():
    text = write_graph(cycle_graph(4), "graph6") + write_graph(complete_graph(4), "graph6")
    graphs = read_graphs(text, "graph6")
    assert graphs == [cycle_graph(4), complete_graph(4)]


def test_graph6_matches_networkx():
    nx = pytest.importorskip("networkx")
    rng = random.Random(1234)
    for _ in range(40):
        n = rng.randint(1, 25)
        g = random_graph(n, rng.randint(0, n * (n - 1) // 2), rng)
        ours = encode_graph6(g)
        G = nx.Graph()
        G.add_nodes_from(range(n))
        G.add_edges_from(g.edges)
        theirs = nx.to_graph6_bytes(G, header=False).strip()
        assert ours == theirs
