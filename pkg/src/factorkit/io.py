"""Graph readers and writers: graph6, DIMACS edge format, plain edge lists.

graph6 is the interchange format used by graph census tools: a header byte
encoding n, then the upper triangle of the adjacency matrix in column-major
order (0,1),(0,2),(1,2),(0,3),... packed 6 bits per byte, each byte offset
by 63. Encoding and decoding are bit-exact round trips.
"""

from __future__ import annotations

from .graph import Graph

FORMATS = ("graph6", "dimacs", "edges")

_G6_PREFIX = b">>graph6<<"


def encode_graph6(g: Graph) -> bytes:
    """Encode a graph as one graph6 byte string (no trailing newline).

    Supports the one-byte header (n <= 62) and the four-byte long header
    (n <= 258047), which covers every graph this toolkit generates.
    """
    n = g.n
    if n <= 62:
        header = bytes([n + 63])
    elif n <= 258047:
        header = bytes([126, ((n >> 12) & 63) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63])
    else:
        raise ValueError(f"graph6 encoding supported up to n = 258047, got {n}")
    edge_set = g.edge_set()
    out = bytearray(header)
    group = 0
    nbits = 0
    for j in range(1, n):
        for i in range(j):
            group = (group << 1) | (1 if (i, j) in edge_set else 0)
            nbits += 1
            if nbits == 6:
                out.append(group + 63)
                group = 0
                nbits = 0
    if nbits:
        out.append((group << (6 - nbits)) + 63)
    return bytes(out)


def decode_graph6(data: bytes | str) -> Graph:
    """Decode one graph6 byte string (optionally prefixed ">>graph6<<")."""
    if isinstance(data, str):
        data = data.encode("ascii")
    data = data.strip()
    if data.startswith(_G6_PREFIX):
        data = data[len(_G6_PREFIX):]
    if not data:
        raise ValueError("empty graph6 string")
    if any(b < 63 or b > 126 for b in data):
        raise ValueError("graph6 byte outside the printable range 63..126")
    if data[0] == 126:
        if len(data) >= 2 and data[1] == 126:
            raise ValueError("graph6 eight-byte header (n > 258047) not supported")
        if len(data) < 4:
            raise ValueError("truncated graph6 long header")
        n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
        body = data[4:]
    else:
        n = data[0] - 63
        body = data[1:]
    nbits = n * (n - 1) // 2
    expected = (nbits + 5) // 6
    if len(body) != expected:
        raise ValueError(
            f"graph6 body length mismatch: expected {expected} bytes for n={n}, "
            f"got {len(body)}"
        )
    bits = 0
    for b in body:
        bits = (bits << 6) | (b - 63)
    total = 6 * len(body)
    if nbits < total and bits & ((1 << (total - nbits)) - 1):
        raise ValueError("graph6 trailing padding bits are not zero")
    edges = []
    pos = total
    for j in range(1, n):
        for i in range(j):
            pos -= 1
            if (bits >> pos) & 1:
                edges.append((i, j))
    return Graph(n, tuple(edges))


def to_dimacs(g: Graph) -> str:
    """DIMACS edge format: "p edge n m" then 1-indexed "e u v" lines."""
    lines = [f"p edge {g.n} {g.m}"]
    for u, v in g.edges:
        lines.append(f"e {u + 1} {v + 1}")
    return "\n".join(lines) + "\n"


def from_dimacs(text: str) -> Graph:
    n = None
    m = None
    pairs: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise ValueError(f"line {lineno}: duplicate problem line")
            if len(parts) != 4 or parts[1] != "edge":
                raise ValueError(f"line {lineno}: malformed problem line {line!r}")
            n, m = int(parts[2]), int(parts[3])
        elif parts[0] == "e":
            if len(parts) != 3:
                raise ValueError(f"line {lineno}: malformed edge line {line!r}")
            pairs.append((int(parts[1]) - 1, int(parts[2]) - 1))
        else:
            raise ValueError(f"line {lineno}: unrecognized line {line!r}")
    if n is None or m is None:
        raise ValueError("missing 'p edge n m' line")
    if len(pairs) != m:
        raise ValueError(f"problem line promises {m} edges, found {len(pairs)}")
    return Graph(n, tuple(pairs))


def to_edge_list(g: Graph) -> str:
    """Plain edge list: first line n, then one 0-indexed "u v" per line."""
    lines = [str(g.n)]
    for u, v in g.edges:
        lines.append(f"{u} {v}")
    return "\n".join(lines) + "\n"


def from_edge_list(text: str) -> Graph:
    lines = [line.strip() for line in text.splitlines()]
    lines = [line for line in lines if line]
    if not lines:
        raise ValueError("empty edge list")
    try:
        n = int(lines[0])
    except ValueError:
        raise ValueError(f"first edge-list line must be the vertex count, got {lines[0]!r}")
    pairs = []
    for line in lines[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"malformed edge-list line {line!r}")
        pairs.append((int(parts[0]), int(parts[1])))
    return Graph(n, tuple(pairs))


def write_graph(g: Graph, fmt: str) -> str:
    """Serialize in one of FORMATS; graph6 output is a single text line."""
    if fmt == "graph6":
        return encode_graph6(g).decode("ascii") + "\n"
    if fmt == "dimacs":
        return to_dimacs(g)
    if fmt == "edges":
        return to_edge_list(g)
    raise ValueError(f"unknown graph format {fmt!r}")


def read_graphs(text: str, fmt: str) -> list[Graph]:
    """Parse one or more graphs; graph6 input is one graph per line."""
    if fmt == "graph6":
        lines = [line for line in text.splitlines() if line.strip()]
        if not lines:
            raise ValueError("no graph6 lines in input")
        return [decode_graph6(line) for line in lines]
    if fmt == "dimacs":
        return [from_dimacs(text)]
    if fmt == "edges":
        return [from_edge_list(text)]
    raise ValueError(f"unknown graph format {fmt!r}")
