"""Simple undirected graphs on dense integer vertex ids.

Graph values are immutable after construction and safe to share between
threads; every operation in this module is a pure function of its inputs.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph on vertices 0..n-1.

    Edges are canonicalized to a sorted tuple of (u, v) pairs with u < v, so
    equal graphs compare and hash equal and serialized output is byte-stable.
    Construction rejects out-of-range endpoints, self-loops, and duplicate
    edges (in either orientation) instead of collapsing them silently.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    _adj: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError(f"vertex count must be nonnegative, got {self.n}")
        seen: set[tuple[int, int]] = set()
        canonical: list[tuple[int, int]] = []
        for pair in self.edges:
            u, v = int(pair[0]), int(pair[1])
            if not (0 <= u < self.n) or not (0 <= v < self.n):
                raise ValueError(
                    f"edge ({u}, {v}) has an endpoint outside 0..{self.n - 1}"
                )
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            edge = (u, v) if u < v else (v, u)
            if edge in seen:
                raise ValueError(f"duplicate edge {edge}")
            seen.add(edge)
            canonical.append(edge)
        canonical.sort()
        object.__setattr__(self, "edges", tuple(canonical))
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in canonical:
            adj[u].append(v)
            adj[v].append(u)
        object.__setattr__(self, "_adj", tuple(tuple(sorted(a)) for a in adj))

    @property
    def m(self) -> int:
        """Number of edges."""
        return len(self.edges)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def degrees(self) -> tuple[int, ...]:
        """Per-vertex degree profile; sums to 2*m."""
        return tuple(len(a) for a in self._adj)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u] if 0 <= u < self.n else False

    def edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.edges)


def from_edges(n: int, pairs: Iterable[Sequence[int]]) -> Graph:
    """Build a Graph from a vertex count and unordered vertex pairs."""
    return Graph(n, tuple((p[0], p[1]) for p in pairs))


def regularity(g: Graph) -> int | None:
    """Return r if every vertex has degree r, else None.

    The empty edge set on n >= 1 vertices is 0-regular; the graph on zero
    vertices has no degree and returns None.
    """
    if g.n == 0:
        return None
    degs = g.degrees()
    r = degs[0]
    return r if all(d == r for d in degs) else None


def connected_components(g: Graph) -> list[list[int]]:
    """Connected components as sorted vertex lists, ordered by least vertex."""
    seen = [False] * g.n
    comps: list[list[int]] = []
    for start in range(g.n):
        if seen[start]:
            continue
        seen[start] = True
        comp = [start]
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for w in g.neighbors(v):
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        comp.sort()
        comps.append(comp)
    return comps


def is_connected(g: Graph) -> bool:
    """True iff the graph has at most one connected component."""
    if g.n <= 1:
        return True
    return len(connected_components(g)) == 1


def edge_connectivity(g: Graph) -> int:
    """Minimum number of edges whose deletion disconnects the graph.

    Computed as the minimum over t != 0 of the unit-capacity max flow from
    vertex 0 to t; a disconnected graph has edge connectivity 0. Requires
    n >= 2.
    """
    if g.n < 2:
        raise ValueError("edge connectivity is defined for graphs with n >= 2")
    if not is_connected(g):
        return 0
    best = min(g.degrees())
    if best == 0:
        return 0
    for t in range(1, g.n):
        flow = _unit_max_flow(g, 0, t, cutoff=best)
        if flow < best:
            best = flow
            if best == 0:
                break
    return best


def _unit_max_flow(g: Graph, s: int, t: int, cutoff: int) -> int:
    # Undirected unit capacities: residual arcs only ever live on original
    # edges, so BFS can scan g's adjacency. Stops early at `cutoff`.
    residual: dict[tuple[int, int], int] = {}
    for u, v in g.edges:
        residual[(u, v)] = 1
        residual[(v, u)] = 1
    flow = 0
    while flow < cutoff:
        parent = [-1] * g.n
        parent[s] = s
        queue = deque([s])
        while queue and parent[t] == -1:
            v = queue.popleft()
            for w in g.neighbors(v):
                if parent[w] == -1 and residual[(v, w)] > 0:
                    parent[w] = v
                    queue.append(w)
        if parent[t] == -1:
            break
        v = t
        while v != s:
            u = parent[v]
            residual[(u, v)] -= 1
            residual[(v, u)] += 1
            v = u
        flow += 1
    return flow


def articulation_points(g: Graph) -> list[int]:
    """Cut vertices of the graph, ascending (iterative lowlink DFS)."""
    disc = [-1] * g.n
    low = [0] * g.n
    cut = [False] * g.n
    timer = 0
    for root in range(g.n):
        if disc[root] != -1:
            continue
        root_children = 0
        stack: list[tuple[int, int, int]] = [(root, -1, 0)]
        while stack:
            v, parent, idx = stack.pop()
            if idx == 0:
                disc[v] = low[v] = timer
                timer += 1
            nbrs = g.neighbors(v)
            if idx < len(nbrs):
                stack.append((v, parent, idx + 1))
                w = nbrs[idx]
                if w == parent:
                    continue
                if disc[w] != -1:
                    low[v] = min(low[v], disc[w])
                else:
                    if v == root:
                        root_children += 1
                    stack.append((w, v, 0))
            else:
                if parent != -1:
                    low[parent] = min(low[parent], low[v])
                    if parent != root and low[v] >= disc[parent]:
                        cut[parent] = True
        if root_children >= 2:
            cut[root] = True
    return [v for v in range(g.n) if cut[v]]


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
    """Induced subgraph relabeled to 0..k-1.

    Returns (subgraph, order) where order[i] is the original id of the new
    vertex i; vertices are taken in ascending original id order.
    """
    order = sorted(set(vertices))
    index = {v: i for i, v in enumerate(order)}
    edges = [
        (index[u], index[v]) for u, v in g.edges if u in index and v in index
    ]
    return Graph(len(order), tuple(edges)), order
