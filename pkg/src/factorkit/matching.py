"""Maximum cardinality matching in general graphs (blossom contraction).

The algorithm grows an alternating BFS tree from each exposed vertex; an
edge joining two even-level vertices of the tree closes an odd cycle, which
is contracted by rebasing every cycle vertex onto the lowest common ancestor
of the two endpoints. O(V^3) worst case, entirely deterministic: vertices
are scanned in increasing id and the tree is grown in FIFO order.
"""

from __future__ import annotations

from collections import deque
from typing import Sequence


def maximum_matching(n: int, adj: Sequence[Sequence[int]]) -> list[int]:
    """Return mate[v] for a maximum matching; -1 marks exposed vertices.

    adj[v] lists the neighbors of v; the caller fixes the scan order (sorted
    neighbor lists give the reference deterministic behavior).
    """
    mate = [-1] * n
    # Greedy seed: cuts the number of augmentation phases substantially.
    for v in range(n):
        if mate[v] == -1:
            for u in adj[v]:
                if mate[u] == -1:
                    mate[v] = u
                    mate[u] = v
                    break

    parent = [-1] * n
    base = list(range(n))

    def lca(a: int, b: int) -> int:
        on_path = [False] * n
        x = base[a]
        while True:
            on_path[x] = True
            if mate[x] == -1:
                break
            x = base[parent[mate[x]]]
        y = base[b]
        while not on_path[y]:
            y = base[parent[mate[y]]]
        return y

    def mark_path(v: int, stop: int, child: int, in_blossom: list[bool]) -> None:
        while base[v] != stop:
            in_blossom[base[v]] = True
            in_blossom[base[mate[v]]] = True
            parent[v] = child
            child = mate[v]
            v = parent[mate[v]]

    def find_augmenting_path(root: int) -> int:
        for i in range(n):
            parent[i] = -1
            base[i] = i
        used = [False] * n
        used[root] = True
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for to in adj[v]:
                if base[v] == base[to] or mate[v] == to:
                    continue
                if to == root or (mate[to] != -1 and parent[mate[to]] != -1):
                    # Both endpoints are even: contract the blossom.
                    stop = lca(v, to)
                    in_blossom = [False] * n
                    mark_path(v, stop, to, in_blossom)
                    mark_path(to, stop, v, in_blossom)
                    for i in range(n):
                        if in_blossom[base[i]]:
                            base[i] = stop
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif parent[to] == -1:
                    parent[to] = v
                    if mate[to] == -1:
                        return to
                    used[mate[to]] = True
                    queue.append(mate[to])
        return -1

    for v in range(n):
        if mate[v] == -1:
            end = find_augmenting_path(v)
            while end != -1:
                prev = parent[end]
                next_end = mate[prev]
                mate[end] = prev
                mate[prev] = end
                end = next_end
    return mate


def matching_size(mate: Sequence[int]) -> int:
    return sum(1 for v, u in enumerate(mate) if u > v)


def is_perfect(mate: Sequence[int]) -> bool:
    return all(u != -1 for u in mate)
