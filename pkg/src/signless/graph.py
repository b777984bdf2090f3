"""Simple undirected graphs stored as adjacency bit rows.

A :class:`Graph` is immutable. Row ``i`` of ``adj`` is an int whose bit ``j``
is set iff ``{i, j}`` is an edge. All operations return new graphs.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


class GraphError(ValueError):
    """Invalid vertex index, loop, or malformed construction request."""


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise GraphError(f"expected {self.n} rows, got {len(self.adj)}")
        full = (1 << self.n) - 1
        for i, row in enumerate(self.adj):
            if row & ~full or row >> i & 1:
                raise GraphError(f"row {i} has loop or out-of-range bits")
            r = row
            while r:
                low = r & -r
                j = low.bit_length() - 1
                if not self.adj[j] >> i & 1:
                    raise GraphError(f"asymmetric adjacency at ({i}, {j})")
                r ^= low

    @property
    def e(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def neighbors(self, v: int) -> list[int]:
        return _bits(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, sorted."""
        out = []
        for u, row in enumerate(self.adj):
            for v in _bits(row >> (u + 1)):
                out.append((u, u + 1 + v))
        return out

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise GraphError("relabel needs a permutation of range(n)")
        return from_edges(self.n, [(perm[u], perm[v]) for u, v in self.edges()])

    def subgraph(self, vertices: Sequence[int]) -> "Graph":
        """Induced subgraph; vertices renumbered in the given order."""
        index = {v: i for i, v in enumerate(vertices)}
        rows = []
        for v in vertices:
            row = 0
            for w in _bits(self.adj[v]):
                if w in index:
                    row |= 1 << index[w]
            rows.append(row)
        return Graph(len(vertices), tuple(rows))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"


@dataclass(frozen=True)
class GraphClass:
    """Cyclomatic classification; ``tag`` is tree/unicyclic/bicyclic/tricyclic/other."""
    tag: str
    cyclomatic: int


def _bits(x: int) -> list[int]:
    out = []
    while x:
        low = x & -x
        out.append(low.bit_length() - 1)
        x ^= low
    return out


def _iter_bits(x: int) -> Iterator[int]:
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    if n < 0:
        raise GraphError("vertex count must be nonnegative")
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise GraphError(f"loop at vertex {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def empty(n: int) -> Graph:
    return Graph(n, (0,) * n)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    shift = g.n
    return Graph(g.n + h.n, g.adj + tuple(row << shift for row in h.adj))


def delete_edges(g: Graph, edges: Iterable[tuple[int, int]]) -> Graph:
    rows = list(g.adj)
    for u, v in edges:
        if not (0 <= u < g.n and 0 <= v < g.n):
            raise GraphError(f"edge ({u}, {v}) out of range for n={g.n}")
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
    return Graph(g.n, tuple(rows))


def add_edges(g: Graph, edges: Iterable[tuple[int, int]]) -> Graph:
    return from_edges(g.n, g.edges() + list(edges))


def connect_one(g1: Graph, u: int, g2: Graph, v: int) -> Graph:
    """``g1 ~ g2``: disjoint union plus the bridge ``u``--``v``."""
    if not 0 <= u < g1.n or not 0 <= v < g2.n:
        raise GraphError("bridge endpoint out of range")
    union = disjoint_union(g1, g2)
    return add_edges(union, [(u, g1.n + v)])


def connect_two(g1: Graph, pair1: tuple[int, int], g2: Graph,
                pair2: tuple[int, int]) -> Graph:
    """``g1 ≈ g2``: insert edges ``pair1[0]--pair2[0]`` and ``pair1[1]--pair2[1]``."""
    (u1, u2), (v1, v2) = pair1, pair2
    if not all(0 <= x < g1.n for x in pair1) or not all(0 <= x < g2.n for x in pair2):
        raise GraphError("inserted edge endpoint out of range")
    if u1 == u2 and v1 == v2:
        raise GraphError("the two inserted edges coincide")
    union = disjoint_union(g1, g2)
    return add_edges(union, [(u1, g1.n + v1), (u2, g1.n + v2)])


def component_sets(g: Graph) -> list[list[int]]:
    seen = 0
    comps = []
    for s in range(g.n):
        if seen >> s & 1:
            continue
        comp = 1 << s
        frontier = 1 << s
        while frontier:
            nxt = 0
            for v in _iter_bits(frontier):
                nxt |= g.adj[v]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        comps.append(_bits(comp))
    return comps


def components(g: Graph) -> list[Graph]:
    return [g.subgraph(c) for c in component_sets(g)]


def is_connected(g: Graph) -> bool:
    return g.n > 0 and len(component_sets(g)) == 1


def is_bipartite(g: Graph) -> tuple[bool, list[int] | None]:
    """Returns ``(True, colouring)`` with colours in {0, 1}, or ``(False, None)``."""
    colour = [-1] * g.n
    for s in range(g.n):
        if colour[s] >= 0:
            continue
        colour[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in _iter_bits(g.adj[v]):
                if colour[w] < 0:
                    colour[w] = 1 - colour[v]
                    queue.append(w)
                elif colour[w] == colour[v]:
                    return False, None
    return True, colour


_TAGS = {0: "tree", 1: "unicyclic", 2: "bicyclic", 3: "tricyclic"}


def graph_class(g: Graph) -> GraphClass:
    c = len(component_sets(g))
    cyc = g.e - g.n + c
    if c == 1 and cyc in _TAGS:
        return GraphClass(_TAGS[cyc], cyc)
    return GraphClass("other", cyc)


def max_degree(g: Graph) -> int:
    return max(g.degrees(), default=0)


def min_degree(g: Graph) -> int:
    return min(g.degrees(), default=0)


def clique_number(g: Graph) -> int:
    """Maximum clique size by Bron–Kerbosch with Tomita pivoting and size pruning."""
    if g.n == 0:
        return 0
    adj = g.adj
    best = 1

    def expand(size: int, cand: int, excl: int):
        nonlocal best
        if not cand:
            if not excl and size > best:
                best = size
            return
        if size + cand.bit_count() <= best:
            return
        pivot = max(_iter_bits(cand | excl), key=lambda u: (cand & adj[u]).bit_count())
        for v in _bits(cand & ~adj[pivot]):
            expand(size + 1, cand & adj[v], excl & adj[v])
            cand &= ~(1 << v)
            excl |= 1 << v

    expand(0, (1 << g.n) - 1, 0)
    return best


def maximum_matching(g: Graph) -> list[tuple[int, int]]:
    """Maximum-cardinality matching via Edmonds' augmenting-path search with blossom
    contraction. Works on any simple graph."""
    n = g.n
    nbrs = [g.neighbors(v) for v in range(n)]
    mate = [-1] * n

    # greedy start
    for v in range(n):
        if mate[v] < 0:
            for w in nbrs[v]:
                if mate[w] < 0:
                    mate[v], mate[w] = w, v
                    break

    def augment_from(root: int) -> bool:
        parent = [-1] * n
        base = list(range(n))
        used = [False] * n
        used[root] = True
        queue = deque([root])

        def lca(a: int, b: int) -> int:
            seen = [False] * n
            while True:
                a = base[a]
                seen[a] = True
                if mate[a] < 0:
                    break
                a = parent[mate[a]]
            while True:
                b = base[b]
                if seen[b]:
                    return b
                b = parent[mate[b]]

        def mark_path(v: int, b: int, child: int, blossom: list[bool]):
            while base[v] != b:
                blossom[base[v]] = blossom[base[mate[v]]] = True
                parent[v] = child
                child = mate[v]
                v = parent[mate[v]]

        while queue:
            v = queue.popleft()
            for to in nbrs[v]:
                if base[v] == base[to] or mate[v] == to:
                    continue
                if to == root or (mate[to] >= 0 and parent[mate[to]] >= 0):
                    cur = lca(v, to)
                    blossom = [False] * n
                    mark_path(v, cur, to, blossom)
                    mark_path(to, cur, v, blossom)
                    for i in range(n):
                        if blossom[base[i]]:
                            base[i] = cur
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif parent[to] < 0:
                    parent[to] = v
                    if mate[to] < 0:
                        while to >= 0:
                            pv = parent[to]
                            nxt = mate[pv]
                            mate[to], mate[pv] = pv, to
                            to = nxt
                        return True
                    used[mate[to]] = True
                    queue.append(mate[to])
        return False

    for v in range(n):
        if mate[v] < 0:
            augment_from(v)
    return [(v, mate[v]) for v in range(n) if v < mate[v]]


def matching_number(g: Graph) -> int:
    return len(maximum_matching(g))
