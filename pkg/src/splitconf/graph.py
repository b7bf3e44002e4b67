"""Undirected simple graphs with bitset adjacency, plus metric primitives.

Vertices are ``0..N-1``.  Each vertex carries its neighbourhood both as a
sorted tuple and as an ``int`` bitmask, which keeps distance-2 tests and
component sweeps cheap on the small graphs this package deals with.
"""
from __future__ import annotations

import enum
from collections import deque
from itertools import combinations
from typing import Iterable, Sequence


class _Infinite(enum.Enum):
    INFINITE = "INFINITE"

    def __repr__(self) -> str:
        return "INFINITE"

    def __str__(self) -> str:
        return "inf"


INFINITE = _Infinite.INFINITE


def bits(mask: int) -> Iterable[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Graph:
    """Immutable undirected simple graph.

    ``labels`` optionally names the vertices (used by text output and DOT
    export); it never affects structure.
    """

    __slots__ = ("n", "edges", "adj", "nbr", "labels")

    def __init__(self, n: int, edges: Iterable[Sequence[int]], labels: Sequence[str] | None = None):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        es = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for {n} vertices")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            es.add((u, v) if u < v else (v, u))
        nbr = [0] * n
        for u, v in es:
            nbr[u] |= 1 << v
            nbr[v] |= 1 << u
        self.n = n
        self.edges: tuple[tuple[int, int], ...] = tuple(sorted(es))
        self.nbr: tuple[int, ...] = tuple(nbr)
        self.adj: tuple[tuple[int, ...], ...] = tuple(tuple(bits(m)) for m in nbr)
        if labels is not None and len(labels) != n:
            raise ValueError("labels must name every vertex")
        self.labels = tuple(labels) if labels is not None else None

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={len(self.edges)})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    @property
    def all_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.nbr[u] >> v & 1)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def is_regular(self, k: int | None = None) -> bool:
        degs = {len(a) for a in self.adj}
        if not degs:
            return True
        return len(degs) == 1 and (k is None or degs == {k})

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Graph with vertex ``v`` renamed ``perm[v]``."""
        return Graph(self.n, ((perm[u], perm[v]) for u, v in self.edges))

    def complement(self) -> Graph:
        return Graph(self.n, ((u, v) for u, v in combinations(range(self.n), 2) if not self.has_edge(u, v)))

    def induced(self, vertices: Iterable[int]) -> Graph:
        """Induced subgraph, vertices renumbered in increasing order."""
        vs = sorted(set(vertices))
        pos = {v: i for i, v in enumerate(vs)}
        return Graph(len(vs), ((pos[u], pos[v]) for u, v in self.edges if u in pos and v in pos))

    def remove(self, vertices: Iterable[int]) -> Graph:
        gone = set(vertices)
        return self.induced(v for v in range(self.n) if v not in gone)

    def to_dot(self, name: str = "G") -> str:
        lines = [f"graph {name} {{"]
        for v in range(self.n):
            lines.append(f'  {v} [label="{self.label(v)}"];')
        for u, v in self.edges:
            lines.append(f"  {u} -- {v};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def reach(g: Graph, start: int, within: int) -> int:
    """Mask of vertices reachable from ``start`` inside the vertex mask ``within``."""
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= g.nbr[v]
        nxt &= within & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def component_masks(g: Graph, within: int | None = None) -> list[int]:
    """Connected components of the subgraph induced by ``within``, as masks."""
    rest = g.all_mask if within is None else within
    out = []
    while rest:
        v = (rest & -rest).bit_length() - 1
        comp = reach(g, v, rest)
        out.append(comp)
        rest &= ~comp
    return out


def connected_components(g: Graph, removed: Iterable[int] = ()) -> list[list[int]]:
    """Components of ``g`` minus ``removed``, each sorted, ordered by smallest vertex."""
    within = g.all_mask & ~mask_of(removed)
    return [list(bits(c)) for c in component_masks(g, within)]


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or reach(g, 0, g.all_mask) == g.all_mask


def bfs_distances(g: Graph, source: int) -> list[int]:
    """Distances from ``source``; unreachable vertices get -1."""
    dist = [-1] * g.n
    dist[source] = 0
    q = deque([source])
    while q:
        u = q.popleft()
        for w in g.adj[u]:
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                q.append(w)
    return dist


def girth(g: Graph) -> int | _Infinite:
    """Length of a shortest cycle, by a BFS from every vertex."""
    best = None
    for s in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[s] = 0
        q = deque([s])
        while q:
            u = q.popleft()
            if best is not None and 2 * dist[u] + 1 >= best:
                break
            for w in g.adj[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    q.append(w)
                elif w != parent[u]:
                    c = dist[u] + dist[w] + 1
                    if best is None or c < best:
                        best = c
    return INFINITE if best is None else best


def eccentricity(g: Graph, v: int) -> int | _Infinite:
    d = bfs_distances(g, v)
    return INFINITE if min(d) < 0 else max(d)


def diameter(g: Graph) -> int | _Infinite:
    if g.n == 0:
        return 0
    best = 0
    for v in range(g.n):
        e = eccentricity(g, v)
        if e is INFINITE:
            return INFINITE
        best = max(best, e)
    return best


def radius(g: Graph) -> int | _Infinite:
    if g.n == 0:
        return 0
    eccs = [eccentricity(g, v) for v in range(g.n)]
    if INFINITE in eccs:
        return INFINITE
    return min(eccs)


def ball2(g: Graph, v: int) -> int:
    """Mask of vertices at distance at most 2 from ``v`` (including ``v``)."""
    m = g.nbr[v] | (1 << v)
    out = m
    for u in g.adj[v]:
        out |= g.nbr[u]
    return out


def square(g: Graph) -> Graph:
    """Same vertex set; ``uv`` is an edge iff ``1 <= d(u, v) <= 2``."""
    edges = []
    for v in range(g.n):
        for u in bits(ball2(g, v) & ~((1 << (v + 1)) - 1)):
            edges.append((v, u))
    return Graph(g.n, edges, g.labels)


def vertex_connectivity_at_least(g: Graph, k: int) -> bool:
    """True iff ``g`` has more than ``k`` vertices and no set of fewer than ``k`` vertices disconnects it.

    Exhaustive over all ``(k-1)``-subsets; meant for ``k <= 3`` and small graphs.
    """
    if k < 1:
        raise ValueError("k must be positive")
    if not is_connected(g):
        raise ValueError("graph is disconnected")
    if g.n <= k:
        return False
    full = g.all_mask
    for r in range(1, k):
        for cut in combinations(range(g.n), r):
            rest = full & ~mask_of(cut)
            v = (rest & -rest).bit_length() - 1
            if reach(g, v, rest) != rest:
                return False
    return True


# -- small standard graphs ---------------------------------------------------

def cycle_graph(n: int) -> Graph:
    return Graph(n, ((i, (i + 1) % n) for i in range(n)))


def path_graph(n: int) -> Graph:
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def complete_graph(n: int) -> Graph:
    return Graph(n, combinations(range(n), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, ((i, a + j) for i in range(a) for j in range(b)))


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


def mobius_ladder(n: int) -> Graph:
    """Möbius ladder on ``n`` (even) vertices: an ``n``-cycle plus its long diagonals."""
    if n % 2:
        raise ValueError("Möbius ladder needs an even vertex count")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)] + [(i, i + n // 2) for i in range(n // 2)])


def disjoint_cycles(count: int, length: int) -> Graph:
    edges = []
    for c in range(count):
        base = c * length
        edges += [(base + i, base + (i + 1) % length) for i in range(length)]
    return Graph(count * length, edges)


def read_edge_list(text: str) -> Graph:
    """Parse ``u v`` lines (0-indexed); blank lines and ``#`` comments are skipped."""
    edges = []
    top = -1
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected 'u v', got {raw!r}")
        u, v = int(parts[0]), int(parts[1])
        if u < 0 or v < 0:
            raise ValueError(f"line {lineno}: negative vertex")
        edges.append((u, v))
        top = max(top, u, v)
    return Graph(top + 1, edges)


def write_edge_list(g: Graph) -> str:
    return "".join(f"{u} {v}\n" for u, v in g.edges)
