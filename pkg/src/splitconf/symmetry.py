"""Automorphism groups and isomorphism by partition refinement and backtracking.

The same search drives both questions: find a vertex bijection between two
graphs that maps one ordered partition onto another.  Cells are refined by
the multiset of neighbouring cell indices until stable; when refinement
stalls, the first smallest non-singleton cell is individualized.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Sequence

from .graph import Graph, bfs_distances


Partition = list  # list of cells, each a list of vertices


@dataclass(frozen=True)
class AutomorphismGroup:
    generators: tuple[tuple[int, ...], ...]
    order: int
    base: tuple[int, ...] = field(default=())

    def orbits(self, n: int) -> list[list[int]]:
        return orbits(self.generators, n)


def refine(g: Graph, cells: Partition) -> tuple[Partition, list]:
    """Equitable refinement of ``cells``.

    Returns the refined partition and a trace that is identical for two
    graphs exactly when the refinements run in lockstep.
    """
    trace = []
    while True:
        cell_of = [0] * g.n
        for ci, cell in enumerate(cells):
            for v in cell:
                cell_of[v] = ci
        new_cells = []
        for ci, cell in enumerate(cells):
            if len(cell) == 1:
                v = cell[0]
                trace.append((ci, tuple(sorted(cell_of[u] for u in g.adj[v])), 1))
                new_cells.append(cell)
                continue
            groups: dict[tuple, list] = {}
            for v in cell:
                key = tuple(sorted(cell_of[u] for u in g.adj[v]))
                groups.setdefault(key, []).append(v)
            for key in sorted(groups):
                trace.append((ci, key, len(groups[key])))
                new_cells.append(groups[key])
        if len(new_cells) == len(cells):
            return new_cells, trace
        cells = new_cells


def _target_cell(cells: Partition) -> int:
    best = -1
    for i, c in enumerate(cells):
        if len(c) > 1 and (best < 0 or len(c) < len(cells[best])):
            best = i
    return best


def _individualize(cells: Partition, i: int, v: int) -> Partition:
    rest = [u for u in cells[i] if u != v]
    return cells[:i] + [[v], rest] + cells[i + 1:]


def _is_isomorphism(g1: Graph, g2: Graph, perm: Sequence[int]) -> bool:
    if len(g1.edges) != len(g2.edges):
        return False
    return all(g2.has_edge(perm[u], perm[v]) for u, v in g1.edges)


def _match(g1: Graph, g2: Graph, p1: Partition, p2: Partition) -> list[int] | None:
    p1, t1 = refine(g1, p1)
    p2, t2 = refine(g2, p2)
    if t1 != t2:
        return None
    i = _target_cell(p1)
    if i < 0:
        perm = [0] * g1.n
        for c1, c2 in zip(p1, p2):
            perm[c1[0]] = c2[0]
        return perm if _is_isomorphism(g1, g2, perm) else None
    v = p1[i][0]
    left = _individualize(p1, i, v)
    for w in p2[i]:
        found = _match(g1, g2, left, _individualize(p2, i, w))
        if found is not None:
            return found
    return None


def _color_partition(n: int, color: Sequence | None) -> tuple[Partition, list]:
    if color is None:
        return [list(range(n))], []
    keys = sorted(set(color))
    return [[v for v in range(n) if color[v] == k] for k in keys], keys


def _distance_profile(g: Graph) -> list:
    prof = []
    for v in range(g.n):
        prof.append(tuple(sorted(Counter(bfs_distances(g, v)).items())))
    return sorted(prof)


def are_isomorphic(g1: Graph, g2: Graph, color1: Sequence | None = None,
                   color2: Sequence | None = None) -> list[int] | None:
    """Return a bijection ``perm`` with ``perm[v]`` in ``g2`` for ``v`` in ``g1``, or ``None``.

    With colorings supplied, only bijections that map each color class to the
    same color class are considered.
    """
    if g1.n != g2.n or len(g1.edges) != len(g2.edges):
        return None
    if sorted(map(len, g1.adj)) != sorted(map(len, g2.adj)):
        return None
    p1, k1 = _color_partition(g1.n, color1)
    p2, k2 = _color_partition(g2.n, color2)
    if k1 != k2 or [len(c) for c in p1] != [len(c) for c in p2]:
        return None
    if _distance_profile(g1) != _distance_profile(g2):
        return None
    perm = _match(g1, g2, p1, p2)
    if perm is not None:
        assert _is_isomorphism(g1, g2, perm)
        if color1 is not None:
            assert all(color1[v] == color2[perm[v]] for v in range(g1.n))
    return perm


def orbits(generators: Sequence[Sequence[int]], n: int) -> list[list[int]]:
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for gen in generators:
        for v in range(n):
            a, b = find(v), find(gen[v])
            if a != b:
                parent[max(a, b)] = min(a, b)
    groups: dict[int, list[int]] = {}
    for v in range(n):
        groups.setdefault(find(v), []).append(v)
    return sorted(groups.values())


def _orbit_of(v: int, gens: Sequence[Sequence[int]]) -> set[int]:
    seen = {v}
    stack = [v]
    while stack:
        x = stack.pop()
        for gen in gens:
            y = gen[x]
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return seen


def automorphism_group(g: Graph, color: Sequence | None = None) -> AutomorphismGroup:
    """Generators and exact order of Aut(g), restricted to color-preserving maps if asked.

    The order is the product of basic orbit lengths along a base taken from
    the leftmost branch of the refinement tree.
    """
    start, _ = _color_partition(g.n, color)
    levels = []  # (partition before individualizing, cell index, base vertex)
    cells, _ = refine(g, start)
    while True:
        i = _target_cell(cells)
        if i < 0:
            break
        v = cells[i][0]
        levels.append((cells, i, v))
        cells, _ = refine(g, _individualize(cells, i, v))

    gens: list[tuple[int, ...]] = []
    order = 1
    for cells, i, b in reversed(levels):
        orbit = _orbit_of(b, gens)
        left = _individualize(cells, i, b)
        for c in cells[i]:
            if c in orbit:
                continue
            perm = _match(g, g, left, _individualize(cells, i, c))
            if perm is not None:
                gens.append(tuple(perm))
                orbit = _orbit_of(b, gens)
        order *= len(orbit)
    return AutomorphismGroup(tuple(gens), order, tuple(lv[2] for lv in levels))


def is_vertex_transitive(g: Graph, group: AutomorphismGroup | None = None) -> bool:
    group = group or automorphism_group(g)
    return g.n == 0 or len(orbits(group.generators, g.n)) == 1


def is_arc_transitive(g: Graph, group: AutomorphismGroup | None = None) -> bool:
    """True iff Aut(g) is transitive on ordered pairs of adjacent vertices."""
    if not g.edges:
        return False
    group = group or automorphism_group(g)
    u, v = g.edges[0]
    seen = {(u, v)}
    stack = [(u, v)]
    while stack:
        a, b = stack.pop()
        for gen in group.generators:
            arc = (gen[a], gen[b])
            if arc not in seen:
                seen.add(arc)
                stack.append(arc)
    return len(seen) == 2 * len(g.edges)


def is_zero_symmetric(g: Graph, group: AutomorphismGroup | None = None) -> bool:
    """Graphical regular representation: Aut(g) acts regularly on the vertices."""
    group = group or automorphism_group(g)
    return is_vertex_transitive(g, group) and group.order == g.n


def format_permutation(perm: Sequence[int]) -> str:
    return " ".join(map(str, perm))


def parse_permutation(text: str) -> tuple[int, ...]:
    perm = tuple(int(t) for t in text.split())
    if sorted(perm) != list(range(len(perm))):
        raise ValueError("not a permutation in image notation")
    return perm
