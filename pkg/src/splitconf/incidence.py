"""Combinatorial configurations, colored Levi graphs, duality and splitting types."""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Hashable, Iterable, Sequence

from .graph import Graph, girth, is_connected, INFINITE, square
from .splitting import Restriction, find_splitting_set

BLACK, WHITE = 0, 1


class IncidenceError(ValueError):
    pass


class GirthViolation(IncidenceError):
    """Two points share two lines (a 4-cycle in the Levi graph)."""


class NotBipartite(IncidenceError):
    pass


class NotRegular(IncidenceError):
    pass


class DisconnectedLevi(IncidenceError):
    pass


class SplittingType(enum.Enum):
    T1 = "T1"
    T2 = "T2"
    T3 = "T3"
    T4 = "T4"

    @classmethod
    def from_flags(cls, point_splittable: bool, line_splittable: bool) -> SplittingType:
        return {
            (True, True): cls.T1,
            (True, False): cls.T2,
            (False, True): cls.T3,
            (False, False): cls.T4,
        }[(point_splittable, line_splittable)]

    def dual(self) -> SplittingType:
        return {SplittingType.T2: SplittingType.T3, SplittingType.T3: SplittingType.T2}.get(self, self)


@dataclass(frozen=True)
class Configuration:
    """Incidence structure ``(points, lines, incidences)``.

    Construction checks only that points and lines are disjoint and that two
    points share at most one line.  Balance is checked on request with
    :meth:`require_balanced`.
    """

    points: tuple
    lines: tuple
    incidences: frozenset
    _on_line: dict = field(init=False, repr=False, compare=False)
    _through: dict = field(init=False, repr=False, compare=False)

    def __init__(self, points: Iterable[Hashable], lines: Iterable[Hashable], incidences: Iterable[tuple]):
        pts, lns = tuple(points), tuple(lines)
        inc = frozenset(incidences)
        if len(set(pts)) != len(pts) or len(set(lns)) != len(lns):
            raise IncidenceError("duplicate element identifier")
        if set(pts) & set(lns):
            raise IncidenceError("point and line identifiers overlap")
        ppos = {p: i for i, p in enumerate(pts)}
        lpos = {b: i for i, b in enumerate(lns)}
        on_line: dict = {b: [] for b in lns}
        through: dict = {p: [] for p in pts}
        for p, b in inc:
            if p not in ppos or b not in lpos:
                raise IncidenceError(f"incidence ({p!r}, {b!r}) names an unknown element")
            on_line[b].append(p)
            through[p].append(b)
        for b in on_line:
            on_line[b] = tuple(sorted(on_line[b], key=ppos.__getitem__))
        for p in through:
            through[p] = tuple(sorted(through[p], key=lpos.__getitem__))
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "lines", lns)
        object.__setattr__(self, "incidences", inc)
        object.__setattr__(self, "_on_line", on_line)
        object.__setattr__(self, "_through", through)
        clash = self._repeated_pair()
        if clash is not None:
            raise GirthViolation(f"points {clash[0]!r} and {clash[1]!r} share more than one line")

    def _repeated_pair(self):
        seen = set()
        for b in self.lines:
            pts = self._on_line[b]
            for i in range(len(pts)):
                for j in range(i + 1, len(pts)):
                    pair = (pts[i], pts[j])
                    if pair in seen:
                        return pair
                    seen.add(pair)
        return None

    def points_on(self, line) -> tuple:
        return self._on_line[line]

    def lines_through(self, point) -> tuple:
        return self._through[point]

    def balance(self) -> tuple[int, int] | None:
        """``(v, k)`` if this is a balanced ``(v_k)`` configuration, else ``None``."""
        v = len(self.points)
        if v != len(self.lines) or v == 0:
            return None
        ks = {len(x) for x in self._on_line.values()} | {len(x) for x in self._through.values()}
        return (v, ks.pop()) if len(ks) == 1 else None

    def require_balanced(self, k: int | None = None) -> tuple[int, int]:
        vk = self.balance()
        if vk is None or (k is not None and vk[1] != k):
            want = f"({len(self.points)}_{k})" if k is not None else "balanced"
            raise NotRegular(f"structure is not {want}")
        return vk

    def __repr__(self) -> str:
        return f"Configuration({len(self.points)} points, {len(self.lines)} lines, {len(self.incidences)} flags)"


@dataclass(frozen=True)
class ColoredLevi:
    graph: Graph
    color: tuple[int, ...]
    elements: tuple | None = None

    def __post_init__(self):
        if len(self.color) != self.graph.n:
            raise ValueError("coloring must cover every vertex")

    def swapped(self) -> ColoredLevi:
        return ColoredLevi(self.graph, tuple(1 - c for c in self.color), self.elements)

    def is_proper(self) -> bool:
        return all(self.color[u] != self.color[v] for u, v in self.graph.edges)


def levi(c: Configuration) -> ColoredLevi:
    """Points get indices ``0..|P|-1`` in order, lines follow."""
    np_ = len(c.points)
    ppos = {p: i for i, p in enumerate(c.points)}
    lpos = {b: np_ + i for i, b in enumerate(c.lines)}
    edges = [(ppos[p], lpos[b]) for p, b in c.incidences]
    elements = c.points + c.lines
    g = Graph(np_ + len(c.lines), edges, [str(e) for e in elements])
    return ColoredLevi(g, (BLACK,) * np_ + (WHITE,) * len(c.lines), elements)


def config_from_levi(lg: ColoredLevi, k: int | None = None) -> Configuration:
    """Read a configuration off a colored Levi graph.

    With ``k`` given the result must be a balanced ``(v_k)`` configuration.
    """
    if not lg.is_proper():
        raise NotBipartite("coloring is not a proper 2-coloring")
    g = girth(lg.graph)
    if g is not INFINITE and g < 6:
        raise GirthViolation(f"Levi graph has girth {g}")
    names = lg.elements if lg.elements is not None else lg.graph.labels
    if names is None:
        names = [f"p{v}" if lg.color[v] == BLACK else f"l{v}" for v in range(lg.graph.n)]
    pts = [names[v] for v in range(lg.graph.n) if lg.color[v] == BLACK]
    lns = [names[v] for v in range(lg.graph.n) if lg.color[v] == WHITE]
    inc = []
    for u, v in lg.graph.edges:
        p, b = (u, v) if lg.color[u] == BLACK else (v, u)
        inc.append((names[p], names[b]))
    conf = Configuration(pts, lns, inc)
    if k is not None:
        conf.require_balanced(k)
    return conf


def dual(c: Configuration) -> Configuration:
    return Configuration(c.lines, c.points, ((b, p) for p, b in c.incidences))


def grunbaum(c: Configuration) -> Graph:
    return square(levi(c).graph)


def splitting_type(c: Configuration, roots: Sequence[int] | None = None,
                   hints: Iterable[Iterable[Hashable]] = ()) -> SplittingType:
    """``hints`` are candidate splitting sets given as element ids; each is
    verified before use, so a bad hint only costs the search time."""
    lg = levi(c)
    if not is_connected(lg.graph):
        raise DisconnectedLevi("configuration is not connected")
    pos = {e: i for i, e in enumerate(lg.elements)}
    idx = [[pos[e] for e in h] for h in hints]
    point = find_splitting_set(lg.graph, Restriction.BLACK_ONLY, lg.color, roots=roots, hints=idx)
    line = find_splitting_set(lg.graph, Restriction.WHITE_ONLY, lg.color, roots=roots, hints=idx)
    return SplittingType.from_flags(point.splittable, line.splittable)


# -- text format --------------------------------------------------------------

def read_configuration(text: str) -> Configuration:
    """One configuration line per text line, listing its points.

    Lines are named ``L0, L1, ...`` in order.  Points are ordered numerically
    when every token is an integer, otherwise by first appearance.
    """
    rows = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    tokens = []
    seen = set()
    for row in rows:
        if len(set(row)) != len(row):
            raise IncidenceError(f"repeated point on line {' '.join(row)!r}")
        for t in row:
            if t not in seen:
                seen.add(t)
                tokens.append(t)
    if all(t.lstrip("-").isdigit() for t in tokens):
        tokens.sort(key=int)
    lines = [f"L{i}" for i in range(len(rows))]
    inc = [(p, lines[i]) for i, row in enumerate(rows) for p in row]
    return Configuration(tokens, lines, inc)


def write_configuration(c: Configuration) -> str:
    return "".join(" ".join(map(str, c.points_on(b))) + "\n" for b in c.lines)
