"""Explicit families: hexagon splitting sets for H(n,{0,a,b}), the known
unsplittable families, generalized Petersen graphs, symmetric bicirculants,
generalized Gray configurations, the copy-and-join expansion, and the
scanners that gather evidence for the two open conjectures.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product
from math import gcd
from typing import Iterable, Sequence

from .graph import Graph, complete_bipartite, complete_graph, girth
from .haar import HaarSymbol, build_haar, canonical_symbol, haar_classes, haar_girth_arith
from .incidence import ColoredLevi, Configuration, config_from_levi, levi
from .splitting import Restriction, find_splitting_set, verify_splitting_set
from .symmetry import are_isomorphic


# -- hexagon splitting set ------------------------------------------------------

@dataclass(frozen=True)
class Theorem6Instance:
    """The two 12-element residue lists attached to ``H(n, {0, a, b})``."""

    n: int
    a: int
    b: int

    @property
    def W(self) -> tuple[int, ...]:
        n, a, b = self.n, self.a, self.b
        return tuple(x % n for x in (0, a, b, 2 * b, b + a, b - a, 2 * b - a, 2 * b - 2 * a,
                                     3 * b - a, 3 * b - 2 * a, 2 * b + a, 3 * b))

    @property
    def B(self) -> tuple[int, ...]:
        n, a, b = self.n, self.a, self.b
        return tuple(x % n for x in (0, a, b, 2 * b, b + a, b - a, 2 * b - a, 2 * b - 2 * a,
                                     3 * b - a, 3 * b - 2 * a, -a, b - 2 * a))

    @property
    def admissible(self) -> bool:
        return len(set(self.W)) == 12 and len(set(self.B)) == 12

    @property
    def symbol(self) -> HaarSymbol:
        return HaarSymbol(self.n, (0, self.a, self.b))


def _check_order(n: int, a: int, b: int) -> None:
    if not 0 < a < b < n:
        raise ValueError(f"need 0 < a < b < n, got n={n}, a={a}, b={b}")


def theorem6_splitting_set(n: int, a: int, b: int) -> tuple[int, ...] | None:
    """Hexagon-isolating set of ``H(n,{0,a,b})`` as sorted vertex indices, or ``None``.

    ``{0+, 2b+, (2b-2a)+, (b-a)-, (b+a)-, (3b-a)-}`` whenever both residue
    lists are free of repeats.
    """
    _check_order(n, a, b)
    if not Theorem6Instance(n, a, b).admissible:
        return None
    plus = [0, 2 * b, 2 * b - 2 * a]
    minus = [b - a, b + a, 3 * b - a]
    return tuple(sorted([p % n for p in plus] + [n + m % n for m in minus]))


def _rot(x: int, k: int, n: int, full: int) -> int:
    k %= n
    return ((x << k) | (x >> (n - k))) & full


def verify_haar_splitting_set(sym: HaarSymbol, sigma: Iterable[int]) -> bool:
    """Splitting-set check on ``H(n,S)`` using rotations of ``n``-bit masks.

    Same predicate as :func:`verify_splitting_set`, without materializing the
    graph; used by the large sweeps.
    """
    n, S = sym.n, sym.S
    full = (1 << n) - 1
    sp = sm = 0
    for v in sigma:
        if v < n:
            sp |= 1 << v
        else:
            sm |= 1 << (v - n)
    # distance <= 2 between members
    for v in range(n):
        if sp >> v & 1:
            nm = 0
            for s in S:
                nm |= 1 << ((v + s) % n)
            if nm & sm:
                return False
            np2 = 0
            for s in S:
                for t in S:
                    if s != t:
                        np2 |= 1 << ((v + s - t) % n)
            if np2 & sp:
                return False
        if sm >> v & 1:
            nm2 = 0
            for s in S:
                for t in S:
                    if s != t:
                        nm2 |= 1 << ((v - s + t) % n)
            if nm2 & sm:
                return False
    rp, rm = full & ~sp, full & ~sm
    if rp:
        p, m = rp & -rp, 0
    elif rm:
        p, m = 0, rm & -rm
    else:
        return False
    while True:
        nm = m
        for s in S:
            nm |= _rot(p, s, n, full)
        nm &= rm
        np_ = p
        for s in S:
            np_ |= _rot(nm, -s, n, full)
        np_ &= rp
        if np_ == p and nm == m:
            break
        p, m = np_, nm
    return p != rp or m != rm


def cyclic_configuration(sym: HaarSymbol) -> Configuration:
    """The configuration whose colored Levi graph is ``H(n,S)``: points ``i+``, lines ``i-``."""
    hg = build_haar(sym)
    return config_from_levi(ColoredLevi(hg.graph, hg.color))


# -- family membership ------------------------------------------------------------

def _canon(n: int, S) -> HaarSymbol:
    return canonical_symbol(HaarSymbol(n, S))


def corollary7_member(n: int, S) -> bool:
    c = _canon(n, S)
    return ((n >= 13 and c == _canon(n, (0, 1, 4)))
            or (n >= 16 and c == _canon(n, (0, 1, 5)))
            or (n >= 16 and c == _canon(n, (0, 2, 5))))


def unsplittable_family_member(n: int, S) -> str | None:
    """``F1``: H(n,{0,1,3}), n>=7; ``F2``: H(3m,{0,1,m}), m>=2;
    ``F3``: H(3m,{0,1,m+1}), m>=4, m not divisible by 3."""
    c = _canon(n, S)
    if n >= 7 and c == _canon(n, (0, 1, 3)):
        return "F1"
    if n % 3 == 0:
        m = n // 3
        if m >= 2 and c == _canon(n, (0, 1, m)):
            return "F2"
        if m >= 4 and m % 3 and c == _canon(n, (0, 1, m + 1)):
            return "F3"
    return None


# -- generalized Petersen graphs -----------------------------------------------------

@dataclass(frozen=True)
class GPParams:
    n: int
    k: int

    def __post_init__(self):
        if self.n < 3 or not 1 <= self.k < self.n / 2:
            raise ValueError(f"GP({self.n},{self.k}) needs n >= 3 and 1 <= k < n/2")

    def __str__(self) -> str:
        return f"GP({self.n},{self.k})"


def gp_labels(n: int) -> list[str]:
    return [str(i) for i in range(n)] + [f"{i}'" for i in range(n)]


def build_gp(p: GPParams) -> Graph:
    """Vertex ``i`` has index ``i``, ``i'`` has index ``n + i``; primed vertices form the n-cycle."""
    n, k = p.n, p.k
    edges = []
    for i in range(n):
        edges.append((n + i, n + (i + 1) % n))
        edges.append((i, n + i))
        edges.append((i, (i + k) % n))
    return Graph(2 * n, edges, gp_labels(n))


def gp_splitting_set(p: GPParams) -> tuple[int, ...] | None:
    n = p.n
    if (p.n, p.k) == (12, 5):
        primed, plain = (0, 4, 8), (2, 6, 10)
    elif (p.n, p.k) == (24, 5):
        primed, plain = range(0, 24, 4), range(2, 24, 4)
    else:
        return None
    return tuple(sorted(list(plain) + [n + i for i in primed]))


# -- cubic symmetric bicirculants -----------------------------------------------------

SYMMETRIC_GP = ((4, 1), (5, 2), (8, 3), (10, 2), (10, 3), (12, 5), (24, 5))


def theorem11_flag_transitive_symbol(n: int) -> list[HaarSymbol]:
    """Symbols ``{0,1,r+1}`` with ``r`` a unit and ``r^2+r+1 = 0 (mod n)``, odd ``n >= 11``;
    the Heawood symbol for ``n = 7``."""
    if n == 7:
        return [HaarSymbol(7, (0, 1, 3))]
    if n < 11 or n % 2 == 0:
        return []
    out = {HaarSymbol(n, (0, 1, r + 1)) for r in range(1, n)
           if gcd(r, n) == 1 and (r * r + r + 1) % n == 0}
    return sorted(out)


def listed_symmetric_bicirculant(g: Graph) -> str | None:
    """Name of the entry of the cubic symmetric bicirculant list that ``g`` is isomorphic to."""
    cands: list[tuple[str, Graph]] = []
    if g.n == 4:
        cands.append(("K4", complete_graph(4)))
    if g.n == 6:
        cands.append(("K3,3", complete_bipartite(3, 3)))
    cands += [(f"GP({n},{k})", build_gp(GPParams(n, k))) for n, k in SYMMETRIC_GP if 2 * n == g.n]
    if g.n == 14:
        cands.append(("H(7;0,1,3)", build_haar(HaarSymbol(7, (0, 1, 3))).graph))
    if g.n % 2 == 0:
        cands += [(str(s), build_haar(s).graph) for s in theorem11_flag_transitive_symbol(g.n // 2) if g.n // 2 >= 11]
    for name, h in cands:
        if are_isomorphic(g, h) is not None:
            return name
    return None


# -- generalized Gray configuration and the copy-and-join expansion -------------------------

def gray_configuration(k: int, max_k: int = 4) -> Configuration:
    """Points ``{0..k-1}^k``; lines are the axis-parallel rows (all but one coordinate fixed).

    Point ids are digit strings such as ``"012"``; a line id carries ``*`` in
    its free coordinate, e.g. ``"0*2"``.
    """
    if k < 2:
        raise ValueError("k must be at least 2")
    if k > max_k:
        raise ValueError(f"k={k} gives {k ** k} points; raise max_k to allow it")
    if k > 10:
        raise ValueError("digit-string identifiers need k <= 10")
    pts = ["".join(map(str, t)) for t in product(range(k), repeat=k)]
    lines, inc = [], []
    for axis in range(k):
        for rest in product(range(k), repeat=k - 1):
            name = "".join(map(str, rest[:axis])) + "*" + "".join(map(str, rest[axis:]))
            lines.append(name)
            for x in range(k):
                inc.append((name.replace("*", str(x)), name))
    conf = Configuration(pts, lines, inc)
    conf.require_balanced(k)
    return conf


@dataclass(frozen=True)
class Expansion:
    config: Configuration
    joining_lines: tuple
    point_sets: tuple[tuple, ...]


def lemma14_expand(c: Configuration, line) -> Expansion:
    """Drop ``line``, take ``k`` disjoint copies of the rest, join the ``j``-th
    points of the dropped line across the copies by a new line ``M_j``.

    The joining lines form a line splitting set and, for each copy, the
    copies of the dropped line's points form a point splitting set.
    """
    v, k = c.require_balanced()
    if line not in set(c.lines):
        raise ValueError(f"{line!r} is not a line")
    on_l = c.points_on(line)
    taken = {str(e) for e in c.points + c.lines}

    def fresh(base: str) -> str:
        name = base
        while name in taken:
            name += "'"
        return name

    def cp(i: int, e) -> str:
        return f"{i}:{e}"

    rest_lines = [b for b in c.lines if b != line]
    pts = [cp(i, p) for i in range(1, k + 1) for p in c.points]
    lns = [cp(i, b) for i in range(1, k + 1) for b in rest_lines]
    inc = [(cp(i, p), cp(i, b)) for i in range(1, k + 1) for p, b in c.incidences if b != line]
    joins = []
    for j, p in enumerate(on_l, 1):
        m = fresh(f"M{j}")
        joins.append(m)
        inc += [(cp(i, p), m) for i in range(1, k + 1)]
    out = Configuration(pts, lns + joins, inc)
    out.require_balanced(k)
    point_sets = tuple(tuple(cp(i, p) for p in on_l) for i in range(1, k + 1))
    return Expansion(out, tuple(joins), point_sets)


def element_indices(c: Configuration, ids: Iterable) -> tuple[int, ...]:
    """Levi-graph vertex indices of configuration elements (see :func:`levi`)."""
    pos = {e: i for i, e in enumerate(c.points + c.lines)}
    return tuple(sorted(pos[e] for e in ids))


def expansion_hints(e: Expansion) -> list[tuple]:
    return [tuple(e.joining_lines)] + [tuple(ps) for ps in e.point_sets]


def check_expansion(e: Expansion) -> list[tuple[str, bool]]:
    lg = levi(e.config)
    out = [("joining lines split", verify_splitting_set(lg.graph, element_indices(e.config, e.joining_lines)).ok)]
    for i, ps in enumerate(e.point_sets, 1):
        out.append((f"copy {i} points split", verify_splitting_set(lg.graph, element_indices(e.config, ps)).ok))
    return out


# -- conjecture scanners ---------------------------------------------------------------

@dataclass
class ScanRow:
    n: int
    symbol: HaarSymbol
    girth: int
    splittable: bool
    family: str | None
    certificate: str = ""
    certified: bool = True

    def tsv(self) -> str:
        return "\t".join([str(self.n), str(self.symbol), str(self.girth),
                          "splittable" if self.splittable else "unsplittable",
                          self.family or "-", self.certificate or "-"])


@dataclass
class ScanReport:
    rows: list[ScanRow] = field(default_factory=list)
    mismatches: list[ScanRow] = field(default_factory=list)
    failures: list[ScanRow] = field(default_factory=list)

    HEADER = "n\tsymbol\tgirth\tverdict\tfamily_tag\tcertificate"

    def tsv(self) -> str:
        return "\n".join([self.HEADER] + [r.tsv() for r in self.rows]) + "\n"

    def unsplittable_counts(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for r in self.rows:
            out.setdefault(r.n, 0)
            if not r.splittable:
                out[r.n] += 1
        return out


def format_sigma(g: Graph, sigma: Sequence[int]) -> str:
    return " ".join(g.label(v) for v in sorted(sigma))


def _scan_row(sym: HaarSymbol, family: str | None) -> ScanRow:
    hg = build_haar(sym)
    rep = find_splitting_set(hg.graph, roots=[0])
    row = ScanRow(sym.n, sym, girth(hg.graph), rep.splittable, family)
    if rep.splittable:
        row.certificate = format_sigma(hg.graph, rep.certificate)
        row.certified = verify_splitting_set(hg.graph, rep.certificate).ok
    return row


def scan_conjecture17(n_max: int, n_min: int = 7) -> ScanReport:
    """Compare computed splittability of every girth-6 trivalent class with family membership."""
    rep = ScanReport()
    for n in range(max(n_min, 3), n_max + 1):
        for cls in haar_classes(n, 3):
            if haar_girth_arith(cls.symbol) != 6:
                continue
            fams = [unsplittable_family_member(n, s.S) for s in cls.members]
            fam = next((f for f in fams if f), None)
            row = _scan_row(cls.symbol, fam)
            rep.rows.append(row)
            if row.splittable == (fam is not None):
                rep.mismatches.append(row)
            if not row.certified:
                rep.failures.append(row)
    return rep


def scan_conjecture18(k: int, n_range: Iterable[int]) -> ScanReport:
    """Splittability of every connected girth-6 ``H(n,S)`` with ``|S| = k``.

    Any splittable instance would refute the conjecture; it is listed in
    ``mismatches`` together with its certificate.
    """
    if k < 4:
        raise ValueError("the valency-k probe is for k >= 4")
    rep = ScanReport()
    for n in n_range:
        if n < 2 * k:
            continue
        for cls in haar_classes(n, k, girth6_only=True):
            row = _scan_row(cls.symbol, None)
            rep.rows.append(row)
            if row.splittable:
                rep.mismatches.append(row)
            if not row.certified:
                rep.failures.append(row)
    return rep
