"""Exact splittability: certificates, a minimal-separator engine and a brute-force oracle.

A *splitting set* of a connected graph ``G`` is a set of vertices that is
independent in ``G**2`` (pairwise distance at least 3) and whose removal
disconnects ``G``.  Such sets are 2-packings, so closed neighbourhoods of
their members are pairwise disjoint.

Reduction used by the default search.  If ``X`` is a splitting set and
``A`` is a smallest component of ``G - X``, then ``N(A)`` is a subset of
``X`` (hence still a 2-packing) and ``G - N(A)`` is disconnected.  So ``G``
is splittable iff some connected set ``A`` has a 2-packing boundary and
``2|A| + |N(A)| <= |V|``.  Conversely, given such an ``A``, any other
component ``B`` of ``G - N(A)`` has ``N(B)`` inside ``N(A)``, and ``N(B)``
is a minimal separator (``B`` and the component holding ``A`` are both
full).  Certificates are always returned in that minimal form.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator, NamedTuple, Sequence

from .graph import Graph, ball2, bits, component_masks, is_connected, mask_of, reach

ORACLE_MAX_VERTICES = 28


class Restriction(enum.Enum):
    ANY = "any"
    BLACK_ONLY = "black_only"
    WHITE_ONLY = "white_only"


class Verdict(enum.Enum):
    SPLITTABLE = "splittable"
    UNSPLITTABLE = "unsplittable"


class SizeGuard(ValueError):
    pass


class DisconnectedGraph(ValueError):
    pass


@dataclass(frozen=True)
class SplitReport:
    verdict: Verdict
    certificate: tuple[int, ...] | None = None
    components: tuple[tuple[int, ...], ...] | None = None
    search_stats: dict = field(default_factory=dict, compare=False)

    @property
    def splittable(self) -> bool:
        return self.verdict is Verdict.SPLITTABLE


class Check(NamedTuple):
    ok: bool
    reason: str
    components: tuple[tuple[int, ...], ...] = ()


def _allowed_mask(g: Graph, restriction: Restriction, color: Sequence[int] | None) -> int:
    if restriction is Restriction.ANY:
        return g.all_mask
    if color is None:
        raise ValueError(f"{restriction.value} needs a vertex coloring")
    want = 0 if restriction is Restriction.BLACK_ONLY else 1
    return mask_of(v for v in range(g.n) if color[v] == want)


def _is_two_packing(g: Graph, sigma: Iterable[int]) -> tuple[int, int] | None:
    """Return an offending pair at distance <= 2, or ``None``."""
    seen = 0
    members = list(sigma)
    for v in members:
        hit = ball2(g, v) & seen
        if hit:
            return (hit & -hit).bit_length() - 1, v
        seen |= 1 << v
    return None


def verify_splitting_set(g: Graph, sigma: Iterable[int]) -> Check:
    sig = sorted(set(sigma))
    if any(not 0 <= v < g.n for v in sig):
        raise ValueError("splitting set vertex out of range")
    clash = _is_two_packing(g, sig)
    if clash is not None:
        return Check(False, f"not-independent: {clash[0]} and {clash[1]} are within distance 2")
    rest = g.all_mask & ~mask_of(sig)
    comps = tuple(tuple(bits(c)) for c in component_masks(g, rest))
    if len(comps) < 2:
        return Check(False, "not-disconnecting", comps)
    return Check(True, "ok", comps)


def _certificate(g: Graph, a_mask: int, boundary: int) -> tuple[tuple[int, ...], tuple[tuple[int, ...], ...]]:
    rest = g.all_mask & ~a_mask & ~boundary
    low = (rest & -rest).bit_length() - 1
    other = reach(g, low, rest)
    nb = 0
    for v in bits(other):
        nb |= g.nbr[v]
    sigma = nb & ~other
    comps = tuple(tuple(bits(c)) for c in component_masks(g, g.all_mask & ~sigma))
    return tuple(bits(sigma)), comps


class _Search:
    def __init__(self, g: Graph, allowed: int):
        self.g = g
        self.allowed = allowed
        self.balls = [ball2(g, v) for v in range(g.n)]
        self.nodes = 0

    def run(self, root: int, forbid_a: int) -> tuple[int, int] | None:
        forbid_s = ~self.allowed & self.g.all_mask
        return self._grow(1 << root, self.g.nbr[root], 0, forbid_s, forbid_a)

    def _grow(self, a: int, na: int, s: int, forbid_s: int, forbid_a: int):
        self.nodes += 1
        nbr = self.g.nbr
        limit = self.g.n
        while True:
            front = na & ~a & ~s
            changed = False
            for u in bits(front):
                bit = 1 << u
                can_s = not forbid_s & bit
                can_a = not forbid_a & bit
                if can_s and can_a:
                    continue
                if not can_s and not can_a:
                    return None
                changed = True
                if can_s:
                    s |= bit
                    forbid_s |= self.balls[u]
                else:
                    a |= bit
                    na |= nbr[u]
                break
            if 2 * a.bit_count() + s.bit_count() > limit:
                return None
            if not changed:
                break
        front = na & ~a & ~s
        if not front:
            return a, s
        u = (front & -front).bit_length() - 1
        bit = 1 << u
        found = self._grow(a, na, s | bit, forbid_s | self.balls[u], forbid_a)
        if found is not None:
            return found
        return self._grow(a | bit, na | nbr[u], s, forbid_s, forbid_a)


def _check_input(g: Graph) -> None:
    if not is_connected(g):
        raise DisconnectedGraph("splittability is defined for connected graphs")


def find_splitting_set(g: Graph, restriction: Restriction = Restriction.ANY,
                       color: Sequence[int] | None = None,
                       roots: Sequence[int] | None = None,
                       method: str = "search",
                       hints: Iterable[Iterable[int]] = ()) -> SplitReport:
    """Decide splittability exactly and return a minimal-separator certificate.

    ``roots``, when given, must meet every orbit of a group of automorphisms
    that preserves the allowed vertex class (e.g. ``[0]`` for a
    vertex-transitive graph and no restriction).  Without it every vertex is
    tried as the least element of the small side.

    ``method="separators"`` enumerates all minimal separators instead and
    returns the lexicographically least admissible one.

    ``hints`` are candidate sets tried before any search.  A hint is used
    only if it lies in the allowed class and passes
    :func:`verify_splitting_set`; it is then shrunk to a minimal separator.
    """
    _check_input(g)
    allowed = _allowed_mask(g, restriction, color)
    if g.n <= 3:
        return SplitReport(Verdict.UNSPLITTABLE, search_stats={"nodes": 0})
    for hint in hints:
        hint = tuple(hint)
        hm = mask_of(hint)
        if hm & ~allowed or not verify_splitting_set(g, hint).ok:
            continue
        small = min(component_masks(g, g.all_mask & ~hm), key=lambda c: (c.bit_count(), c))
        nb = 0
        for v in bits(small):
            nb |= g.nbr[v]
        sigma, comps = _certificate(g, small, nb & ~small)
        return SplitReport(Verdict.SPLITTABLE, sigma, comps, {"nodes": 0, "hint": True})
    if method == "separators":
        return _by_separators(g, allowed)
    if method != "search":
        raise ValueError(f"unknown method {method!r}")

    search = _Search(g, allowed)
    if roots is not None:
        runs = [(r, 0) for r in roots]
    else:
        runs = [(x, (1 << x) - 1) for x in range(g.n)]
    for root, forbid_a in runs:
        found = search.run(root, forbid_a)
        if found is not None:
            sigma, comps = _certificate(g, *found)
            return SplitReport(Verdict.SPLITTABLE, sigma, comps, {"nodes": search.nodes})
    return SplitReport(Verdict.UNSPLITTABLE, search_stats={"nodes": search.nodes})


def is_splittable(g: Graph, **kw) -> bool:
    return find_splitting_set(g, **kw).splittable


# -- minimal separators -------------------------------------------------------

def _close_components(g: Graph, removed: int) -> Iterator[int]:
    """Neighbourhoods of the components of ``g - removed``."""
    for comp in component_masks(g, g.all_mask & ~removed):
        nb = 0
        for v in bits(comp):
            nb |= g.nbr[v]
        nb &= ~comp
        if nb:
            yield nb


def minimal_separators(g: Graph) -> Iterator[tuple[int, ...]]:
    """Every inclusion-minimal vertex separator of ``g``, each exactly once.

    Seeds with the full-component neighbourhoods of ``G - N[v]`` and closes
    under ``S -> N(C)`` for components ``C`` of ``G - (S | N(x))``, ``x in S``.
    """
    if not is_connected(g):
        raise DisconnectedGraph("minimal separators need a connected graph")
    seen: set[int] = set()
    queue: list[int] = []

    def offer(sep: int):
        if sep not in seen and _is_minimal(g, sep):
            seen.add(sep)
            queue.append(sep)
            return True
        return False

    for v in range(g.n):
        for sep in _close_components(g, g.nbr[v] | (1 << v)):
            if offer(sep):
                yield tuple(bits(sep))
    i = 0
    while i < len(queue):
        sep = queue[i]
        i += 1
        for x in bits(sep):
            for new in _close_components(g, sep | g.nbr[x]):
                if offer(new):
                    yield tuple(bits(new))


def _is_minimal(g: Graph, sep: int) -> bool:
    full = 0
    for comp in component_masks(g, g.all_mask & ~sep):
        nb = 0
        for v in bits(comp):
            nb |= g.nbr[v]
        if nb & sep == sep:
            full += 1
            if full == 2:
                return True
    return False


def _by_separators(g: Graph, allowed: int) -> SplitReport:
    best = None
    count = 0
    for sep in minimal_separators(g):
        count += 1
        if mask_of(sep) & ~allowed:
            continue
        if _is_two_packing(g, sep) is None and (best is None or sep < best):
            best = sep
    stats = {"separators": count}
    if best is None:
        return SplitReport(Verdict.UNSPLITTABLE, search_stats=stats)
    comps = tuple(tuple(bits(c)) for c in component_masks(g, g.all_mask & ~mask_of(best)))
    return SplitReport(Verdict.SPLITTABLE, best, comps, stats)


# -- brute-force oracle -------------------------------------------------------

def brute_force_splittable(g: Graph, restriction: Restriction = Restriction.ANY,
                           color: Sequence[int] | None = None,
                           max_vertices: int = ORACLE_MAX_VERTICES) -> SplitReport:
    """Try every independent set of ``g**2`` (within the allowed class)."""
    _check_input(g)
    if g.n > max_vertices:
        raise SizeGuard(f"{g.n} vertices exceeds the oracle bound of {max_vertices}")
    allowed = _allowed_mask(g, restriction, color)
    if g.n <= 3:
        return SplitReport(Verdict.UNSPLITTABLE, search_stats={"sets": 0})
    balls = [ball2(g, v) for v in range(g.n)]
    full = g.all_mask
    tried = 0

    def rec(start: int, sigma: int, blocked: int):
        nonlocal tried
        for v in range(start, g.n):
            bit = 1 << v
            if blocked & bit or not allowed & bit:
                continue
            s2 = sigma | bit
            tried += 1
            rest = full & ~s2
            if rest:
                low = (rest & -rest).bit_length() - 1
                if reach(g, low, rest) != rest:
                    return s2
            hit = rec(v + 1, s2, blocked | balls[v])
            if hit is not None:
                return hit
        return None

    hit = rec(0, 0, 0)
    stats = {"sets": tried}
    if hit is None:
        return SplitReport(Verdict.UNSPLITTABLE, search_stats=stats)
    comps = tuple(tuple(bits(c)) for c in component_masks(g, full & ~hit))
    return SplitReport(Verdict.SPLITTABLE, tuple(bits(hit)), comps, stats)


def brute_force_minimal_separators(g: Graph, max_size: int | None = None) -> list[tuple[int, ...]]:
    """All minimal separators by subset enumeration; tiny graphs only."""
    out = []
    top = g.n if max_size is None else max_size
    for r in range(1, top + 1):
        for sub in combinations(range(g.n), r):
            m = mask_of(sub)
            if m != g.all_mask and _is_minimal(g, m):
                out.append(sub)
    return out
