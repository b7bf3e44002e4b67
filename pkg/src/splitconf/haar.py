"""Cyclic Haar graphs H(n, S), their symbols, and LCF-notation graphs.

Vertex ``i+`` has index ``i`` and ``i-`` has index ``n + i``; the edge set
is ``{i+, (i+k)-}`` for ``i`` in Z_n and ``k`` in S.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from itertools import combinations
from math import gcd
from typing import Sequence

from .graph import Graph, is_connected
from .symmetry import are_isomorphic


class ParseError(ValueError):
    """Malformed text; ``column`` is the 1-based offending position."""

    def __init__(self, message: str, column: int = 1):
        super().__init__(f"column {column}: {message}")
        self.column = column


@dataclass(frozen=True, order=True)
class HaarSymbol:
    n: int
    S: tuple[int, ...]

    def __init__(self, n: int, S):
        if n < 1:
            raise ValueError("modulus must be positive")
        residues = tuple(sorted({s % n for s in S}))
        if not residues:
            raise ValueError("symbol must be nonempty")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "S", residues)

    def __str__(self) -> str:
        return f"H({self.n};{','.join(map(str, self.S))})"

    @property
    def k(self) -> int:
        return len(self.S)

    def braces(self) -> str:
        return "{" + ", ".join(map(str, self.S)) + "}"

    def transform(self, a: int, b: int) -> HaarSymbol:
        return HaarSymbol(self.n, [a * s + b for s in self.S])


class Cursor:
    """Left-to-right reader for the small text formats; errors carry a 1-based column."""

    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def fail(self, what: str):
        got = repr(self.text[self.pos]) if self.pos < len(self.text) else "end of input"
        raise ParseError(f"expected {what}, got {got} in {self.text!r}", self.pos + 1)

    def peek(self, s: str) -> bool:
        return self.text.startswith(s, self.pos)

    def lit(self, s: str) -> None:
        for ch in s:
            if self.pos >= len(self.text) or self.text[self.pos] != ch:
                self.fail(repr(s))
            self.pos += 1

    def integer(self, signed: bool = False) -> int:
        start = self.pos
        if signed and self.peek("-"):
            self.pos += 1
        digits = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == digits:
            self.fail("an integer" if signed else "a nonnegative integer")
        return int(self.text[start:self.pos])

    def int_list(self, signed: bool = True) -> list[int]:
        out = [self.integer(signed)]
        while self.peek(","):
            self.pos += 1
            out.append(self.integer(signed))
        return out

    def end(self) -> None:
        if self.pos != len(self.text):
            self.fail("end of input")


def parse_symbol(text: str) -> HaarSymbol:
    """Read ``H(n;s1,...,sk)``."""
    c = Cursor(text.strip())
    c.lit("H(")
    col = c.pos + 1
    n = c.integer()
    c.lit(";")
    S = c.int_list()
    c.lit(")")
    c.end()
    if n < 1:
        raise ParseError("modulus must be positive", col)
    return HaarSymbol(n, S)


@dataclass(frozen=True)
class HaarGraph:
    symbol: HaarSymbol
    graph: Graph

    @property
    def n(self) -> int:
        return self.symbol.n

    @property
    def color(self) -> tuple[int, ...]:
        """0 (black, ``i+``) for the first ``n`` vertices, 1 (white, ``i-``) after."""
        return (0,) * self.n + (1,) * self.n

    def vertex(self, name: str) -> int:
        """Index of a vertex named like ``"3+"`` or ``"11-"``."""
        i, side = int(name[:-1]), name[-1]
        if side not in "+-":
            raise ValueError(f"bad Haar vertex name {name!r}")
        return i % self.n + (self.n if side == "-" else 0)

    def name(self, v: int) -> str:
        return f"{v}+" if v < self.n else f"{v - self.n}-"


def haar_labels(n: int) -> list[str]:
    return [f"{i}+" for i in range(n)] + [f"{i}-" for i in range(n)]


def build_haar(sym: HaarSymbol) -> HaarGraph:
    n = sym.n
    edges = [(i, n + (i + k) % n) for i in range(n) for k in sym.S]
    return HaarGraph(sym, Graph(2 * n, edges, haar_labels(n)))


def is_connected_haar(sym: HaarSymbol) -> bool:
    bfs = is_connected(build_haar(sym).graph)
    arith = reduce(gcd, (s - t for s, t in combinations(sym.S, 2)), sym.n) == 1
    assert bfs == arith, f"connectivity criteria disagree for {sym}"
    return bfs


def _units(n: int) -> list[int]:
    return [a for a in range(1, n + 1) if gcd(a, n) == 1] if n > 1 else [0]


def canonical_symbol(sym: HaarSymbol) -> HaarSymbol:
    """Lexicographically least member of ``{a*S + b}`` over units ``a`` and all ``b``."""
    n = sym.n
    best = None
    for a in _units(n):
        scaled = [a * s % n for s in sym.S]
        for t in scaled:
            cand = tuple(sorted((x - t) % n for x in scaled))
            if best is None or cand < best:
                best = cand
    return HaarSymbol(n, best)


def symbol_isomorphism(sym: HaarSymbol, a: int, b: int) -> list[int]:
    """Vertex map H(n,S) -> H(n, a*S + b): ``i+ -> (a i)+``, ``j- -> (a j + b)-``."""
    n = sym.n
    return [(a * i) % n for i in range(n)] + [n + (a * j + b) % n for j in range(n)]


def candidate_symbols(n: int, k: int = 3) -> list[HaarSymbol]:
    """Connected symbols ``{0, ...}`` of size ``k``, canonical, deduplicated, sorted."""
    out = set()
    for rest in combinations(range(1, n), k - 1):
        sym = HaarSymbol(n, (0,) + rest)
        if is_connected_haar(sym):
            out.add(canonical_symbol(sym))
    return sorted(out)


def haar_girth_arith(sym: HaarSymbol) -> int:
    """Girth of a connected ``H(n,S)`` with ``|S| >= 2``: 4 iff some difference repeats."""
    diffs = [(s - t) % sym.n for s in sym.S for t in sym.S if s != t]
    if len(set(diffs)) < len(diffs):
        return 4
    return 6



@dataclass(frozen=True)
class HaarClass:
    symbol: HaarSymbol
    members: tuple[HaarSymbol, ...]


def haar_classes(n: int, k: int = 3, girth6_only: bool = False) -> list[HaarClass]:
    """Isomorphism classes of connected ``k``-valent cyclic Haar graphs on ``2n`` vertices.

    Symbols are first merged by affine equivalence; the remaining
    representatives are then merged whenever the graphs are isomorphic.
    """
    if k == 3 and n < 3:
        raise ValueError("trivalent cyclic Haar graphs need n >= 3")
    reps = candidate_symbols(n, k)
    if girth6_only:
        reps = [s for s in reps if haar_girth_arith(s) == 6]
    graphs = {s: build_haar(s).graph for s in reps}
    classes: list[list[HaarSymbol]] = []
    for s in reps:
        for cls in classes:
            if are_isomorphic(graphs[cls[0]], graphs[s]) is not None:
                cls.append(s)
                break
        else:
            classes.append([s])
    return [HaarClass(c[0], tuple(c)) for c in classes]


def enumerate_haar_classes(n: int, arity: int = 3) -> list[HaarSymbol]:
    return [c.symbol for c in haar_classes(n, arity)]


# -- LCF notation ---------------------------------------------------------------

@dataclass(frozen=True)
class LCF:
    steps: tuple[int, ...]
    repetitions: int

    def __str__(self) -> str:
        return f"LCF[{','.join(map(str, self.steps))}]^{self.repetitions}"


def parse_lcf(text: str) -> LCF:
    """Read ``LCF[a,b,...]^r``."""
    c = Cursor(text.strip())
    c.lit("LCF[")
    steps = c.int_list()
    c.lit("]^")
    reps = c.integer()
    c.end()
    return LCF(tuple(steps), reps)


def build_lcf(steps: Sequence[int], repetitions: int) -> Graph:
    """Hamiltonian cycle ``0..N-1`` plus chords ``i -> i + steps[i mod L]``."""
    L = len(steps)
    N = L * repetitions
    if N < 3 or N % 2:
        raise ValueError(f"LCF needs an even vertex count >= 3, got {N}")
    edges = [(i, (i + 1) % N) for i in range(N)]
    for i in range(N):
        s = steps[i % L]
        j = (i + s) % N
        if j == i:
            raise ValueError(f"chord at index {i} is a loop")
        if j in ((i + 1) % N, (i - 1) % N):
            raise ValueError(f"chord at index {i} duplicates a cycle edge")
        back = (j + steps[j % L]) % N
        if back != i:
            raise ValueError(f"chord at index {i} collides: {j} sends its chord to {back}")
        if i < j:
            edges.append((i, j))
    return Graph(N, edges)
