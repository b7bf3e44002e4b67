import random
from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from conftest import from_nx
from splitconf.families import GPParams, build_gp, gp_splitting_set
from splitconf.graph import (
    Graph, complete_graph, connected_components, cycle_graph, girth, is_connected, path_graph,
    petersen_graph, vertex_connectivity_at_least,
)
from splitconf.haar import HaarSymbol, build_haar, haar_classes
from splitconf.splitting import (
    DisconnectedGraph, Restriction, SizeGuard, brute_force_minimal_separators, brute_force_splittable,
    find_splitting_set, is_splittable, minimal_separators, verify_splitting_set,
)

R = list(Restriction)


def _haar_sigma(hg, names):
    return [hg.vertex(x) for x in names]


def test_hexagon_set_13():
    hg = build_haar(HaarSymbol(13, (0, 1, 4)))
    chk = verify_splitting_set(hg.graph, _haar_sigma(hg, "0+ 6+ 8+ 3- 5- 11-".split()))
    assert chk.ok and chk.reason == "ok"


def test_heawood_pair_not_independent(heawood):
    chk = verify_splitting_set(heawood.graph, [heawood.vertex("0+"), heawood.vertex("1+")])
    assert not chk.ok and chk.reason.startswith("not-independent")


def test_not_disconnecting():
    chk = verify_splitting_set(cycle_graph(8), [0])
    assert (chk.ok, chk.reason) == (False, "not-disconnecting")


def test_gp24_set_leaves_three_12_cycles():
    p = GPParams(24, 5)
    g = build_gp(p)
    chk = verify_splitting_set(g, gp_splitting_set(p))
    assert chk.ok
    assert sorted(len(c) for c in chk.components) == [12, 12, 12]
    for c in chk.components:
        h = g.induced(c)
        assert h.is_regular(2) and is_connected(h)


def test_cycle_splits():
    rep = find_splitting_set(cycle_graph(6))
    assert rep.splittable
    assert verify_splitting_set(cycle_graph(6), rep.certificate).ok
    assert len(rep.certificate) == 2
    for n in range(6, 13):
        assert is_splittable(cycle_graph(n))
    for n in (3, 4, 5):
        assert not is_splittable(cycle_graph(n))


@pytest.mark.parametrize("g", [petersen_graph(), build_gp(GPParams(10, 3)), complete_graph(6),
                               build_haar(HaarSymbol(7, (0, 1, 3))).graph])
def test_unsplittable_examples(g):
    assert not find_splitting_set(g).splittable
    assert not brute_force_splittable(g).splittable


def test_h12_016_restricted():
    # H(12;0,1,6) splits, yet both routes find that no one-sided set exists
    hg = build_haar(HaarSymbol(12, (0, 1, 6)))
    assert find_splitting_set(hg.graph).splittable
    for r in (Restriction.BLACK_ONLY, Restriction.WHITE_ONLY):
        assert not find_splitting_set(hg.graph, r, hg.color).splittable
        assert not brute_force_splittable(hg.graph, r, hg.color).splittable


def test_mobius_kantor_unsplittable():
    assert not brute_force_splittable(build_haar(HaarSymbol(8, (0, 1, 3))).graph).splittable


def test_tiny_and_bad_inputs():
    assert not find_splitting_set(path_graph(3)).splittable
    assert not find_splitting_set(Graph(1, [])).splittable
    assert find_splitting_set(path_graph(5)).certificate in {(1,), (2,), (3,)}
    with pytest.raises(DisconnectedGraph):
        find_splitting_set(Graph(4, [(0, 1), (2, 3)]))
    with pytest.raises(ValueError):
        find_splitting_set(cycle_graph(6), Restriction.BLACK_ONLY)
    with pytest.raises(SizeGuard):
        brute_force_splittable(cycle_graph(30))
    assert brute_force_splittable(cycle_graph(30), max_vertices=30).splittable
    with pytest.raises(ValueError):
        find_splitting_set(cycle_graph(6), method="magic")


def test_separator_examples():
    assert list(minimal_separators(path_graph(3))) == [(1,)]
    assert list(minimal_separators(complete_graph(4))) == []
    seps = sorted(minimal_separators(cycle_graph(6)))
    want = sorted((u, v) for u, v in combinations(range(6), 2) if (v - u) % 6 not in (1, 5))
    assert seps == want and len(seps) == 9
    assert brute_force_minimal_separators(cycle_graph(6), 4) == want


def _connected_graphs(max_n=9):
    def build(args):
        n, es = args
        g = Graph(n, es)
        return g if is_connected(g) else None

    return st.integers(2, max_n).flatmap(
        lambda n: st.tuples(st.just(n), st.sets(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1))
                                                .filter(lambda e: e[0] < e[1]), min_size=n - 1, max_size=2 * n))
    ).map(build).filter(lambda g: g is not None)


@settings(max_examples=150, deadline=None)
@given(_connected_graphs())
def test_minimal_separators_match_brute_force(g):
    mine = list(minimal_separators(g))
    assert len(mine) == len(set(mine))
    assert sorted(mine) == sorted(brute_force_minimal_separators(g))
    for s in mine:
        comps = connected_components(g, s)
        full = [c for c in comps if all(any(g.has_edge(v, x) for v in c) for x in s)]
        assert len(full) >= 2


@settings(max_examples=150, deadline=None)
@given(_connected_graphs(9), st.integers(0, 2 ** 9))
def test_three_routes_agree_on_small_graphs(g, colseed):
    color = [(colseed >> v) & 1 for v in range(g.n)]
    for r in R:
        a = find_splitting_set(g, r, color)
        b = find_splitting_set(g, r, color, method="separators")
        c = brute_force_splittable(g, r, color)
        assert a.splittable == b.splittable == c.splittable
        for rep in (a, b, c):
            if rep.splittable:
                assert verify_splitting_set(g, rep.certificate).ok


def test_separators_route_returns_lex_least():
    g = cycle_graph(8)
    rep = find_splitting_set(g, method="separators")
    assert rep.certificate == (0, 3)


def test_certificates_are_minimal_separators():
    for n in range(7, 13):
        for cls in haar_classes(n):
            g = build_haar(cls.symbol).graph
            rep = find_splitting_set(g, roots=[0])
            if rep.splittable:
                sig = set(rep.certificate)
                assert tuple(sorted(sig)) in set(minimal_separators(g))
                comps = rep.components
                assert comps == tuple(tuple(c) for c in connected_components(g, sig))


def test_hints_are_verified_before_use():
    g = cycle_graph(10)
    rep = find_splitting_set(g, hints=[(0, 1), (0, 4, 7)])
    assert rep.splittable and rep.search_stats.get("hint")
    assert rep.certificate in {(0, 4), (4, 7), (0, 7)}
    rep = find_splitting_set(petersen_graph(), hints=[(0, 1)])
    assert not rep.splittable


def test_restriction_is_monotone():
    for n in range(3, 15):
        for cls in haar_classes(n):
            hg = build_haar(cls.symbol)
            any_ = find_splitting_set(hg.graph, roots=[0]).splittable
            for r in (Restriction.BLACK_ONLY, Restriction.WHITE_ONLY):
                if find_splitting_set(hg.graph, r, hg.color).splittable:
                    assert any_


def test_roots_match_min_mode():
    for n in range(3, 16):
        for cls in haar_classes(n):
            g = build_haar(cls.symbol).graph
            assert find_splitting_set(g, roots=[0]).splittable == find_splitting_set(g).splittable


# -- oracle equivalence corpus --------------------------------------------------------

def test_oracle_haar_upto_28_vertices():
    count = 0
    for n in range(3, 15):
        for cls in haar_classes(n):
            hg = build_haar(cls.symbol)
            for r in R:
                a = find_splitting_set(hg.graph, r, hg.color)
                b = brute_force_splittable(hg.graph, r, hg.color)
                assert a.splittable == b.splittable, (cls.symbol, r)
                count += 1
    assert count == 3 * 29


def test_oracle_gp_upto_14():
    for n in range(3, 15):
        for k in range(1, (n + 1) // 2):
            g = build_gp(GPParams(n, k))
            color = [0] * n + [1] * n
            for r in R:
                assert find_splitting_set(g, r, color).splittable == brute_force_splittable(g, r, color).splittable


def test_oracle_random_cubic():
    rng = random.Random(20240611)
    seen = 0
    while seen < 500:
        n = rng.choice(range(8, 25, 2))
        h = nx.random_regular_graph(3, n, seed=rng.randrange(2 ** 31))
        if not nx.is_connected(h):
            continue
        g = from_nx(h)
        color = [rng.randrange(2) for _ in range(n)]
        for r in R:
            a = find_splitting_set(g, r, color)
            assert a.splittable == brute_force_splittable(g, r, color).splittable
            if a.splittable:
                assert verify_splitting_set(g, a.certificate).ok
        seen += 1


def test_unsplittable_girth6_classes_are_3_connected():
    for n in range(7, 31):
        for cls in haar_classes(n, girth6_only=True):
            g = build_haar(cls.symbol).graph
            if not find_splitting_set(g, roots=[0]).splittable:
                assert girth(g) == 6
                assert vertex_connectivity_at_least(g, 3)
