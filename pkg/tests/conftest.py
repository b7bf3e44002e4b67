import networkx as nx
import pytest

from splitconf.graph import Graph


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def from_nx(h: nx.Graph) -> Graph:
    idx = {v: i for i, v in enumerate(h.nodes)}
    return Graph(len(idx), [(idx[u], idx[v]) for u, v in h.edges])


@pytest.fixture(scope="session")
def heawood():
    from splitconf.haar import HaarSymbol, build_haar

    return build_haar(HaarSymbol(7, (0, 1, 3)))
