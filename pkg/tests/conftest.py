"""Shared helpers: the isomorph-free small-graph catalog and converters."""

import networkx as nx
import pytest

from antimagic import Graph


def from_nx(g_nx):
    """Relabel a networkx graph onto vertices 1..n."""
    mapping = {v: i + 1 for i, v in enumerate(sorted(g_nx.nodes()))}
    return Graph.from_edges(
        [(mapping[u], mapping[v]) for u, v in g_nx.edges()], vertices=mapping.values()
    )


def atlas_graphs(min_n, max_n, connected=None):
    """All graphs with min_n..max_n vertices, one per isomorphism class."""
    out = []
    for g_nx in nx.graph_atlas_g():
        n = g_nx.number_of_nodes()
        if not min_n <= n <= max_n:
            continue
        if connected is not None and nx.is_connected(g_nx) != connected:
            continue
        out.append(from_nx(g_nx))
    return out


@pytest.fixture(scope="session")
def catalog_n5():
    return atlas_graphs(1, 5)


@pytest.fixture(scope="session")
def catalog_connected_3_to_6():
    return atlas_graphs(3, 6, connected=True)


@pytest.fixture(scope="session")
def catalog_n6():
    return atlas_graphs(1, 6)
