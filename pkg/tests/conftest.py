import networkx as nx
import pytest
from hypothesis import strategies as st

from koszul_bei.graph import Graph


def from_nx(h):
    nodes = sorted(h.nodes())
    idx = {v: k + 1 for k, v in enumerate(nodes)}
    return Graph(len(nodes), [(idx[a], idx[b]) for a, b in h.edges()])


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(g.vertices)
    h.add_edges_from(g.edges())
    return h


def atlas_connected(n_max=7, n_min=1):
    """Connected graphs from the networkx atlas, one per isomorphism class."""
    return [
        from_nx(h)
        for h in nx.graph_atlas_g()
        if n_min <= h.number_of_nodes() <= n_max and nx.is_connected(h)
    ]


@pytest.fixture(scope="session")
def connected7():
    return atlas_connected(7)


@pytest.fixture(scope="session")
def connected6():
    return atlas_connected(6)


@st.composite
def graphs(draw, min_n=1, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, [p for p, keep in zip(pairs, mask) if keep])


# one line per acceptance criterion, printed at the end of the run
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
