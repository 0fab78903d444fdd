import networkx as nx
import pytest
from hypothesis import strategies as st

from hyperzagreb.graph import Graph, new_graph


def brute_hm(g: Graph) -> int:
    """Hyper Zagreb index via networkx, independent of the package kernels."""
    G = nx.Graph()
    G.add_nodes_from(range(g.vertex_count))
    G.add_edges_from(g.edges())
    return sum((G.degree(u) + G.degree(v)) ** 2 for u, v in G.edges())


def to_nx(g: Graph) -> nx.Graph:
    G = nx.Graph()
    G.add_nodes_from(range(g.vertex_count))
    G.add_edges_from(g.edges())
    return G


@st.composite
def graphs(draw, max_vertices=12):
    n = draw(st.integers(0, max_vertices))
    if n < 2:
        return new_graph(n, [])
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), max_size=len(pairs)))
    return new_graph(n, chosen)


@pytest.fixture
def c6():
    return new_graph(6, [(i, (i + 1) % 6) for i in range(6)])


@pytest.fixture
def p3():
    return new_graph(3, [(0, 1), (1, 2)])


ACCEPTANCE_RESULTS: dict[int, tuple[str, bool]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE_RESULTS):
        title, ok = ACCEPTANCE_RESULTS[number]
        terminalreporter.write_line(f"AC{number:>2} {'PASS' if ok else 'FAIL'}  {title}")
