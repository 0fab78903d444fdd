import pytest
from hypothesis import given

from hyperzagreb.errors import IndexOverflow, OutOfRange, ParseError, SelfLoop
from hyperzagreb.families import cycle, path
from hyperzagreb.graph import (
    Graph,
    IndexReport,
    degree,
    emit_edge_list,
    first_zagreb,
    first_zagreb_edgewise,
    forgotten_index,
    hyper_zagreb,
    index_report,
    is_connected,
    neighbor_degree_sum,
    neighbor_degree_sums,
    new_graph,
    parse_edge_list,
    second_zagreb,
)

from conftest import brute_hm, graphs, to_nx

K4 = new_graph(4, [(u, v) for u in range(4) for v in range(u + 1, 4)])
STAR3 = new_graph(4, [(0, 1), (0, 2), (0, 3)])


def test_triangle():
    g = new_graph(3, [(0, 1), (1, 2), (2, 0)])
    assert g.edge_count == 3
    assert [degree(g, u) for u in range(3)] == [2, 2, 2]


def test_single_vertex_and_dedup():
    p1 = new_graph(1, [])
    assert p1.vertex_count == 1 and p1.edge_count == 0
    assert degree(p1, 0) == 0
    assert new_graph(2, [(0, 1), (1, 0)]).edge_count == 1


@pytest.mark.parametrize("edges, exc", [([(0, 3)], OutOfRange), ([(1, 1)], SelfLoop)])
def test_new_graph_errors(edges, exc):
    with pytest.raises(exc):
        new_graph(3, edges)


def test_degree_out_of_range(p3):
    with pytest.raises(OutOfRange):
        degree(p3, 3)
    with pytest.raises(OutOfRange):
        neighbor_degree_sum(p3, -1)


def test_degrees_and_neighbor_sums(c6, p3):
    assert all(degree(c6, u) == 2 for u in range(6))
    assert all(neighbor_degree_sum(c6, u) == 4 for u in range(6))
    assert (degree(p3, 1), degree(p3, 0)) == (2, 1)
    assert neighbor_degree_sum(p3, 1) == 2
    for m in range(3, 9):
        assert neighbor_degree_sum(path(m), 0) == 2
    assert neighbor_degree_sums(c6) == [4] * 6


@pytest.mark.parametrize(
    "g, m1, m2, f, hm",
    [
        (cycle(6), 24, 24, 48, 96),
        (path(3), 6, 4, 10, 18),
        (path(1), 0, 0, 0, 0),
        (K4, 36, 54, 108, 216),
        (STAR3, 12, 9, 30, 48),
    ],
)
def test_index_values(g, m1, m2, f, hm):
    assert index_report(g) == IndexReport(m1, m2, f, hm)
    assert (first_zagreb(g), second_zagreb(g), forgotten_index(g), hyper_zagreb(g)) == (m1, m2, f, hm)


@pytest.mark.parametrize("m", range(3, 15))
def test_path_hyper_zagreb(m):
    # two end edges of weight 9, m - 3 inner edges of weight 16
    assert brute_hm(path(m)) == 16 * m - 30
    assert hyper_zagreb(path(m)) == 16 * m - 30


@given(graphs())
def test_index_identities(g):
    r = index_report(g)
    assert r.hm == r.f + 2 * r.m2
    assert first_zagreb_edgewise(g) == r.m1
    assert sum(g.degrees()) == 2 * g.edge_count
    assert r.hm == brute_hm(g)


@given(graphs())
def test_neighbor_sum_bound(g):
    for u in range(g.vertex_count):
        assert neighbor_degree_sum(g, u) <= (g.vertex_count - 1) * degree(g, u)
    assert neighbor_degree_sums(g) == [neighbor_degree_sum(g, u) for u in range(g.vertex_count)]


@given(graphs())
def test_round_trip(g):
    assert parse_edge_list(emit_edge_list(g)) == g


@given(graphs())
def test_is_connected_matches_networkx(g):
    import networkx as nx

    G = to_nx(g)
    assert is_connected(g) == (g.vertex_count == 0 or nx.is_connected(G))


def test_parse_examples():
    tri = parse_edge_list("3 3\n0 1\n1 2\n2 0\n")
    assert tri == cycle(3)
    assert emit_edge_list(new_graph(2, [(0, 1)])) == "2 1\n0 1\n"
    assert parse_edge_list("# comment\n1 0\n") == path(1)
    assert parse_edge_list("2 1\n0 1") == path(2)  # missing trailing newline tolerated


@pytest.mark.parametrize(
    "text, exc, line",
    [
        ("3 2\n0 1\n1 x\n", ParseError, 3),
        ("3 2\n0 1\n", ParseError, 2),
        ("2 1\n0 1\n1 0\n", ParseError, 3),
        ("2 1\n0  1\n", ParseError, 2),
        ("# nothing\n", ParseError, 1),
        ("2 1\n0 -1\n", ParseError, 2),
        ("2 1\n0 2\n", OutOfRange, 2),
        ("2 1\n1 1\n", SelfLoop, 2),
    ],
)
def test_parse_errors(text, exc, line):
    with pytest.raises(exc, match=f"line {line}"):
        parse_edge_list(text)


def test_graph_rejects_asymmetric_adjacency():
    with pytest.raises(ValueError):
        Graph(2, (frozenset({1}), frozenset()))


def test_overflow_surfaces_as_index_overflow(monkeypatch, c6):
    from hyperzagreb import _kernels, graph

    def overflowing(indptr, indices):
        raise OverflowError("index exceeds signed 64-bit range")

    monkeypatch.setattr(_kernels, "index_sums", overflowing)
    with pytest.raises(IndexOverflow):
        graph.hyper_zagreb(c6)
