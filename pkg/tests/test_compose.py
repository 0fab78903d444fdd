import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hyperzagreb.compose import (
    AnchoredComponent,
    CompositeKind,
    bridge_b1,
    bridge_b2,
    chain,
    compose,
    predicted_degrees,
)
from hyperzagreb.errors import (
    AdjacentAnchors,
    EmptyComponentList,
    MissingSecondAnchor,
    OutOfRange,
)
from hyperzagreb.families import cycle, path, random_component
from hyperzagreb.graph import degree, hyper_zagreb, is_connected

from conftest import brute_hm


def test_b1_two_triangles():
    r = bridge_b1([AnchoredComponent(cycle(3), 0)] * 2)
    assert (r.graph.vertex_count, r.graph.edge_count) == (6, 7)
    assert [degree(r.graph, m[0]) for m in r.anchor_map] == [3, 3]
    assert brute_hm(r.graph) == hyper_zagreb(r.graph) == 168


def test_b1_three_triangles():
    r = bridge_b1([AnchoredComponent(cycle(3), 1)] * 3)
    assert [degree(r.graph, m[1]) for m in r.anchor_map] == [3, 4, 3]
    assert brute_hm(r.graph) == hyper_zagreb(r.graph) == 318


def test_b1_van_hove_n2_is_a_star():
    r = bridge_b1([AnchoredComponent(path(1), 0), AnchoredComponent(path(2), 0), AnchoredComponent(path(1), 0)])
    assert (r.graph.vertex_count, r.graph.edge_count) == (4, 3)
    assert sorted(r.graph.degrees()) == [1, 1, 1, 3]
    assert hyper_zagreb(r.graph) == 48


def test_b2_para_pair():
    r = bridge_b2([AnchoredComponent(cycle(6), 0, 3)] * 2)
    assert r.anchor_map[0] == {0: 0, 3: 3}
    assert r.anchor_map[1] == {0: 6, 3: 9}
    assert (3, 6) in set(r.graph.edges())
    assert brute_hm(r.graph) == 264


@pytest.mark.parametrize("h", range(1, 11))
def test_b2_meta_chain(h):
    r = bridge_b2([AnchoredComponent(cycle(6), 0, 2)] * h)
    assert brute_hm(r.graph) == 168 * h - 72


def test_chain_two_squares():
    r = chain([AnchoredComponent(cycle(4), 0, 2)] * 2)
    assert (r.graph.vertex_count, r.graph.edge_count) == (7, 8)
    shared = r.anchor_map[0][2]
    assert shared == r.anchor_map[1][0]
    assert degree(r.graph, shared) == 4
    assert brute_hm(r.graph) == 208


@pytest.mark.parametrize("n", range(4, 9))
@pytest.mark.parametrize("d", range(2, 6))
def test_chain_spiro(n, d):
    r = chain([AnchoredComponent(cycle(n), 0, 2)] * d)
    assert brute_hm(r.graph) == 16 * n * d + 80 * d - 80


@pytest.mark.parametrize("builder", [bridge_b1, bridge_b2, chain])
def test_single_component_is_identity(builder):
    g = cycle(5)
    r = builder([AnchoredComponent(g, 0, 2)])
    assert r.graph == g
    assert r.vertex_maps == (tuple(range(5)),)


@pytest.mark.parametrize("builder", [bridge_b1, bridge_b2, chain])
def test_empty_list(builder):
    with pytest.raises(EmptyComponentList):
        builder([])


@pytest.mark.parametrize("builder", [bridge_b2, chain])
def test_missing_second_anchor_names_component(builder):
    comps = [AnchoredComponent(cycle(4), 0, 2), AnchoredComponent(cycle(4), 0)]
    with pytest.raises(MissingSecondAnchor, match="component 1"):
        builder(comps)


def test_anchor_validation():
    with pytest.raises(AdjacentAnchors):
        AnchoredComponent(cycle(4), 0, 1)
    with pytest.raises(AdjacentAnchors):
        AnchoredComponent(cycle(4), 2, 2)
    with pytest.raises(OutOfRange):
        AnchoredComponent(cycle(4), 4)
    # a single anchor has no adjacency constraint
    AnchoredComponent(cycle(3), 0)


@st.composite
def component_lists(draw, two_anchors):
    seed = draw(st.integers(0, 2**32))
    d = draw(st.integers(1, 6))
    rng = random.Random(seed)
    return [random_component(rng, 3, 8, two_anchors=two_anchors) for _ in range(d)]


def _check_structure(kind, comps):
    r = compose(kind, comps)
    g = r.graph
    d = len(comps)
    n_sum = sum(c.graph.vertex_count for c in comps)
    m_sum = sum(c.graph.edge_count for c in comps)
    if kind is CompositeKind.CHAIN:
        assert (g.vertex_count, g.edge_count) == (n_sum - d + 1, m_sum)
        for i in range(d - 1):
            assert r.anchor_map[i][comps[i].anchor_w] == r.anchor_map[i + 1][comps[i + 1].anchor_v]
    else:
        assert (g.vertex_count, g.edge_count) == (n_sum, m_sum + d - 1)
    assert g.degrees() == predicted_degrees(comps, r)
    assert is_connected(g)
    for u, nbrs in enumerate(g.adjacency):
        assert u not in nbrs
        assert all(u in g.adjacency[v] for v in nbrs)
    # each component's edges survive under the vertex map
    for c, vmap in zip(comps, r.vertex_maps):
        for u, v in c.graph.edges():
            assert vmap[v] in g.adjacency[vmap[u]]


@settings(max_examples=60)
@given(component_lists(two_anchors=False))
def test_b1_structure(comps):
    _check_structure(CompositeKind.B1, comps)


@settings(max_examples=60)
@given(component_lists(two_anchors=True))
def test_b2_structure(comps):
    _check_structure(CompositeKind.B2, comps)


@settings(max_examples=60)
@given(component_lists(two_anchors=True))
def test_chain_structure(comps):
    _check_structure(CompositeKind.CHAIN, comps)


def test_lemma1_degree_cases():
    comps = [AnchoredComponent(path(3), 1)] * 4
    r = bridge_b1(comps)
    anchors = [m[1] for m in r.anchor_map]
    assert [degree(r.graph, a) for a in anchors] == [3, 4, 4, 3]
    others = set(range(r.graph.vertex_count)) - set(anchors)
    assert all(degree(r.graph, u) == 1 for u in others)


def test_lemma2_degree_cases():
    comps = [AnchoredComponent(path(3), 0, 2)] * 3
    r = bridge_b2(comps)
    deg = r.graph.degrees()
    # v_1 and w_3 stay ends; w_1, v_2, w_2, v_3 gain one
    assert [deg[r.anchor_map[i][a]] for i, a in [(0, 0), (0, 2), (1, 0), (1, 2), (2, 0), (2, 2)]] == [1, 2, 2, 2, 2, 1]
