"""Bridge and chain composition of anchored components.

Three builders share one output shape, :class:`CompositeResult`:

* ``bridge_b1`` joins consecutive single anchors ``v_i -- v_{i+1}``;
* ``bridge_b2`` joins the out-anchor of one component to the in-anchor of the
  next, ``w_i -- v_{i+1}``;
* ``chain`` identifies ``w_i`` with ``v_{i+1}``.

Each builder checks the result's degrees against the case analysis of the
corresponding degree lemma before returning.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Sequence

from .errors import (
    AdjacentAnchors,
    EmptyComponentList,
    InternalIdentityViolation,
    MergedMultiEdge,
    MissingSecondAnchor,
    OutOfRange,
)
from .graph import Graph, new_graph


class CompositeKind(str, Enum):
    B1 = "b1"
    B2 = "b2"
    CHAIN = "chain"


@dataclass(frozen=True)
class AnchoredComponent:
    """A graph with an in-anchor ``anchor_v`` and optional out-anchor ``anchor_w``."""

    graph: Graph
    anchor_v: int
    anchor_w: int | None = None

    def __post_init__(self) -> None:
        n = self.graph.vertex_count
        if not 0 <= self.anchor_v < n:
            raise OutOfRange(f"anchor_v={self.anchor_v} not a vertex of a {n}-vertex graph")
        if self.anchor_w is None:
            return
        if not 0 <= self.anchor_w < n:
            raise OutOfRange(f"anchor_w={self.anchor_w} not a vertex of a {n}-vertex graph")
        if self.anchor_w == self.anchor_v:
            raise AdjacentAnchors(f"anchors coincide at vertex {self.anchor_v}")
        if self.anchor_w in self.graph.adjacency[self.anchor_v]:
            raise AdjacentAnchors(f"anchors {self.anchor_v} and {self.anchor_w} are adjacent")


@dataclass(frozen=True)
class CompositeResult:
    """A composed graph plus explicit id remaps.

    ``vertex_maps[i][x]`` is the composed id of vertex ``x`` of component ``i``;
    ``anchor_map[i]`` restricts that table to the component's anchors.
    """

    graph: Graph
    kind: CompositeKind
    vertex_maps: tuple[tuple[int, ...], ...]
    anchor_map: tuple[dict[int, int], ...]


def _require_components(components: Sequence[AnchoredComponent], two_anchors: bool) -> None:
    if not components:
        raise EmptyComponentList("at least one component is required")
    if two_anchors:
        for i, c in enumerate(components):
            if c.anchor_w is None:
                raise MissingSecondAnchor("both anchors v and w are required", component=i)


def _anchor_map(components, vertex_maps, two_anchors: bool) -> tuple[dict[int, int], ...]:
    out = []
    for c, vmap in zip(components, vertex_maps):
        m = {c.anchor_v: vmap[c.anchor_v]}
        if two_anchors:
            m[c.anchor_w] = vmap[c.anchor_w]
        out.append(m)
    return tuple(out)


def _disjoint_union(components: Sequence[AnchoredComponent]):
    vertex_maps = []
    edges = []
    offset = 0
    for c in components:
        vertex_maps.append(tuple(range(offset, offset + c.graph.vertex_count)))
        edges.extend((u + offset, v + offset) for u, v in c.graph.edges())
        offset += c.graph.vertex_count
    return offset, edges, tuple(vertex_maps)


def bridge_b1(components: Sequence[AnchoredComponent]) -> CompositeResult:
    """Join consecutive anchors ``v_i`` and ``v_{i+1}`` by new edges."""
    _require_components(components, two_anchors=False)
    n, edges, vmaps = _disjoint_union(components)
    for i in range(len(components) - 1):
        edges.append((vmaps[i][components[i].anchor_v], vmaps[i + 1][components[i + 1].anchor_v]))
    result = CompositeResult(
        new_graph(n, edges), CompositeKind.B1, vmaps, _anchor_map(components, vmaps, False)
    )
    _assert_lemma(components, result)
    return result


def bridge_b2(components: Sequence[AnchoredComponent]) -> CompositeResult:
    """Join ``w_i`` to ``v_{i+1}`` by new edges."""
    _require_components(components, two_anchors=True)
    n, edges, vmaps = _disjoint_union(components)
    for i in range(len(components) - 1):
        edges.append((vmaps[i][components[i].anchor_w], vmaps[i + 1][components[i + 1].anchor_v]))
    result = CompositeResult(
        new_graph(n, edges), CompositeKind.B2, vmaps, _anchor_map(components, vmaps, True)
    )
    _assert_lemma(components, result)
    return result


def chain(components: Sequence[AnchoredComponent]) -> CompositeResult:
    """Identify ``w_i`` with ``v_{i+1}`` (vertex amalgamation)."""
    _require_components(components, two_anchors=True)
    vmaps: list[tuple[int, ...]] = []
    next_id = 0
    for i, c in enumerate(components):
        glued = vmaps[i - 1][components[i - 1].anchor_w] if i else None
        table = []
        for x in range(c.graph.vertex_count):
            if glued is not None and x == c.anchor_v:
                table.append(glued)
            else:
                table.append(next_id)
                next_id += 1
        vmaps.append(tuple(table))

    seen: set[tuple[int, int]] = set()
    edges = []
    for i, (c, vmap) in enumerate(zip(components, vmaps)):
        for u, v in c.graph.edges():
            a, b = sorted((vmap[u], vmap[v]))
            if a == b or (a, b) in seen:
                raise MergedMultiEdge(f"identification merges edge ({u}, {v})", component=i)
            seen.add((a, b))
            edges.append((a, b))

    result = CompositeResult(
        new_graph(next_id, edges), CompositeKind.CHAIN, tuple(vmaps),
        _anchor_map(components, vmaps, True),
    )
    _assert_lemma(components, result)
    return result


BUILDERS = {
    CompositeKind.B1: bridge_b1,
    CompositeKind.B2: bridge_b2,
    CompositeKind.CHAIN: chain,
}


def compose(kind: CompositeKind | str, components: Sequence[AnchoredComponent]) -> CompositeResult:
    return BUILDERS[CompositeKind(kind)](components)


def predicted_degrees(components: Sequence[AnchoredComponent], result: CompositeResult) -> list[int]:
    """Degrees of the composite as predicted by the degree lemmas.

    Computed only from the component degrees and the anchor positions, never
    from the composed graph itself.
    """
    d = len(components)
    out = [0] * result.graph.vertex_count
    for i, (c, vmap) in enumerate(zip(components, result.vertex_maps)):
        adj = c.graph.adjacency
        for x in range(c.graph.vertex_count):
            deg = len(adj[x])
            if result.kind is CompositeKind.B1:
                if x == c.anchor_v and d > 1:
                    deg += 1 if i in (0, d - 1) else 2
                out[vmap[x]] = deg
            elif result.kind is CompositeKind.B2:
                if x == c.anchor_w and i < d - 1:
                    deg += 1
                if x == c.anchor_v and i > 0:
                    deg += 1
                out[vmap[x]] = deg
            else:
                # identified vertex: w_{i-1} + v_i, accumulated from both sides
                if x == c.anchor_v and i > 0:
                    out[vmap[x]] += deg
                elif x == c.anchor_w and i < d - 1:
                    out[vmap[x]] += deg
                else:
                    out[vmap[x]] = deg
    return out


def _assert_lemma(components, result: CompositeResult) -> None:
    expected = predicted_degrees(components, result)
    actual = result.graph.degrees()
    if expected != actual:
        raise InternalIdentityViolation(
            f"{result.kind.value}: degrees {actual} disagree with lemma prediction {expected}"
        )
