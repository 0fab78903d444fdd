"""Immutable simple graphs and exact degree-based indices.

Vertices are dense ``0..n-1`` ids. All index values are Python integers
computed by the selected kernel (see :mod:`hyperzagreb._kernels`); values
outside the signed 64-bit range raise :class:`~hyperzagreb.errors.IndexOverflow`.
"""

from __future__ import annotations

from array import array
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

from . import _kernels
from .errors import InternalIdentityViolation, IndexOverflow, OutOfRange, ParseError, SelfLoop


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph; ``adjacency[u]`` is the neighbour set of ``u``."""

    vertex_count: int
    adjacency: tuple[frozenset[int], ...]

    def __post_init__(self) -> None:
        if self.vertex_count < 0 or len(self.adjacency) != self.vertex_count:
            raise OutOfRange("adjacency length must equal vertex_count")
        for u, nbrs in enumerate(self.adjacency):
            for v in nbrs:
                if not 0 <= v < self.vertex_count:
                    raise OutOfRange(f"neighbour {v} of {u} out of range")
                if v == u:
                    raise SelfLoop(f"self-loop at {u}")
                if u not in self.adjacency[v]:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")

    @property
    def edge_count(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield each edge once as ``(u, v)`` with ``u < v``, in sorted order."""
        for u, nbrs in enumerate(self.adjacency):
            for v in sorted(nbrs):
                if u < v:
                    yield (u, v)

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adjacency]

    @cached_property
    def _csr(self) -> tuple[array, array]:
        indptr = array("q", [0])
        indices = array("q")
        for nbrs in self.adjacency:
            indices.extend(sorted(nbrs))
            indptr.append(len(indices))
        return indptr, indices

    @cached_property
    def _index_sums(self) -> tuple[int, int, int, int, int]:
        try:
            return tuple(_kernels.index_sums(*self._csr))
        except OverflowError as exc:
            raise IndexOverflow(str(exc)) from None


@dataclass(frozen=True)
class IndexReport:
    m1: int
    m2: int
    f: int
    hm: int

    def as_dict(self) -> dict[str, int]:
        return {"m1": self.m1, "m2": self.m2, "f": self.f, "hm": self.hm}


def new_graph(vertex_count: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from an edge list; repeated edges are merged silently."""
    if vertex_count < 0:
        raise OutOfRange(f"negative vertex count {vertex_count}")
    adj: list[set[int]] = [set() for _ in range(vertex_count)]
    for u, v in edges:
        if not (0 <= u < vertex_count and 0 <= v < vertex_count):
            raise OutOfRange(f"edge ({u}, {v}) has an endpoint outside 0..{vertex_count - 1}")
        if u == v:
            raise SelfLoop(f"self-loop at vertex {u}")
        adj[u].add(v)
        adj[v].add(u)
    return Graph(vertex_count, tuple(frozenset(a) for a in adj))


def _check_vertex(g: Graph, u: int) -> None:
    if not 0 <= u < g.vertex_count:
        raise OutOfRange(f"vertex {u} not in 0..{g.vertex_count - 1}")


def degree(g: Graph, u: int) -> int:
    _check_vertex(g, u)
    return len(g.adjacency[u])


def neighbor_degree_sum(g: Graph, u: int) -> int:
    """Sum of the degrees of the neighbours of ``u``."""
    _check_vertex(g, u)
    return sum(len(g.adjacency[x]) for x in g.adjacency[u])


def neighbor_degree_sums(g: Graph) -> list[int]:
    try:
        return list(_kernels.neighbor_degree_sums(*g._csr))
    except OverflowError as exc:
        raise IndexOverflow(str(exc)) from None


def hyper_zagreb(g: Graph) -> int:
    """Sum over edges ``uv`` of ``(deg u + deg v)**2``."""
    return g._index_sums[4]


def first_zagreb(g: Graph) -> int:
    """Sum of squared degrees, cross-checked against the edge-wise form."""
    m1v, m1e = g._index_sums[:2]
    if m1v != m1e:
        raise InternalIdentityViolation(f"vertex-wise M1 {m1v} != edge-wise M1 {m1e}")
    return m1v


def first_zagreb_edgewise(g: Graph) -> int:
    return g._index_sums[1]


def second_zagreb(g: Graph) -> int:
    """Sum over edges of the product of endpoint degrees."""
    return g._index_sums[2]


def forgotten_index(g: Graph) -> int:
    """Sum of cubed degrees (the F-index)."""
    return g._index_sums[3]


def index_report(g: Graph) -> IndexReport:
    report = IndexReport(
        m1=first_zagreb(g), m2=second_zagreb(g), f=forgotten_index(g), hm=hyper_zagreb(g)
    )
    if report.hm != report.f + 2 * report.m2:
        raise InternalIdentityViolation(f"HM != F + 2*M2 for {report}")
    return report


def is_connected(g: Graph) -> bool:
    """Breadth-first connectivity check; the empty graph counts as connected."""
    if g.vertex_count == 0:
        return True
    seen = {0}
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for v in g.adjacency[u]:
            if v not in seen:
                seen.add(v)
                queue.append(v)
    return len(seen) == g.vertex_count


def _parse_int(token: str, lineno: int) -> int:
    if not token.isdigit() or not token.isascii():
        raise ParseError(lineno, f"expected a nonnegative integer, got {token!r}")
    return int(token)


def _parse_pair(line: str, lineno: int) -> tuple[int, int]:
    parts = line.split(" ")
    if len(parts) != 2:
        raise ParseError(lineno, f"expected two integers separated by a space, got {line!r}")
    return _parse_int(parts[0], lineno), _parse_int(parts[1], lineno)


def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list text format.

    Lines starting with ``#`` and blank lines are skipped. The first data line
    is ``<vertex_count> <edge_count>``, followed by exactly ``edge_count``
    lines ``<u> <v>``.
    """
    header: tuple[int, int] | None = None
    edges: list[tuple[int, int]] = []
    lineno = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.rstrip("\r")
        if not line or line.startswith("#"):
            continue
        pair = _parse_pair(line, lineno)
        if header is None:
            header = pair
            continue
        if len(edges) == header[1]:
            raise ParseError(lineno, f"more than the declared {header[1]} edges")
        u, v = pair
        if u >= header[0] or v >= header[0]:
            raise OutOfRange(f"line {lineno}: endpoint outside 0..{header[0] - 1}")
        if u == v:
            raise SelfLoop(f"line {lineno}: self-loop at vertex {u}")
        edges.append(pair)
    if header is None:
        raise ParseError(max(lineno, 1), "missing '<vertex_count> <edge_count>' header")
    if len(edges) != header[1]:
        raise ParseError(lineno, f"declared {header[1]} edges, found {len(edges)}")
    return new_graph(header[0], edges)


def emit_edge_list(g: Graph) -> str:
    lines = [f"{g.vertex_count} {g.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"
