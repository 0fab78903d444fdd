"""Parametric graph families and their closed-form hyper Zagreb values.

Composite families (comb lattices, van Hove lattice, polyphenyl and spiro
chains) are assembled through :mod:`hyperzagreb.compose`, so every generated
graph also passes the degree-lemma checks.

Random components use :class:`random.Random` (MT19937) seeded with the given
unsigned 64-bit integer; only ``randrange`` and ``sample`` are drawn from it.
"""

from __future__ import annotations

import heapq
import random
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable

from .compose import AnchoredComponent, CompositeKind, CompositeResult, bridge_b1, bridge_b2, chain
from .errors import AdjacentAnchors, BadParameter
from .graph import Graph, new_graph

SEED_MAX = 2**64 - 1


def cycle(n: int) -> Graph:
    if n < 3:
        raise BadParameter(f"cycle needs n >= 3, got n={n}")
    return new_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(m: int) -> Graph:
    if m < 1:
        raise BadParameter(f"path needs m >= 1, got m={m}")
    return new_graph(m, [(i, i + 1) for i in range(m - 1)])


def comb_t_parts(d: int, n: int) -> list[AnchoredComponent]:
    if d < 2 or n < 3:
        raise BadParameter(f"comb_t needs d >= 2 and n >= 3, got d={d}, n={n}")
    return [AnchoredComponent(cycle(n), 0)] * d


def comb_t(d: int, n: int) -> CompositeResult:
    """``d`` cycles ``C_n`` bridged at one vertex each (``T_{d,n}``)."""
    return bridge_b1(comb_t_parts(d, n))


def bridge_b_parts(d: int) -> list[AnchoredComponent]:
    if d < 2:
        raise BadParameter(f"bridge_b needs d >= 2, got d={d}")
    return [AnchoredComponent(path(3), 1)] * d


def bridge_b_family(d: int) -> CompositeResult:
    """``d`` copies of ``P_3`` bridged at their middle vertices."""
    return bridge_b1(bridge_b_parts(d))


def comb_a_parts(d: int, m: int) -> list[AnchoredComponent]:
    if d < 2 or m < 2:
        raise BadParameter(f"comb_a needs d >= 2 and m >= 2, got d={d}, m={m}")
    return [AnchoredComponent(path(m), 0)] * d


def comb_a(d: int, m: int) -> CompositeResult:
    """``d`` paths ``P_m`` bridged at an end vertex (``A_{d,m}``)."""
    return bridge_b1(comb_a_parts(d, m))


def van_hove_parts(n: int) -> list[AnchoredComponent]:
    if n < 1:
        raise BadParameter(f"van_hove needs n >= 1, got n={n}")
    lengths = list(range(1, n + 1)) + list(range(n - 1, 0, -1))
    return [AnchoredComponent(path(m), 0) for m in lengths]


def van_hove(n: int) -> CompositeResult:
    """Van Hove comb lattice: paths ``P_1 .. P_n .. P_1`` bridged at an end."""
    return bridge_b1(van_hove_parts(n))


class PolyKind(str, Enum):
    ORTHO = "ortho"
    META = "meta"
    PARA = "para"


def polyphenyl_parts(h: int, kind: PolyKind | str) -> list[AnchoredComponent]:
    kind = PolyKind(kind)
    if h < 1:
        raise BadParameter(f"polyphenyl needs h >= 1, got h={h}")
    if kind is PolyKind.ORTHO:
        return [AnchoredComponent(cycle(6), 0)] * h
    return [AnchoredComponent(cycle(6), 0, 2 if kind is PolyKind.META else 3)] * h


def polyphenyl(h: int, kind: PolyKind | str) -> CompositeResult:
    """Chain of ``h`` hexagons.

    Meta and para chains join hexagons through anchors at cyclic distance 2
    and 3. The ortho chain follows the single-anchor bridge model, which
    attaches both neighbours to the same ring atom rather than to adjacent ones.
    """
    parts = polyphenyl_parts(h, kind)
    return bridge_b1(parts) if PolyKind(kind) is PolyKind.ORTHO else bridge_b2(parts)


def spiro_parts(n: int, k: int, l: int, d: int) -> list[AnchoredComponent]:
    if n < 4:
        raise BadParameter(f"spiro needs n >= 4 (C_3 has no non-adjacent vertex pair), got n={n}")
    if d < 2:
        raise BadParameter(f"spiro needs d >= 2, got d={d}")
    if not (0 <= k < n and 0 <= l < n):
        raise BadParameter(f"spiro positions must lie in 0..{n - 1}, got k={k}, l={l}")
    if (k - l) % n in (0, 1, n - 1):
        raise AdjacentAnchors(f"spiro positions k={k}, l={l} must be distinct and non-adjacent on C_{n}")
    return [AnchoredComponent(cycle(n), k, l)] * d


def spiro(n: int, k: int, l: int, d: int) -> CompositeResult:
    """Spiro chain of ``d`` cycles ``C_n`` glued at positions ``k`` and ``l``."""
    return chain(spiro_parts(n, k, l, d))


def _prufer_tree(seq: list[int], n: int) -> list[tuple[int, int]]:
    remaining = [1] * n
    for x in seq:
        remaining[x] += 1
    leaves = [u for u in range(n) if remaining[u] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((min(leaf, x), max(leaf, x)))
        remaining[x] -= 1
        if remaining[x] == 1:
            heapq.heappush(leaves, x)
    u, v = heapq.heappop(leaves), heapq.heappop(leaves)
    edges.append((u, v))
    return edges


def random_connected(n: int, extra_edges: int, seed: int) -> Graph:
    """Uniform random labelled spanning tree plus ``extra_edges`` random chords.

    The tree comes from a uniformly drawn Prüfer sequence; the chords are
    sampled without replacement from the non-tree pairs in lexicographic order.
    """
    if n < 1:
        raise BadParameter(f"random needs n >= 1, got n={n}")
    if not 0 <= seed <= SEED_MAX:
        raise BadParameter(f"seed must be an unsigned 64-bit integer, got {seed}")
    capacity = n * (n - 1) // 2 - (n - 1)
    if not 0 <= extra_edges <= capacity:
        raise BadParameter(f"extra_edges must lie in 0..{capacity} for n={n}, got {extra_edges}")
    rng = random.Random(seed)
    if n == 1:
        return new_graph(1, [])
    if n == 2:
        return new_graph(2, [(0, 1)])
    tree = _prufer_tree([rng.randrange(n) for _ in range(n - 2)], n)
    in_tree = set(tree)
    chords = [(u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in in_tree]
    return new_graph(n, tree + rng.sample(chords, extra_edges))


def random_component(rng: random.Random, n_min: int = 3, n_max: int = 9,
                     two_anchors: bool = True) -> AnchoredComponent:
    """Random connected anchored component for sweeps.

    With ``two_anchors`` the anchors are a uniformly chosen non-adjacent pair;
    graphs without one (complete graphs) are redrawn.
    """
    while True:
        n = rng.randint(n_min, n_max)
        capacity = n * (n - 1) // 2 - (n - 1)
        g = random_connected(n, rng.randint(0, min(capacity, n)), rng.getrandbits(64))
        if not two_anchors:
            return AnchoredComponent(g, rng.randrange(n))
        pairs = [(u, v) for u in range(n) for v in range(n)
                 if u != v and v not in g.adjacency[u]]
        if pairs:
            return AnchoredComponent(g, *rng.choice(pairs))


# -- example closed forms ------------------------------------------------------


@dataclass(frozen=True)
class FormulaValue:
    """A closed-form value tagged with whether the point lies in its valid range."""

    value: int
    valid: bool


class Family(str, Enum):
    CYCLE = "cycle"
    PATH = "path"
    COMB_T = "comb_t"
    BRIDGE_B = "bridge_b"
    COMB_A = "comb_a"
    VAN_HOVE = "van_hove"
    POLY_ORTHO = "poly_ortho"
    POLY_META = "poly_meta"
    POLY_PARA = "poly_para"
    SPIRO = "spiro"
    RANDOM = "random"


@dataclass(frozen=True)
class FamilyInfo:
    params: tuple[str, ...]
    build: Callable[..., Graph | CompositeResult]
    formula: Callable[..., int] | None = None
    valid: Callable[..., bool] | None = None
    defaults: dict[str, tuple[int, int]] = field(default_factory=dict)
    kind: CompositeKind | None = None
    parts: Callable[..., list[AnchoredComponent]] | None = None


FAMILIES: dict[Family, FamilyInfo] = {
    Family.CYCLE: FamilyInfo(("n",), cycle),
    Family.PATH: FamilyInfo(("m",), path),
    Family.COMB_T: FamilyInfo(
        ("d", "n"), comb_t,
        lambda d, n: 16 * n * d + 104 * d - 138,
        lambda d, n: d >= 3,
        {"d": (3, 10), "n": (3, 10)},
        CompositeKind.B1, comb_t_parts,
    ),
    Family.BRIDGE_B: FamilyInfo(
        ("d",), bridge_b_family,
        lambda d: 114 * d - 130,
        lambda d: d >= 3,
        {"d": (3, 12)},
        CompositeKind.B1, bridge_b_parts,
    ),
    Family.COMB_A: FamilyInfo(
        ("d", "m"), comb_a,
        lambda d, m: 16 * m * d + 22 * d - 76,
        lambda d, m: d >= 3 and m >= 3,
        {"d": (3, 10), "m": (3, 10)},
        CompositeKind.B1, comb_a_parts,
    ),
    Family.VAN_HOVE: FamilyInfo(
        ("n",), van_hove,
        lambda n: 16 * n * n + 44 * n - 106,
        lambda n: n >= 3,
        {"n": (3, 8)},
        CompositeKind.B1, van_hove_parts,
    ),
    Family.POLY_ORTHO: FamilyInfo(
        ("h",), lambda h: polyphenyl(h, PolyKind.ORTHO),
        lambda h: 200 * h - 138,
        lambda h: h >= 3,
        {"h": (3, 10)},
        CompositeKind.B1, lambda h: polyphenyl_parts(h, PolyKind.ORTHO),
    ),
    Family.POLY_META: FamilyInfo(
        ("h",), lambda h: polyphenyl(h, PolyKind.META),
        lambda h: 168 * h - 72,
        lambda h: h >= 1,
        {"h": (1, 10)},
        CompositeKind.B2, lambda h: polyphenyl_parts(h, PolyKind.META),
    ),
    Family.POLY_PARA: FamilyInfo(
        ("h",), lambda h: polyphenyl(h, PolyKind.PARA),
        lambda h: 168 * h - 72,
        lambda h: h >= 1,
        {"h": (1, 10)},
        CompositeKind.B2, lambda h: polyphenyl_parts(h, PolyKind.PARA),
    ),
    Family.SPIRO: FamilyInfo(
        ("n", "k", "l", "d"), spiro,
        lambda n, k, l, d: 16 * n * d + 80 * d - 80,
        lambda n, k, l, d: True,
        {"n": (4, 8), "d": (2, 10)},
        CompositeKind.CHAIN, spiro_parts,
    ),
    Family.RANDOM: FamilyInfo(("n", "extra", "seed"), random_connected),
}

# smallest in-domain values, used when out-of-range points are requested
DOMAIN_MIN = {
    Family.COMB_T: {"d": 2, "n": 3},
    Family.BRIDGE_B: {"d": 2},
    Family.COMB_A: {"d": 2, "m": 2},
    Family.VAN_HOVE: {"n": 1},
    Family.POLY_ORTHO: {"h": 1},
    Family.POLY_META: {"h": 1},
    Family.POLY_PARA: {"h": 1},
    Family.SPIRO: {"n": 4, "d": 2},
}


@dataclass(frozen=True)
class FamilySpec:
    family: Family
    params: dict[str, int]

    def __post_init__(self) -> None:
        info = FAMILIES[Family(self.family)]
        missing = [p for p in info.params if p not in self.params]
        extra = [p for p in self.params if p not in info.params]
        if missing or extra:
            raise BadParameter(
                f"{Family(self.family).value} takes parameters {', '.join(info.params)}"
                + (f"; missing {', '.join(missing)}" if missing else "")
                + (f"; unexpected {', '.join(extra)}" if extra else "")
            )

    def ordered_params(self) -> list[int]:
        return [self.params[p] for p in FAMILIES[Family(self.family)].params]


def build(spec: FamilySpec) -> Graph | CompositeResult:
    return FAMILIES[Family(spec.family)].build(*spec.ordered_params())


def build_graph(spec: FamilySpec) -> Graph:
    out = build(spec)
    return out.graph if isinstance(out, CompositeResult) else out


def example_hm(spec: FamilySpec) -> FormulaValue | None:
    """The family's published closed form at ``spec``; ``None`` if it has none.

    Points outside the established validity range still get a value, tagged
    ``valid=False``, so sweeps can chart the discrepancy region.
    """
    info = FAMILIES[Family(spec.family)]
    if info.formula is None:
        return None
    args = spec.ordered_params()
    return FormulaValue(info.formula(*args), info.valid(*args))


def composition(spec: FamilySpec) -> tuple[CompositeKind, list[AnchoredComponent]] | None:
    """How a composite family is assembled; ``None`` for base families."""
    info = FAMILIES[Family(spec.family)]
    if info.parts is None:
        return None
    return info.kind, info.parts(*spec.ordered_params())
