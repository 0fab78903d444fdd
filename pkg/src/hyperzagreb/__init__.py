"""Hyper Zagreb index of bridge and chain graphs, with brute-force checks."""

from ._kernels import BACKEND_NAME
from .closed_form import (
    ComponentSummary,
    FormulaVariant,
    hm_b1_corrected,
    hm_b1_printed,
    hm_b1_uniform,
    hm_b2_printed,
    hm_b2_uniform,
    hm_b2_verbatim,
    hm_chain_corrected,
    hm_chain_printed,
    hm_chain_uniform,
    summarize,
)
from .compose import AnchoredComponent, CompositeKind, CompositeResult, bridge_b1, bridge_b2, chain
from .graph import (
    Graph,
    IndexReport,
    degree,
    emit_edge_list,
    first_zagreb,
    forgotten_index,
    hyper_zagreb,
    index_report,
    is_connected,
    neighbor_degree_sum,
    new_graph,
    parse_edge_list,
    second_zagreb,
)

__version__ = "0.1.0"
