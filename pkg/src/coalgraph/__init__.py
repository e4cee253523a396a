"""Exact coalition numbers, coalition counts and coalition graphs of small graphs."""

from .coalition import (
    Partition,
    PartitionAssessment,
    SearchOutcome,
    assess_partition,
    coalition_count,
    coalition_graph,
    coalition_number,
    cpartition_from_domatic,
    forms_coalition,
    is_sp_graph,
)
from .domination import domatic_number, independence_number, is_dominating
from .graph_core import (
    FamilySpec,
    Graph,
    VertexSet,
    are_isomorphic,
    canonical_certificate,
    combine,
    complement,
    encode_graph,
    enumerate_graphs,
    make_family,
    parse_graph,
    vertex_roles,
)
from .hstar import build_hstar, validate_hstar
from .kernels import BACKEND

__version__ = "0.1.0"
