"""Crossings and nestings of set partitions: the partition tree, Charlier
diagrams, similarity classes and generating functions."""

from .partition_core import (Arc, PartitionParseError, SetPartition, VertexRole, al, arcs, cr,
                             enumerate_partitions, enumerate_partitions_k, ne, parse_partition,
                             stats, to_canonical, vertex_roles)
from .partition_tree import children, level, level_m, parent, stat_distribution
from .group_seq import GroupVec, f_gamma_r, level_seq_multiset, op_M, op_R, seq_stat, uv_seq

__all__ = [
    "Arc", "PartitionParseError", "SetPartition", "VertexRole", "al", "arcs", "cr",
    "enumerate_partitions", "enumerate_partitions_k", "ne", "parse_partition", "stats",
    "to_canonical", "vertex_roles", "children", "level", "level_m", "parent",
    "stat_distribution", "GroupVec", "f_gamma_r", "level_seq_multiset", "op_M", "op_R",
    "seq_stat", "uv_seq",
]
