"""Symbolic toolkit for symmetry groups of spatial graphs with locally knotted edges.

Computes, over permutation groups and symbolic knot labels: subgroup
classification inside products of dihedral groups, realizability checks for
automorphisms of complete graphs, and knot-labeling certificates that pin a
chosen subgroup as the refined symmetry group of a labeled embedding.
"""

from .errors import DomainError, VerificationError
from .perms import CycleType, Permutation, cycle_type, parse_cycles
from .groups import GroupFingerprint, PermGroup, enumerate_subgroups, fingerprint, isomorphic
from .graphs import Graph, Subgraph, complete_graph, embeds_in_circle, fixed_subgraph, is_three_connected
from .labels import KnotLabel, LabeledEmbedding, PrimeKnot
from .dihedral import (
    DihedralProduct,
    Family,
    GroupClassification,
    build_dihedral_product,
    classify_subgroup,
    reference_group,
    sigma,
    verify_classification,
)
from .realize import (
    Certificate,
    RealizabilityVerdict,
    check_automorphism,
    check_group_realizable_shape,
    default_alphabet,
    find_free_edge,
    prop1_witness,
    prop2_witness,
    realize_subgroup,
    subgroup_theorem_hypothesis,
)

__all__ = [
    "Certificate",
    "CycleType",
    "DihedralProduct",
    "DomainError",
    "Family",
    "Graph",
    "GroupClassification",
    "GroupFingerprint",
    "KnotLabel",
    "LabeledEmbedding",
    "PermGroup",
    "Permutation",
    "PrimeKnot",
    "RealizabilityVerdict",
    "Subgraph",
    "VerificationError",
    "build_dihedral_product",
    "check_automorphism",
    "check_group_realizable_shape",
    "classify_subgroup",
    "complete_graph",
    "cycle_type",
    "default_alphabet",
    "embeds_in_circle",
    "enumerate_subgroups",
    "find_free_edge",
    "fingerprint",
    "fixed_subgraph",
    "is_three_connected",
    "isomorphic",
    "parse_cycles",
    "prop1_witness",
    "prop2_witness",
    "realize_subgroup",
    "reference_group",
    "sigma",
    "subgroup_theorem_hypothesis",
    "verify_classification",
]
