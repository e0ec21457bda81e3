"""
epglab core modules
"""

from .errors import (
    EpglabError, ParameterError, UsageError, TableValidationError, MalformedTableError,
    LatinSquareError, IdentityError, InverseError, AssociativityError, CapacityError,
    DisconnectedGraphError, ConsistencyError,
)
from .group import (
    FiniteGroup, CyclicSubgroup, GroupFamily, SDElementKind,
    make_semidihedral, make_generalized_quaternion, make_dihedral, build_family_group,
    load_cayley_table, render_cayley_table, validate_cayley_table,
    element_order, cyclic_subgroup, cyclic_subgroups, maximal_cyclic_subgroups,
    sd_element_kind, sd_partner,
)
from .graph import (
    SimpleGraph, enhanced_power_graph, enhanced_power_graph_bruteforce, power_graph,
    sd_neighborhood_oracle, complete, edgeless, disjoint_union, join, copies,
    quaternion_decomposition, quaternion_decomposition_as_printed,
    dihedral_decomposition, semidihedral_decomposition, is_isomorphic,
)
from .polynomial import IntPolynomial
from .metric import (
    DistanceKind, DistanceMatrix, BoundaryReport, all_pairs_geodesic, eccentricities,
    radius, diameter, distance_degree_sequence, center, eccentric_subgraph,
    is_eccentric_graph, closure, is_closed, boundary_interior,
)
from .resolving import (
    TwinKind, TwinClass, ResolvingReport, ResolvingFormulaCoverage, twin_classes,
    twin_lower_bound, is_resolving, metric_dimension, resolving_counts,
    sd_metric_basis_witness, sd_resolving_coverage, sd_resolving_polynomial_closed_form,
    sd_resolving_polynomial_product_form,
)
from .detour import (
    DetourEngine, SubsetDPEngine, BranchAndBoundEngine, DetourEngineFactory, DetourProfile,
    all_pairs_detour, detour_row, detour_profile, sd_detour_closed_form, sd_dds_closed_form,
    sd_detour_profile_closed_form,
)
from .spectra import (
    SpectrumSummary, laplacian_matrix, faddeev_leverrier, bareiss_determinant,
    laplacian_charpoly, integer_spectrum, spanning_tree_count, closed_form_spectrum,
    closed_form_charpoly, closed_form_spanning_trees,
)

__all__ = [
    # 错误
    "EpglabError", "ParameterError", "UsageError", "TableValidationError",
    "MalformedTableError", "LatinSquareError", "IdentityError", "InverseError",
    "AssociativityError", "CapacityError", "DisconnectedGraphError", "ConsistencyError",

    # 群
    "FiniteGroup", "CyclicSubgroup", "GroupFamily", "SDElementKind",
    "make_semidihedral", "make_generalized_quaternion", "make_dihedral", "build_family_group",
    "load_cayley_table", "render_cayley_table", "validate_cayley_table",
    "element_order", "cyclic_subgroup", "cyclic_subgroups", "maximal_cyclic_subgroups",
    "sd_element_kind", "sd_partner",

    # 图
    "SimpleGraph", "enhanced_power_graph", "enhanced_power_graph_bruteforce", "power_graph",
    "sd_neighborhood_oracle", "complete", "edgeless", "disjoint_union", "join", "copies",
    "quaternion_decomposition", "quaternion_decomposition_as_printed",
    "dihedral_decomposition", "semidihedral_decomposition", "is_isomorphic",

    # 多项式
    "IntPolynomial",

    # 距离
    "DistanceKind", "DistanceMatrix", "BoundaryReport", "all_pairs_geodesic",
    "eccentricities", "radius", "diameter", "distance_degree_sequence", "center",
    "eccentric_subgraph", "is_eccentric_graph", "closure", "is_closed", "boundary_interior",

    # 可解析集
    "TwinKind", "TwinClass", "ResolvingReport", "ResolvingFormulaCoverage", "twin_classes",
    "twin_lower_bound", "is_resolving", "metric_dimension", "resolving_counts",
    "sd_metric_basis_witness", "sd_resolving_coverage", "sd_resolving_polynomial_closed_form",
    "sd_resolving_polynomial_product_form",

    # 最长路
    "DetourEngine", "SubsetDPEngine", "BranchAndBoundEngine", "DetourEngineFactory",
    "DetourProfile", "all_pairs_detour", "detour_row", "detour_profile",
    "sd_detour_closed_form", "sd_dds_closed_form", "sd_detour_profile_closed_form",

    # 谱
    "SpectrumSummary", "laplacian_matrix", "faddeev_leverrier", "bareiss_determinant",
    "laplacian_charpoly", "integer_spectrum", "spanning_tree_count", "closed_form_spectrum",
    "closed_form_charpoly", "closed_form_spanning_trees",
]
