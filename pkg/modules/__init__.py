"""
hyperminor - Core Modules
Un módulo por pieza de la construcción
"""

from .hypercube_core import (
    CubeVertex, GrayCycle, CycleEmbedding, hamming, is_cube_edge, neighbors,
    gray_cycle, even_cycle_embedding
)
from .grid_perm import (
    GridShape, GridPoint, GridPerm, OneDimPerm, RegularBipartiteMultigraph,
    apply, compose_equals, split_into_matchings, decompose
)
from .minor_embed import (
    GuestGraph, EmbedParams, MinorModel, feasible_params, max_edges_for_dimension,
    embed, petersen_graph
)
from .verifier import VerifyReport, verify
from .expander import (
    CubicGraph, ExpansionReport, Placement, BoundReport, CertificateReport, TheoremReport,
    gen_cubic, check_expansion, expansion_survey, bound_report,
    subcubic_nonminor_certificate, weight_tail, theorem_inequality, theorem_scan,
    weight_tail_threshold
)

__all__ = [
    'CubeVertex',
    'GrayCycle',
    'CycleEmbedding',
    'hamming',
    'is_cube_edge',
    'neighbors',
    'gray_cycle',
    'even_cycle_embedding',
    'GridShape',
    'GridPoint',
    'GridPerm',
    'OneDimPerm',
    'RegularBipartiteMultigraph',
    'apply',
    'compose_equals',
    'split_into_matchings',
    'decompose',
    'GuestGraph',
    'EmbedParams',
    'MinorModel',
    'feasible_params',
    'max_edges_for_dimension',
    'embed',
    'petersen_graph',
    'VerifyReport',
    'verify',
    'CubicGraph',
    'ExpansionReport',
    'Placement',
    'BoundReport',
    'CertificateReport',
    'TheoremReport',
    'gen_cubic',
    'check_expansion',
    'expansion_survey',
    'bound_report',
    'subcubic_nonminor_certificate',
    'weight_tail',
    'theorem_inequality',
    'theorem_scan',
    'weight_tail_threshold',
]
