"""Algebraic entropy of path, Cohn and Leavitt path algebras of finite graphs."""

from gael.entropy import (
    closed_form_entropy,
    entropy_estimate,
    norm_bound_check,
    spectral_radius,
    verify_chain,
)
from gael.exact import ExactMatrix, entry_norm, mat_mul, mat_pow, path_count_vector
from gael.filtration import (
    DimSequence,
    dim_sequence,
    graded_dim_cohn,
    graded_dim_path,
    graded_dim_relative,
)
from gael.graph import (
    Graph,
    GraphError,
    adjacency_matrix,
    classify_vertices,
    parse_edge_list,
    parse_graph,
    random_graph,
    serialize,
)

__version__ = "0.1.0"
