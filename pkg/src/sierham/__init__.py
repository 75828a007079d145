"""Sierpinski graphs, Hamming graphs, twist recoordinatizations, and
Tower-of-Hanoi solvers."""

from .codes import eta, eta_inverse, gamma, gray_sequence
from .graphs import (
    Graph,
    PermutationSymmetry,
    Vertex,
    apply_symmetry,
    build_hamming,
    build_sierpinski,
    build_single_twist,
    corners,
    edge_density,
    from_edge_list,
    hamming_edge_count,
    is_sierpinski_edge,
    km_decomposition,
    sierpinski_edge_count,
)
from .hanoi import (
    HanoiPosition,
    MovePath,
    classic_solution,
    constant_corner_search,
    diplomats_table,
    is_legal_move,
    is_legal_move_physical,
    path_length_to_zero,
    position_coordinate,
    shortest_path_to_zero,
    solve_from_position,
    wolfe_coordinate,
)
from .maps import (
    LinearMap,
    TwistFamily,
    compose_linear_maps,
    embedding_matrix,
    epsilon_forward,
    invert_linear_map,
    layout_metrics,
    phi_forward,
    phi_inverse,
    phi_recursive,
    tau_forward,
    tau_inverse,
    verify_coordinatization,
    verify_embedding,
)

__version__ = "0.1.0"

__all__ = [
    "Graph",
    "HanoiPosition",
    "LinearMap",
    "MovePath",
    "PermutationSymmetry",
    "TwistFamily",
    "Vertex",
    "apply_symmetry",
    "build_hamming",
    "build_sierpinski",
    "build_single_twist",
    "classic_solution",
    "compose_linear_maps",
    "constant_corner_search",
    "corners",
    "diplomats_table",
    "edge_density",
    "embedding_matrix",
    "epsilon_forward",
    "eta",
    "eta_inverse",
    "from_edge_list",
    "gamma",
    "gray_sequence",
    "hamming_edge_count",
    "invert_linear_map",
    "is_legal_move",
    "is_legal_move_physical",
    "is_sierpinski_edge",
    "km_decomposition",
    "layout_metrics",
    "path_length_to_zero",
    "phi_forward",
    "phi_inverse",
    "phi_recursive",
    "position_coordinate",
    "shortest_path_to_zero",
    "sierpinski_edge_count",
    "solve_from_position",
    "tau_forward",
    "tau_inverse",
    "verify_coordinatization",
    "verify_embedding",
    "wolfe_coordinate",
]
