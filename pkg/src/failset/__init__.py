"""Minimum distance-ell, k-component failure sets on trees."""

from .estimator import FailureSetSolver, check_graph
from .exceptions import FailsetError, InputError, OracleRefusal, ParseError, StructureError
from .graph import (
    Graph,
    Instance,
    RootedTree,
    bfs_distances,
    closed_neighborhood,
    comp_order,
    diameter,
    is_failure_set,
    parse_edge_list,
    surviving_components,
    validate_tree,
)
from .solver import SolveResult, ell_generation_descendants, lambda_number, solve, solve_forest
from .verification import OracleResult, brute_force_minimum, build_mapping, check_mapping_lemmas

__version__ = "0.1.0"

__all__ = [
    "FailsetError",
    "FailureSetSolver",
    "Graph",
    "InputError",
    "Instance",
    "OracleRefusal",
    "OracleResult",
    "ParseError",
    "RootedTree",
    "SolveResult",
    "StructureError",
    "bfs_distances",
    "brute_force_minimum",
    "build_mapping",
    "check_graph",
    "check_mapping_lemmas",
    "closed_neighborhood",
    "comp_order",
    "diameter",
    "ell_generation_descendants",
    "is_failure_set",
    "lambda_number",
    "parse_edge_list",
    "solve",
    "solve_forest",
    "surviving_components",
    "validate_tree",
]
