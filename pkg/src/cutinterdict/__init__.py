"""Exact budgeted interdiction of linear minimization problems, with a full
instantiation for minimum-cut interdiction on undirected multigraphs."""
from .engine import ExplicitFamily, GraphCutFamily, InternalError, Options, Solution, solve, solve_explicit
from .instance import Edge, GroundSet, InstanceError, InterdictionInstance, parse_instance, truncate_weights
from .lagrangian import LambdaCertificate, eval_L, find_lambda_star, phi
from .oracle import brute_solve

__all__ = [
    "Edge", "ExplicitFamily", "GraphCutFamily", "GroundSet", "InstanceError", "InternalError",
    "InterdictionInstance", "LambdaCertificate", "Options", "Solution", "brute_solve", "eval_L",
    "find_lambda_star", "parse_instance", "phi", "solve", "solve_explicit", "truncate_weights",
]
