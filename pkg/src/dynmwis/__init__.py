"""Dynamic maximum (weight) independent sets via optimal neighborhood exploration."""

from .dynamic import PRESETS, Config, DynamicOne, UpdateStats, exhaustive_config, preset, run_sequence
from .estimator import DynamicIndependentSet
from .explorer import Subproblem, build_subproblem, pinch
from .graph import DynamicGraph
from .greedy import GreedyOutcome, deg_greedy_delete, deg_greedy_insert, greedy_delete, greedy_insert, phi
from .io import (
    EditSequence,
    RunReport,
    StaticGraph,
    assign_random_weights,
    parse_metis,
    parse_sequence,
    static_to_sequence,
    write_sequence,
)
from .oracle import brute_force_mwis, verify_independent, verify_maximal
from .solution import Solution, SolutionError
from .solver import SolverResult, improves, solve_graph, solve_mwis

__version__ = "0.1.0"

__all__ = [
    "Config",
    "DynamicGraph",
    "DynamicIndependentSet",
    "DynamicOne",
    "EditSequence",
    "GreedyOutcome",
    "PRESETS",
    "RunReport",
    "Solution",
    "SolutionError",
    "SolverResult",
    "StaticGraph",
    "Subproblem",
    "UpdateStats",
    "assign_random_weights",
    "brute_force_mwis",
    "build_subproblem",
    "deg_greedy_delete",
    "deg_greedy_insert",
    "exhaustive_config",
    "greedy_delete",
    "greedy_insert",
    "improves",
    "parse_metis",
    "parse_sequence",
    "phi",
    "pinch",
    "preset",
    "run_sequence",
    "solve_graph",
    "solve_mwis",
    "static_to_sequence",
    "verify_independent",
    "verify_maximal",
    "write_sequence",
]
