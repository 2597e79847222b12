"""Loopcut services layer.

Pruning and forest tests, the network-to-graph reduction, the greedy and
exact solvers, instance generation and the experiment harness.
"""

from .exact_oracle import enumerate_minimal_fvs, min_loop_cutset, min_wvfs, min_wvfs_exhaustive
from .graph_core import core_graph, degree, is_forest, prune_leaves
from .pipeline import loop_cutset, solve_graph
from .reduction import (
    enumerate_loops,
    instance_count,
    instance_count_log,
    is_loop_cutset,
    is_loop_cutset_by_definition,
    psi,
    split,
)
from .solvers import (
    charge_totals,
    is_minimal_fvs,
    run_ga,
    run_mga,
    validate_charges,
    validate_trace,
    verify_fvs,
)

__all__ = [
    "charge_totals",
    "core_graph",
    "degree",
    "enumerate_loops",
    "enumerate_minimal_fvs",
    "instance_count",
    "instance_count_log",
    "is_forest",
    "is_loop_cutset",
    "is_loop_cutset_by_definition",
    "is_minimal_fvs",
    "loop_cutset",
    "min_loop_cutset",
    "min_wvfs",
    "min_wvfs_exhaustive",
    "prune_leaves",
    "psi",
    "run_ga",
    "run_mga",
    "solve_graph",
    "split",
    "validate_charges",
    "validate_trace",
    "verify_fvs",
]
