"""Solver dispatch with result self-checks, for graphs and networks."""

from __future__ import annotations

from typing import Optional

from ..core.config import LoopcutConfig
from ..core.errors import SelfCheckError, ValidationError
from ..core.logging import ContextLogger, timed
from ..models.multigraph import WeightedMultigraph
from ..models.network import DirectedNetwork
from ..models.results import SolveResult
from .exact_oracle import min_loop_cutset, min_wvfs
from .reduction import instance_count, is_loop_cutset, psi, split
from .solvers import run_ga, run_mga, validate_charges, verify_fvs

ALGORITHMS = ("ga", "mga", "exact")

_log = ContextLogger(__name__)


def solve_graph(
    g: WeightedMultigraph,
    algorithm: str = "mga",
    *,
    config: Optional[LoopcutConfig] = None,
    skip_phase2: bool = False,
) -> SolveResult:
    """Run one WVFS solver on ``g`` and re-validate its answer.

    Raises:
        SelfCheckError: The returned set does not break every cycle, or MGA
            edge charges disagree with the selected weights.
    """
    config = config or LoopcutConfig()
    if algorithm == "ga":
        result = run_ga(g, clamp_tolerance=config.clamp_tolerance)
    elif algorithm == "mga":
        result = run_mga(
            g,
            skip_phase2=skip_phase2,
            phase2_method=config.phase2_method,
            clamp_tolerance=config.clamp_tolerance,
        )
    elif algorithm == "exact":
        result = min_wvfs(g, config.oracle)
    else:
        raise ValidationError(f"Unknown algorithm {algorithm!r}; expected one of {', '.join(ALGORITHMS)}")

    if not verify_fvs(g, result.vertices):
        raise SelfCheckError(f"{result.algorithm} returned a set that leaves a cycle")
    if algorithm == "mga" and not validate_charges(g, result, config.charge_tolerance):
        raise SelfCheckError(f"{result.algorithm} charges do not add up to the selected weights")
    return result


def loop_cutset(
    d: DirectedNetwork,
    algorithm: str = "mga",
    *,
    config: Optional[LoopcutConfig] = None,
    skip_phase2: bool = False,
) -> SolveResult:
    """Loop cutset of ``d``: solve the split graph, map back through psi.

    ``total_weight`` and ``instance_count_log`` are the sum of ln domain
    sizes; ``instance_count`` is their exact integer product.
    """
    config = config or LoopcutConfig()
    log = _log.bind(algorithm=algorithm, nodes=d.n_nodes, edges=d.n_edges)
    with timed(log, "Loop cutset found") as entry:
        result = _solve_network(d, algorithm, config, skip_phase2)
        if not is_loop_cutset(d, result.vertices):
            raise SelfCheckError(f"{result.algorithm} returned a set that misses a loop")
        entry.update(set_size=result.size, instances_log=result.instance_count_log)
    return result


def _solve_network(
    d: DirectedNetwork, algorithm: str, config: LoopcutConfig, skip_phase2: bool
) -> SolveResult:
    if algorithm == "exact":
        result = min_loop_cutset(d, config.oracle)
    else:
        g, smap = split(d)
        solved = solve_graph(g, algorithm, config=config, skip_phase2=skip_phase2)
        cutset = psi(solved.vertices, smap)
        vertices = [smap.origin[name][0] for name in solved.vertices]
        result = solved.model_copy(update={
            "vertices": vertices,
            "total_weight": cutset.total_weight,
            "instance_count_log": cutset.total_weight,
            "instance_count": instance_count(d, vertices),
            "phase2_removed": [smap.origin[name][0] for name in solved.phase2_removed],
        })
    return result
