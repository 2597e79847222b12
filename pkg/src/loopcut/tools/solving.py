"""Solve and generate tools operating on the text formats."""

from __future__ import annotations

import json

from ..core.config import LoopcutConfig
from ..core.logging import get_logger
from ..services.instance_gen import instance_spec, random_dag
from ..services.pipeline import loop_cutset, solve_graph
from ..utils.textformat import parse_graph, parse_network, write_network

logger = get_logger(__name__)


def solve_network_text(network: str, algorithm: str = "mga", skip_phase2: bool = False) -> str:
    """Find a loop cutset of a network given in the `node`/`edge` text format.

    Returns the result as JSON: cutset members, total log-weight and the
    exact instance count.
    """
    d = parse_network(network, source="<network>")
    result = loop_cutset(d, algorithm, config=_config(), skip_phase2=skip_phase2)
    logger.info("Network solved by tool", algorithm=algorithm, set_size=result.size)
    return result.model_dump_json(exclude={"charges", "trace"})


def solve_graph_text(graph: str, algorithm: str = "mga", skip_phase2: bool = False) -> str:
    """Find a weighted vertex feedback set of a graph in the `vertex`/`edge` text format."""
    g = parse_graph(graph, source="<graph>")
    result = solve_graph(g, algorithm, config=_config(), skip_phase2=skip_phase2)
    logger.info("Graph solved by tool", algorithm=algorithm, set_size=result.size)
    return result.model_dump_json(exclude={"charges", "trace"})


def generate_network_text(
    nodes: int,
    edges: int,
    domain_lo: int = 2,
    domain_hi: int = 2,
    seed: int = 0,
) -> str:
    """Generate one seeded random DAG and return it in the network text format."""
    spec = instance_spec(
        n_vertices=nodes,
        n_edges=edges,
        domain_lo=domain_lo,
        domain_hi=domain_hi,
        seed=seed,
    )
    text = write_network(random_dag(spec))
    return json.dumps({"seed": seed, "network": text})


def _config() -> LoopcutConfig:
    return LoopcutConfig.from_environment()
