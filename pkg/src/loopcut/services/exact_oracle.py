"""Exact minimum-weight feedback sets and loop cutsets for small instances.

Branch-and-bound: prune leaves, find a short cycle, branch on which of its
finite-weight vertices is the first one taken (earlier ones are forbidden by
raising their weight to infinity), and cut any branch whose weight plus the
cheapest candidate on its cycle cannot beat the incumbent. The MGA solution
seeds the incumbent.
"""

from __future__ import annotations

import math
from collections import deque
from itertools import combinations
from typing import Optional

from ..core.errors import (
    BudgetExceededError,
    CapExceededError,
    UnbreakableCycleError,
)
from ..core.logging import ContextLogger
from ..models.multigraph import INFINITE, VertexSet, WeightedMultigraph
from ..models.network import DirectedNetwork
from ..models.results import OracleBudget, SolveResult
from .graph_core import core_graph, is_forest
from .reduction import instance_count, psi, split
from .solvers import is_minimal_fvs, run_mga, verify_fvs

EXHAUSTIVE_LIMIT = 20
ENUMERATION_LIMIT = 12

_log = ContextLogger(__name__)


def min_wvfs(g: WeightedMultigraph, budget: Optional[OracleBudget] = None) -> SolveResult:
    """Minimum-weight vertex feedback set of ``g``.

    The budget counts finite-weight vertices of the pruned core, the only
    vertices the search branches on.

    Raises:
        BudgetExceededError: Too many branchable vertices or search nodes.
        UnbreakableCycleError: Some cycle has no finite-weight vertex.
    """
    budget = budget or OracleBudget()
    core = core_graph(g)
    finite = _finite_names(core)
    if len(finite) > budget.max_vertices:
        raise BudgetExceededError(
            f"{len(finite)} branchable vertices exceed the oracle budget of {budget.max_vertices}"
        )
    if not is_forest(core, finite):
        raise UnbreakableCycleError("A cycle consists only of infinite-weight vertices")

    incumbent = run_mga(core)
    search = _BranchAndBound(budget.max_nodes_expanded, incumbent.vertices, incumbent.total_weight)
    search.expand(core, [], 0.0)

    order = {name: i for i, name in enumerate(g.vertices())}
    vertices = sorted(search.best, key=order.__getitem__)
    _log.debug(
        "Exact solve finished",
        vertices=g.n_vertices,
        branchable=len(finite),
        nodes_expanded=search.nodes,
        improved=search.best is not incumbent.vertices,
    )
    return SolveResult(
        algorithm="exact",
        vertices=vertices,
        total_weight=g.total_weight(vertices),
        nodes_expanded=search.nodes,
    )


def min_wvfs_exhaustive(g: WeightedMultigraph) -> SolveResult:
    """Reference optimum by enumerating subsets of finite-weight core vertices."""
    core = core_graph(g)
    finite = _finite_names(core)
    if len(finite) > EXHAUSTIVE_LIMIT:
        raise BudgetExceededError(
            f"{len(finite)} branchable vertices exceed the exhaustive limit of {EXHAUSTIVE_LIMIT}"
        )
    if not is_forest(core, finite):
        raise UnbreakableCycleError("A cycle consists only of infinite-weight vertices")

    best: tuple[str, ...] = tuple(finite)
    best_weight = core.total_weight(finite)
    for size in range(len(finite) + 1):
        for subset in combinations(finite, size):
            weight = math.fsum(core.weight(v) for v in subset)
            if weight < best_weight and is_forest(core, subset):
                best, best_weight = subset, weight
    return SolveResult(algorithm="exact", vertices=list(best), total_weight=g.total_weight(best))


def min_loop_cutset(d: DirectedNetwork, budget: Optional[OracleBudget] = None) -> SolveResult:
    """Minimum-weight loop cutset: the exact WVFS of the split graph, mapped back."""
    budget = budget or OracleBudget()
    if d.n_nodes > budget.max_vertices:
        raise BudgetExceededError(
            f"{d.n_nodes} network vertices exceed the oracle budget of {budget.max_vertices}"
        )
    g, smap = split(d)
    result = min_wvfs(g, budget)
    cutset = psi(result.vertices, smap)
    order = {name: i for i, name in enumerate(d.nodes)}
    vertices = sorted(cutset.members, key=order.__getitem__)
    return SolveResult(
        algorithm="exact",
        vertices=vertices,
        total_weight=cutset.total_weight,
        instance_count_log=cutset.total_weight,
        instance_count=instance_count(d, vertices),
        nodes_expanded=result.nodes_expanded,
    )


def enumerate_minimal_fvs(g: WeightedMultigraph, cap: int = 10_000) -> list[VertexSet]:
    """All inclusion-minimal feedback vertex sets, smallest first."""
    names = g.vertices()
    if len(names) > ENUMERATION_LIMIT:
        raise BudgetExceededError(
            f"Enumeration needs at most {ENUMERATION_LIMIT} vertices, got {len(names)}"
        )
    found: list[VertexSet] = []
    for size in range(len(names) + 1):
        for subset in combinations(names, size):
            if verify_fvs(g, subset) and is_minimal_fvs(g, subset):
                if len(found) >= cap:
                    raise CapExceededError(f"More than {cap} minimal feedback sets")
                found.append(g.vertex_set(subset))
    return found


class _BranchAndBound:
    def __init__(self, max_nodes: int, best: list[str], best_weight: float) -> None:
        self.max_nodes = max_nodes
        self.nodes = 0
        self.best = best
        self.best_weight = best_weight

    def expand(self, graph: WeightedMultigraph, chosen: list[str], weight: float) -> None:
        self.nodes += 1
        if self.nodes > self.max_nodes:
            raise BudgetExceededError(f"Branch-and-bound exceeded {self.max_nodes} nodes")

        graph.prune()
        if graph.is_empty():
            if weight < self.best_weight:
                self.best, self.best_weight = list(chosen), weight
            return

        cycle = _short_cycle(graph)
        candidates = [x for x in cycle if not math.isinf(graph.weight_at(x))]
        if not candidates:
            return
        candidates.sort(key=lambda x: (graph.weight_at(x), x))
        if weight + graph.weight_at(candidates[0]) >= self.best_weight:
            return

        for k, x in enumerate(candidates):
            child = graph.copy()
            for y in candidates[:k]:
                child.set_weight_at(y, INFINITE)
            child.remove_vertex_at(x)
            self.expand(child, chosen + [graph.name_of(x)], weight + graph.weight_at(x))


def _finite_names(g: WeightedMultigraph) -> list[str]:
    return [g.name_of(i) for i in g.vertex_indices() if not math.isinf(g.weight_at(i))]


def _short_cycle(g: WeightedMultigraph) -> list[int]:
    """Vertex indices of a shortest cycle of ``g`` (which must have one)."""
    pairs: set[tuple[int, int]] = set()
    for _, u, v in g.edges():
        if u == v:
            return [u]
        key = (u, v) if u < v else (v, u)
        if key in pairs:
            return list(key)
        pairs.add(key)

    best: list[int] = []
    for root in g.vertex_indices():
        cycle = _bfs_cycle(g, root)
        if cycle and (not best or len(cycle) < len(best)):
            best = cycle
            if len(best) == 3:
                break
    return best


def _bfs_cycle(g: WeightedMultigraph, root: int) -> list[int]:
    """Shortest cycle found by BFS from ``root`` in a simple graph."""
    parent = {root: (-1, -1)}
    depth = {root: 0}
    queue = deque([root])
    while queue:
        x = queue.popleft()
        for eid, a, b in g.incident_at(x):
            y = b if a == x else a
            if eid == parent[x][1]:
                continue
            if y not in depth:
                parent[y] = (x, eid)
                depth[y] = depth[x] + 1
                queue.append(y)
                continue
            left, right = [x], [y]
            while left[-1] != right[-1]:
                if depth[left[-1]] >= depth[right[-1]]:
                    left.append(parent[left[-1]][0])
                else:
                    right.append(parent[right[-1]][0])
            return left + right[-2::-1]
    return []
