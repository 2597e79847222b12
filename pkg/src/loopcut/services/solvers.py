"""Greedy WVFS approximation algorithms GA and MGA.

Both share one selection loop. Each iteration picks the finite-weight vertex
of minimum ratio w(v)/d(v) in the current graph (ties go to the lowest
insertion index), removes it, re-prunes degree-0/1 vertices and charges every
edge removed during that iteration with the iteration's ratio c_i. MGA also
subtracts each charge from the working weight of the edge's surviving
endpoints and, in a second phase, drops redundant vertices in reverse
selection order.

The minimum is kept in a binary heap with lazy invalidation: a vertex is
re-pushed whenever its degree or weight changes and stale entries are
discarded on pop.
"""

from __future__ import annotations

import heapq
import math
from collections.abc import Iterable
from typing import Literal

from ..core.errors import UnbreakableCycleError, ValidationError
from ..core.logging import ContextLogger
from ..models.multigraph import WeightedMultigraph
from ..models.results import IterationRecord, SolveResult
from ..utils.unionfind import UnionFind
from .graph_core import core_graph, is_forest

Phase2Method = Literal["union-find", "retest"]

_log = ContextLogger(__name__)


def run_ga(g: WeightedMultigraph, *, clamp_tolerance: float = 1e-9) -> SolveResult:
    """Plain greedy: minimum ratio with current degrees and original weights."""
    log = _log.bind(algorithm="ga", vertices=g.n_vertices, edges=g.n_edges)
    core, selected, trace, charges = _greedy_phase(
        g, reweight=False, clamp_tolerance=clamp_tolerance, log=log
    )
    result = _build_result(g, "ga", core, selected, trace, charges, removed=[])
    log.info("Solve finished", set_size=result.size, weight=result.total_weight, iterations=len(trace))
    return result


def run_mga(
    g: WeightedMultigraph,
    *,
    skip_phase2: bool = False,
    phase2_method: Phase2Method = "union-find",
    clamp_tolerance: float = 1e-9,
) -> SolveResult:
    """Modified greedy: charge-adjusted weights, then redundancy removal.

    Args:
        g: Input multigraph; it is not modified.
        skip_phase2: Return the phase 1 selection unchanged.
        phase2_method: ``union-find`` (incremental) or ``retest`` (re-run the
            forest test per candidate); both give the same set.
        clamp_tolerance: Working weights in [-tol, 0) are clamped to 0.

    Raises:
        UnbreakableCycleError: A cycle has only infinite-weight vertices.
    """
    algorithm = "mga-no-phase2" if skip_phase2 else "mga"
    log = _log.bind(algorithm=algorithm, vertices=g.n_vertices, edges=g.n_edges)
    core, selected, trace, charges = _greedy_phase(
        g, reweight=True, clamp_tolerance=clamp_tolerance, log=log
    )
    removed: list[int] = []
    if not skip_phase2:
        if phase2_method == "union-find":
            removed = _redundant_union_find(core, selected)
        elif phase2_method == "retest":
            removed = _redundant_retest(core, selected)
        else:
            raise ValidationError(f"Unknown phase 2 method: {phase2_method}")
    result = _build_result(g, algorithm, core, selected, trace, charges, removed)
    log.info(
        "Solve finished",
        set_size=result.size,
        weight=result.total_weight,
        iterations=len(trace),
        phase2_removed=len(removed),
    )
    return result


def verify_fvs(g: WeightedMultigraph, f: Iterable[str]) -> bool:
    """True iff removing ``f`` leaves a forest."""
    return is_forest(g, f)


def is_minimal_fvs(g: WeightedMultigraph, f: Iterable[str]) -> bool:
    """True iff no single member of the feedback set ``f`` can be dropped."""
    members = set(f)
    if not verify_fvs(g, members):
        raise ValidationError("Not a feedback vertex set")
    return all(not is_forest(g, members - {v}) for v in members)


def charge_totals(g: WeightedMultigraph, result: SolveResult) -> dict[str, float]:
    """Sum of edge charges over the core edges at each core vertex.

    A self-loop is counted twice at its vertex, matching its degree.
    """
    core = core_graph(g)
    totals = {name: 0.0 for name in core.vertices()}
    for eid, u, v in core.edges():
        charge = result.charges.get(eid, 0.0)
        totals[core.name_of(u)] += charge
        totals[core.name_of(v)] += charge
    return totals


def validate_trace(result: SolveResult, tolerance: float = 1e-9) -> bool:
    """True iff the selected ratios never decrease, up to a relative tolerance."""
    ratios = [record.ratio for record in result.trace]
    return all(b >= a - tolerance * max(1.0, abs(a)) for a, b in zip(ratios, ratios[1:]))


def validate_charges(g: WeightedMultigraph, result: SolveResult, tolerance: float = 1e-6) -> bool:
    """True iff the MGA edge charges pay for the phase 1 picks and no more.

    Every vertex selected in phase 1 collects charges equal to its weight and
    no core vertex collects more than its weight, both up to a relative
    tolerance. Only MGA results satisfy this; GA charges are not reweighted.
    """
    totals = charge_totals(g, result)
    weights = {name: g.weight(name) for name in totals}
    slack = {name: tolerance * max(1.0, w) for name, w in weights.items()}
    for record in result.trace:
        name = record.vertex
        if abs(totals[name] - weights[name]) > slack[name]:
            return False
    return all(totals[name] <= weights[name] + slack[name] for name in totals)


# -- internals ----------------------------------------------------------


def _greedy_phase(
    g: WeightedMultigraph,
    *,
    reweight: bool,
    clamp_tolerance: float,
    log: ContextLogger,
) -> tuple[WeightedMultigraph, list[int], list[IterationRecord], dict[int, float]]:
    work = g.copy()
    work.prune()
    core = work.copy()

    weights = [work.weight_at(i) for i in range(work.capacity)]
    original = list(weights)
    degree = work.degree_at
    alive = work.is_alive

    heap = [(weights[i] / degree(i), i) for i in work.vertex_indices() if not math.isinf(weights[i])]
    heapq.heapify(heap)

    selected: list[int] = []
    trace: list[IterationRecord] = []
    charges: dict[int, float] = {}

    while not work.is_empty():
        v = -1
        while heap:
            ratio, idx = heapq.heappop(heap)
            if alive(idx) and ratio == weights[idx] / degree(idx):
                v = idx
                break
        if v < 0:
            names = [work.name_of(i) for i in work.vertex_indices()[:5]]
            raise UnbreakableCycleError(
                "A cycle consists only of infinite-weight vertices "
                f"({work.n_vertices} vertices remain on cycles, e.g. {', '.join(names)})"
            )

        c = weights[v] / degree(v)
        removed = work.remove_vertex_at(v)
        removed += work.prune(e.v if e.u == v else e.u for e in removed)

        touched: set[int] = set()
        for eid, a, b in removed:
            charges[eid] = c
            touched.add(a)
            touched.add(b)
            if reweight:
                if a != v:
                    weights[a] -= c
                if b != v:
                    weights[b] -= c

        for x in touched:
            if not alive(x) or math.isinf(weights[x]):
                continue
            if weights[x] < 0:
                if weights[x] < -clamp_tolerance * max(1.0, original[x]):
                    log.warning(
                        "Working weight went negative beyond tolerance",
                        vertex=work.name_of(x),
                        weight=weights[x],
                    )
                weights[x] = 0.0
            heapq.heappush(heap, (weights[x] / degree(x), x))

        selected.append(v)
        trace.append(IterationRecord(
            iteration=len(selected),
            vertex=work.name_of(v),
            ratio=c,
            removed_edges=[e.id for e in removed],
        ))

    return core, selected, trace, charges


def _redundant_union_find(core: WeightedMultigraph, selected: list[int]) -> list[int]:
    """Phase 2 with an incremental union-find over the core minus the selected set.

    v_i is redundant iff putting it back into the remaining forest closes no
    cycle: no self-loop and no two of its edges reach the same tree.
    """
    in_f = set(selected)
    forest = UnionFind()
    for _, a, b in core.edges():
        if a not in in_f and b not in in_f:
            forest.union(a, b)

    removed: list[int] = []
    for v in reversed(selected):
        roots: set[object] = set()
        redundant = True
        for _, a, b in core.incident_at(v):
            if a == b:
                redundant = False
                break
            other = b if a == v else a
            if other in in_f:
                continue
            root = forest.find(other)
            if root in roots:
                redundant = False
                break
            roots.add(root)
        if redundant:
            in_f.discard(v)
            removed.append(v)
            for root in roots:
                forest.union(v, root)
    return removed


def _redundant_retest(core: WeightedMultigraph, selected: list[int]) -> list[int]:
    """Phase 2 by re-running the forest test for each candidate."""
    members = {core.name_of(i) for i in selected}
    removed: list[int] = []
    for v in reversed(selected):
        name = core.name_of(v)
        if is_forest(core, members - {name}):
            members.discard(name)
            removed.append(v)
    return removed


def _build_result(
    g: WeightedMultigraph,
    algorithm: str,
    core: WeightedMultigraph,
    selected: list[int],
    trace: list[IterationRecord],
    charges: dict[int, float],
    removed: list[int],
) -> SolveResult:
    dropped = set(removed)
    vertices = [core.name_of(i) for i in selected if i not in dropped]
    return SolveResult(
        algorithm=algorithm,
        vertices=vertices,
        total_weight=g.total_weight(vertices),
        trace=trace,
        charges=charges,
        phase2_removed=[core.name_of(i) for i in removed],
    )
