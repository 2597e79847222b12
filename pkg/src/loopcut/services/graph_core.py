"""Pruning and forest tests shared by every solver."""

from __future__ import annotations

from collections.abc import Iterable

from ..models.multigraph import Edge, WeightedMultigraph
from ..utils.unionfind import UnionFind


def prune_leaves(g: WeightedMultigraph) -> tuple[WeightedMultigraph, list[Edge]]:
    """Remove degree-0/1 vertices to a fixed point on a copy of ``g``.

    Returns:
        The pruned copy and the removed edges in removal order.
    """
    pruned = g.copy()
    removed = pruned.prune()
    return pruned, removed


def core_graph(g: WeightedMultigraph) -> WeightedMultigraph:
    return prune_leaves(g)[0]


def degree(g: WeightedMultigraph, v: str) -> int:
    """Incident edge slots of ``v``; a self-loop counts twice."""
    return g.degree(v)


def is_forest(g: WeightedMultigraph, excluded: Iterable[str] = ()) -> bool:
    """True iff ``g`` minus ``excluded`` (and incident edges) has no cycle.

    Self-loops and parallel edges between surviving vertices are cycles.
    """
    dropped = {g.index_of(name) for name in excluded}
    uf = UnionFind()
    for _, u, v in g.edges():
        if u in dropped or v in dropped:
            continue
        if u == v or not uf.union(u, v):
            return False
    return True
