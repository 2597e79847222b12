"""Undirected weighted multigraph.

Vertices are addressed by name at the public surface and by insertion index
internally. Indices are never reused, so iteration order and tie-breaking are
reproducible. Edge ids are assigned in insertion order and are stable across
removals; parallel edges and self-loops are ordinary edges.
"""

from __future__ import annotations

import math
from collections import deque
from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from typing import NamedTuple

import networkx as nx

from ..core.errors import NotFoundError, ValidationError

INFINITE = math.inf


def check_weight(weight: float) -> float:
    """Return ``weight`` as a float, rejecting NaN and negative values."""
    try:
        value = float(weight)
    except (TypeError, ValueError) as e:
        raise ValidationError(f"Weight must be a number, got {weight!r}") from e
    if math.isnan(value) or value < 0:
        raise ValidationError(f"Weight must be >= 0 or inf, got {weight!r}")
    return value


class Edge(NamedTuple):
    """An edge as (id, u, v) with u, v vertex indices; u == v is a self-loop."""

    id: int
    u: int
    v: int


@dataclass(frozen=True)
class VertexSet:
    """Duplicate-free set of vertex names with its total weight."""

    members: frozenset[str]
    total_weight: float

    def __iter__(self) -> Iterator[str]:
        return iter(sorted(self.members))

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, name: object) -> bool:
        return name in self.members


class WeightedMultigraph:
    """Mutable undirected multigraph with per-vertex weights.

    degree(v) counts incident edge slots: a self-loop contributes 2.
    """

    def __init__(self) -> None:
        self._names: list[str] = []
        self._index: dict[str, int] = {}
        self._weights: list[float] = []
        self._alive: list[bool] = []
        self._adj: list[dict[int, int]] = []
        self._degree: list[int] = []
        self._edges: dict[int, tuple[int, int]] = {}
        self._next_edge_id = 0
        self._n_alive = 0

    # -- construction -------------------------------------------------

    def add_vertex(self, name: str, weight: float = 1.0) -> int:
        """Add a vertex and return its insertion index."""
        if name in self._index:
            raise ValidationError(f"Duplicate vertex: {name}")
        value = check_weight(weight)
        idx = len(self._names)
        self._names.append(name)
        self._index[name] = idx
        self._weights.append(value)
        self._alive.append(True)
        self._adj.append({})
        self._degree.append(0)
        self._n_alive += 1
        return idx

    def add_edge(self, u: str, v: str) -> int:
        """Add an undirected edge between named vertices and return its id."""
        return self.add_edge_at(self.index_of(u), self.index_of(v))

    def add_edge_at(self, u: int, v: int) -> int:
        for idx in (u, v):
            if not (0 <= idx < len(self._names)) or not self._alive[idx]:
                raise NotFoundError(f"Unknown vertex index: {idx}")
        eid = self._next_edge_id
        self._next_edge_id += 1
        self._edges[eid] = (u, v)
        self._adj[u][eid] = v
        self._adj[v][eid] = u
        if u == v:
            self._degree[u] += 2
        else:
            self._degree[u] += 1
            self._degree[v] += 1
        return eid

    @classmethod
    def from_edges(
        cls,
        weights: Iterable[tuple[str, float]],
        edges: Iterable[tuple[str, str]],
    ) -> WeightedMultigraph:
        g = cls()
        for name, weight in weights:
            g.add_vertex(name, weight)
        for u, v in edges:
            g.add_edge(u, v)
        return g

    def copy(self) -> WeightedMultigraph:
        other = WeightedMultigraph.__new__(WeightedMultigraph)
        other._names = list(self._names)
        other._index = dict(self._index)
        other._weights = list(self._weights)
        other._alive = list(self._alive)
        other._adj = [dict(a) for a in self._adj]
        other._degree = list(self._degree)
        other._edges = dict(self._edges)
        other._next_edge_id = self._next_edge_id
        other._n_alive = self._n_alive
        return other

    # -- lookup -------------------------------------------------------

    def __contains__(self, name: object) -> bool:
        idx = self._index.get(name)  # type: ignore[arg-type]
        return idx is not None and self._alive[idx]

    def __len__(self) -> int:
        return self._n_alive

    @property
    def n_vertices(self) -> int:
        return self._n_alive

    @property
    def n_edges(self) -> int:
        return len(self._edges)

    @property
    def capacity(self) -> int:
        """Number of indices ever allocated (alive or removed)."""
        return len(self._names)

    def is_empty(self) -> bool:
        return self._n_alive == 0

    def index_of(self, name: str) -> int:
        idx = self._index.get(name)
        if idx is None or not self._alive[idx]:
            raise NotFoundError(f"Unknown vertex: {name}")
        return idx

    def name_of(self, idx: int) -> str:
        return self._names[idx]

    def is_alive(self, idx: int) -> bool:
        return self._alive[idx]

    def vertices(self) -> list[str]:
        """Names of present vertices in insertion order."""
        return [n for n, a in zip(self._names, self._alive) if a]

    def vertex_indices(self) -> list[int]:
        return [i for i, a in enumerate(self._alive) if a]

    def weight(self, name: str) -> float:
        return self._weights[self.index_of(name)]

    def weight_at(self, idx: int) -> float:
        return self._weights[idx]

    def set_weight(self, name: str, weight: float) -> None:
        self._weights[self.index_of(name)] = check_weight(weight)

    def set_weight_at(self, idx: int, weight: float) -> None:
        self._weights[idx] = check_weight(weight)

    def degree(self, name: str) -> int:
        return self._degree[self.index_of(name)]

    def degree_at(self, idx: int) -> int:
        return self._degree[idx]

    def edges(self) -> list[Edge]:
        """Present edges ordered by id."""
        return [Edge(eid, u, v) for eid, (u, v) in self._edges.items()]

    def edge(self, eid: int) -> Edge:
        try:
            u, v = self._edges[eid]
        except KeyError:
            raise NotFoundError(f"Unknown edge id: {eid}") from None
        return Edge(eid, u, v)

    def incident_at(self, idx: int) -> list[Edge]:
        """Edges incident with ``idx``, each listed once, ordered by id."""
        return [Edge(eid, *self._edges[eid]) for eid in self._adj[idx]]

    def vertex_set(self, names: Iterable[str]) -> VertexSet:
        members = frozenset(names)
        total = math.fsum(self.weight(n) for n in members)
        return VertexSet(members=members, total_weight=total)

    def total_weight(self, names: Iterable[str]) -> float:
        return self.vertex_set(names).total_weight

    # -- mutation -----------------------------------------------------

    def remove_vertex(self, name: str) -> list[Edge]:
        """Remove a vertex with all incident edges; returns the removed edges."""
        return self.remove_vertex_at(self.index_of(name))

    def remove_vertex_at(self, idx: int) -> list[Edge]:
        adj = self._adj[idx]
        removed: list[Edge] = []
        # adjacency dicts keep edge-id order: ids only grow and deletes do not reorder
        for eid, other in list(adj.items()):
            u, v = self._edges.pop(eid)
            removed.append(Edge(eid, u, v))
            if other != idx:
                del self._adj[other][eid]
                self._degree[other] -= 1
        adj.clear()
        self._degree[idx] = 0
        self._alive[idx] = False
        self._n_alive -= 1
        return removed

    def prune(self, seeds: Iterable[int] | None = None) -> list[Edge]:
        """Repeatedly remove vertices of degree 0 or 1, in place.

        With ``seeds`` only those vertices (and whatever their removal
        exposes) are examined; without, every present vertex is.

        Returns:
            Removed edges in removal order.
        """
        candidates = self.vertex_indices() if seeds is None else seeds
        queue = deque(i for i in candidates if self._alive[i] and self._degree[i] <= 1)
        removed: list[Edge] = []
        while queue:
            idx = queue.popleft()
            if not self._alive[idx] or self._degree[idx] > 1:
                continue
            for edge in self.remove_vertex_at(idx):
                removed.append(edge)
                other = edge.v if edge.u == idx else edge.u
                if self._alive[other] and self._degree[other] <= 1:
                    queue.append(other)
        return removed

    # -- interop ------------------------------------------------------

    def to_networkx(self) -> nx.MultiGraph:
        graph = nx.MultiGraph()
        for idx in self.vertex_indices():
            graph.add_node(self._names[idx], weight=self._weights[idx])
        for eid, u, v in self.edges():
            graph.add_edge(self._names[u], self._names[v], key=eid)
        return graph

    def __repr__(self) -> str:
        return f"WeightedMultigraph(vertices={self.n_vertices}, edges={self.n_edges})"
