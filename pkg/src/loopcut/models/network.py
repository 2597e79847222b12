"""Directed network: the DAG skeleton of a Bayesian network."""

from __future__ import annotations

import math
from collections.abc import Iterable

import networkx as nx

from ..core.errors import NotFoundError, ValidationError


class DirectedNetwork:
    """DAG with an integer domain size per vertex.

    Nodes keep declaration order. Acyclicity is checked by ``validate``;
    ``add_edge`` only rejects self-edges, duplicates and undeclared endpoints.
    """

    def __init__(self) -> None:
        self._domains: dict[str, int] = {}
        self._edges: list[tuple[str, str]] = []
        self._edge_set: set[tuple[str, str]] = set()

    def add_node(self, name: str, domain_size: int) -> None:
        if name in self._domains:
            raise ValidationError(f"Duplicate node: {name}")
        if isinstance(domain_size, bool) or not isinstance(domain_size, int):
            raise ValidationError(f"Domain size of {name} must be an integer, got {domain_size!r}")
        if domain_size < 1:
            raise ValidationError(f"Domain size of {name} must be >= 1, got {domain_size}")
        self._domains[name] = domain_size

    def add_edge(self, parent: str, child: str) -> None:
        for name in (parent, child):
            if name not in self._domains:
                raise NotFoundError(f"Undeclared node: {name}")
        if parent == child:
            raise ValidationError(f"Self-edge on {parent}")
        if (parent, child) in self._edge_set:
            raise ValidationError(f"Duplicate edge: {parent} -> {child}")
        self._edges.append((parent, child))
        self._edge_set.add((parent, child))

    @classmethod
    def from_edges(
        cls,
        nodes: Iterable[tuple[str, int]],
        edges: Iterable[tuple[str, str]],
    ) -> DirectedNetwork:
        """Build and validate a network."""
        network = cls()
        for name, size in nodes:
            network.add_node(name, size)
        for parent, child in edges:
            network.add_edge(parent, child)
        network.validate()
        return network

    @property
    def nodes(self) -> list[str]:
        return list(self._domains)

    @property
    def edges(self) -> list[tuple[str, str]]:
        return list(self._edges)

    @property
    def n_nodes(self) -> int:
        return len(self._domains)

    @property
    def n_edges(self) -> int:
        return len(self._edges)

    def __contains__(self, name: object) -> bool:
        return name in self._domains

    def has_edge(self, parent: str, child: str) -> bool:
        return (parent, child) in self._edge_set

    def domain_size(self, name: str) -> int:
        try:
            return self._domains[name]
        except KeyError:
            raise NotFoundError(f"Unknown node: {name}") from None

    def weight(self, name: str) -> float:
        """Natural log of the domain size."""
        return math.log(self.domain_size(name))

    def to_networkx(self) -> nx.DiGraph:
        graph = nx.DiGraph()
        for name, size in self._domains.items():
            graph.add_node(name, domain_size=size)
        graph.add_edges_from(self._edges)
        return graph

    def is_acyclic(self) -> bool:
        return nx.is_directed_acyclic_graph(self.to_networkx())

    def validate(self) -> None:
        """Raise ValidationError if the network has a directed cycle."""
        graph = self.to_networkx()
        if nx.is_directed_acyclic_graph(graph):
            return
        cycle = nx.find_cycle(graph)
        path = " -> ".join([edge[0] for edge in cycle] + [cycle[0][0]])
        raise ValidationError(f"Network has a directed cycle: {path}")

    def __repr__(self) -> str:
        return f"DirectedNetwork(nodes={self.n_nodes}, edges={self.n_edges})"
