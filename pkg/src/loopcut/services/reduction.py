"""Reduction from the loop cutset problem to weighted vertex feedback sets.

Each network vertex v becomes v_in (infinite weight, takes the in-edges) and
v_out (weight ln|v|, takes the out-edges), joined by one edge. Loops of the
network correspond one-to-one with cycles of the split graph, and removing
v_out breaks exactly the loops on which v is not a sink.
"""

from __future__ import annotations

import math
from collections.abc import Iterable
from dataclasses import dataclass, field
from typing import Literal

import networkx as nx

from ..core.errors import NotFoundError
from ..models.multigraph import INFINITE, VertexSet, WeightedMultigraph
from ..models.network import DirectedNetwork
from .graph_core import is_forest

Side = Literal["in", "out"]


@dataclass(frozen=True)
class SplitMap:
    """Links network vertices to their split vertices and back (psi)."""

    in_vertex: dict[str, str] = field(default_factory=dict)
    out_vertex: dict[str, str] = field(default_factory=dict)
    origin: dict[str, tuple[str, Side]] = field(default_factory=dict)
    domain_sizes: dict[str, int] = field(default_factory=dict)


@dataclass(frozen=True)
class Loop:
    """A loop of a directed network: its cycle order and its sinks."""

    nodes: tuple[str, ...]
    sinks: frozenset[str]

    @property
    def allowed(self) -> frozenset[str]:
        return frozenset(self.nodes) - self.sinks


def split(d: DirectedNetwork) -> tuple[WeightedMultigraph, SplitMap]:
    """Build the split graph of ``d`` and its SplitMap.

    Vertices are added as v_in, v_out per network vertex in declaration
    order; the n internal edges come first, then one edge per directed edge.
    """
    d.validate()
    g = WeightedMultigraph()
    smap = SplitMap()
    for v in d.nodes:
        v_in, v_out = f"{v}_in", f"{v}_out"
        g.add_vertex(v_in, INFINITE)
        g.add_vertex(v_out, d.weight(v))
        smap.in_vertex[v] = v_in
        smap.out_vertex[v] = v_out
        smap.origin[v_in] = (v, "in")
        smap.origin[v_out] = (v, "out")
        smap.domain_sizes[v] = d.domain_size(v)
    for v in d.nodes:
        g.add_edge(smap.in_vertex[v], smap.out_vertex[v])
    for parent, child in d.edges:
        g.add_edge(smap.out_vertex[parent], smap.in_vertex[child])
    return g, smap


def psi(x: Iterable[str], smap: SplitMap) -> VertexSet:
    """Map split vertices back to the network vertices they came from."""
    members = set()
    for name in x:
        try:
            members.add(smap.origin[name][0])
        except KeyError:
            raise NotFoundError(f"Unknown split vertex: {name}") from None
    total = math.fsum(math.log(smap.domain_sizes[v]) for v in members)
    return VertexSet(members=frozenset(members), total_weight=total)


def is_loop_cutset(d: DirectedNetwork, s: Iterable[str]) -> bool:
    """True iff removing {v_out : v in s} leaves the split graph a forest."""
    g, smap = split(d)
    excluded = []
    for v in s:
        if v not in smap.out_vertex:
            raise NotFoundError(f"Unknown node: {v}")
        excluded.append(smap.out_vertex[v])
    return is_forest(g, excluded)


def instance_count(d: DirectedNetwork, s: Iterable[str]) -> int:
    """Number of conditioning instances: product of domain sizes over ``s``."""
    return math.prod(d.domain_size(v) for v in set(s))


def instance_count_log(d: DirectedNetwork, s: Iterable[str]) -> float:
    return math.fsum(d.weight(v) for v in set(s))


def enumerate_loops(d: DirectedNetwork) -> list[Loop]:
    """All loops of ``d`` by brute force over undirected simple cycles.

    Exponential in general; intended for small networks.
    """
    underlying = nx.Graph()
    underlying.add_nodes_from(d.nodes)
    underlying.add_edges_from(d.edges)
    loops = []
    for cycle in nx.simple_cycles(underlying):
        k = len(cycle)
        sinks = frozenset(
            v
            for i, v in enumerate(cycle)
            if d.has_edge(cycle[i - 1], v) and d.has_edge(cycle[(i + 1) % k], v)
        )
        loops.append(Loop(nodes=tuple(cycle), sinks=sinks))
    return loops


def is_loop_cutset_by_definition(d: DirectedNetwork, s: Iterable[str]) -> bool:
    """True iff every loop has an allowed vertex in ``s``."""
    members = set(s)
    return all(loop.allowed & members for loop in enumerate_loops(d))
