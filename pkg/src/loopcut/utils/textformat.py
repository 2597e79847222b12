"""Line-oriented text formats for graphs, networks and generator manifests.

One directive per line, whitespace separated, ``#`` starts a comment::

    vertex <name> <weight|inf>      # WVFS graph
    node <name> <domain_size>       # network
    edge <u> <v>

Manifests hold one ``instance <index> <seed> <n> <m> <lo> <hi>`` line per
generated file, preceded by ``# key value`` metadata lines.
"""

from __future__ import annotations

import math
from pathlib import Path
from typing import Union

import networkx as nx

from ..core.errors import LoopcutError, ParseError, ValidationError
from ..models.multigraph import INFINITE, WeightedMultigraph
from ..models.network import DirectedNetwork
from ..models.results import ManifestEntry

PathLike = Union[str, Path]

MANIFEST_NAME = "manifest.txt"


def _directives(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line.split()


def _parse_weight(token: str, lineno: int, source: str) -> float:
    if token == "inf":
        return INFINITE
    try:
        value = float(token)
    except ValueError:
        raise ParseError(f"Bad weight {token!r}", lineno, source) from None
    if not math.isfinite(value) or value < 0:
        raise ParseError(f"Weight must be a decimal >= 0 or 'inf', got {token!r}", lineno, source)
    return value


def parse_graph(text: str, source: str = "<input>") -> WeightedMultigraph:
    """Parse the WVFS graph format.

    Raises:
        ParseError: Unknown directive, wrong arity, bad weight, duplicate
            vertex or undeclared edge endpoint.
    """
    g = WeightedMultigraph()
    for lineno, parts in _directives(text):
        kind, args = parts[0], parts[1:]
        if kind == "vertex":
            if len(args) != 2:
                raise ParseError("Expected: vertex <name> <weight>", lineno, source)
            name, token = args
            if name in g:
                raise ParseError(f"Duplicate vertex {name}", lineno, source)
            g.add_vertex(name, _parse_weight(token, lineno, source))
        elif kind == "edge":
            if len(args) != 2:
                raise ParseError("Expected: edge <u> <v>", lineno, source)
            for name in args:
                if name not in g:
                    raise ParseError(f"Undeclared vertex {name}", lineno, source)
            g.add_edge(*args)
        else:
            raise ParseError(f"Unknown directive {kind!r}", lineno, source)
    return g


def parse_network(text: str, source: str = "<input>") -> DirectedNetwork:
    """Parse the network format, rejecting any edge that closes a directed cycle."""
    d = DirectedNetwork()
    reach = nx.DiGraph()
    for lineno, parts in _directives(text):
        kind, args = parts[0], parts[1:]
        if kind == "node":
            if len(args) != 2:
                raise ParseError("Expected: node <name> <domain_size>", lineno, source)
            name, token = args
            try:
                size = int(token)
            except ValueError:
                raise ParseError(f"Bad domain size {token!r}", lineno, source) from None
            if name in d:
                raise ParseError(f"Duplicate node {name}", lineno, source)
            try:
                d.add_node(name, size)
            except ValidationError as e:
                raise ParseError(str(e), lineno, source) from e
            reach.add_node(name)
        elif kind == "edge":
            if len(args) != 2:
                raise ParseError("Expected: edge <parent> <child>", lineno, source)
            parent, child = args
            for name in args:
                if name not in d:
                    raise ParseError(f"Undeclared node {name}", lineno, source)
            if parent != child and nx.has_path(reach, child, parent):
                raise ParseError(f"Edge {parent} -> {child} closes a directed cycle", lineno, source)
            try:
                d.add_edge(parent, child)
            except LoopcutError as e:
                raise ParseError(str(e), lineno, source) from e
            reach.add_edge(parent, child)
        else:
            raise ParseError(f"Unknown directive {kind!r}", lineno, source)
    return d


def format_weight(weight: float) -> str:
    return "inf" if math.isinf(weight) else repr(float(weight))


def write_graph(g: WeightedMultigraph) -> str:
    lines = [f"vertex {name} {format_weight(g.weight(name))}" for name in g.vertices()]
    lines += [f"edge {g.name_of(u)} {g.name_of(v)}" for _, u, v in g.edges()]
    return "\n".join(lines) + "\n"


def write_network(d: DirectedNetwork) -> str:
    lines = [f"node {name} {d.domain_size(name)}" for name in d.nodes]
    lines += [f"edge {parent} {child}" for parent, child in d.edges]
    return "\n".join(lines) + "\n"


def write_manifest(entries: list[ManifestEntry], metadata: dict[str, str]) -> str:
    lines = [f"# {key} {value}" for key, value in metadata.items()]
    for e in entries:
        lines.append(
            f"instance {e.index} {e.seed} {e.n_vertices} {e.n_edges} {e.domain_lo} {e.domain_hi}"
        )
    return "\n".join(lines) + "\n"


def parse_manifest(text: str, source: str = "<manifest>") -> tuple[dict[str, str], list[ManifestEntry]]:
    """Return the ``# key value`` metadata and the instance entries."""
    metadata: dict[str, str] = {}
    entries: list[ManifestEntry] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line.startswith("#"):
            key, _, value = line[1:].strip().partition(" ")
            if key:
                metadata[key] = value.strip()
            continue
        if not line:
            continue
        parts = line.split()
        if parts[0] != "instance" or len(parts) != 7:
            raise ParseError("Expected: instance <index> <seed> <n> <m> <lo> <hi>", lineno, source)
        try:
            values = [int(p) for p in parts[1:]]
            entries.append(ManifestEntry(
                index=values[0],
                seed=values[1],
                n_vertices=values[2],
                n_edges=values[3],
                domain_lo=values[4],
                domain_hi=values[5],
            ))
        except ValueError as e:
            raise ParseError(f"Bad manifest entry: {line}", lineno, source) from e
    return metadata, entries


def read_text(path: PathLike) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as e:
        raise ValidationError(f"Cannot read {path}: {e}") from e


def load_graph(path: PathLike) -> WeightedMultigraph:
    return parse_graph(read_text(path), source=str(path))


def load_network(path: PathLike) -> DirectedNetwork:
    return parse_network(read_text(path), source=str(path))
