"""Pytest configuration and fixtures.

Small hand-checked graphs and networks shared across the unit suites, plus
an explicit marker strategy: ``unit`` (default), ``property`` (randomized
invariants) and ``integration`` (long-running, deselected by default).
"""

from __future__ import annotations

import sys
from pathlib import Path

import pytest

# Add src directory to Python path
TESTS_DIR = Path(__file__).parent
SRC_DIR = TESTS_DIR.parent / "src"
if str(SRC_DIR) not in sys.path:
    sys.path.insert(0, str(SRC_DIR))

from loopcut.core.config import LoopcutConfig  # noqa: E402
from loopcut.models.multigraph import WeightedMultigraph  # noqa: E402
from loopcut.models.network import DirectedNetwork  # noqa: E402


def make_graph(weights: dict[str, float], edges: list[tuple[str, str]]) -> WeightedMultigraph:
    return WeightedMultigraph.from_edges(weights.items(), edges)


@pytest.fixture
def triangle() -> WeightedMultigraph:
    """Unit-weight triangle a, b, c."""
    return make_graph({"a": 1.0, "b": 1.0, "c": 1.0}, [("a", "b"), ("b", "c"), ("c", "a")])


@pytest.fixture
def weighted_triangle() -> WeightedMultigraph:
    """Triangle with weights x=1, y=1, z=5."""
    return make_graph({"x": 1.0, "y": 1.0, "z": 5.0}, [("x", "y"), ("y", "z"), ("z", "x")])


@pytest.fixture
def k4() -> WeightedMultigraph:
    names = ["a", "b", "c", "d"]
    edges = [(u, v) for i, u in enumerate(names) for v in names[i + 1:]]
    return make_graph({n: 1.0 for n in names}, edges)


@pytest.fixture
def double_bowtie() -> WeightedMultigraph:
    """Triangles (a1, a2, h) and (b1, b2, h) plus parallel edges a1-a2 and b1-b2."""
    return make_graph(
        {"a1": 1.0, "a2": 1.0, "h": 1.0, "b1": 1.0, "b2": 1.0},
        [
            ("a1", "a2"), ("a2", "h"), ("h", "a1"), ("a1", "a2"),
            ("b1", "b2"), ("b2", "h"), ("h", "b1"), ("b1", "b2"),
        ],
    )


@pytest.fixture
def theta() -> WeightedMultigraph:
    """u and v joined by three paths of length two through p1, p2, p3."""
    return make_graph(
        {"u": 1.0, "v": 1.0, "p1": 0.6, "p2": 0.6, "p3": 0.6},
        [("u", "p1"), ("p1", "v"), ("u", "p2"), ("p2", "v"), ("u", "p3"), ("p3", "v")],
    )


@pytest.fixture
def chain_network() -> DirectedNetwork:
    return DirectedNetwork.from_edges([("a", 2), ("b", 2), ("c", 2)], [("a", "b"), ("b", "c")])


@pytest.fixture
def loop_network() -> DirectedNetwork:
    """a -> b, b -> c, a -> c with binary domains: one loop, sink c."""
    return DirectedNetwork.from_edges(
        [("a", 2), ("b", 2), ("c", 2)], [("a", "b"), ("b", "c"), ("a", "c")]
    )


@pytest.fixture
def diamond_network() -> DirectedNetwork:
    """a -> b, a -> c, b -> d, c -> d; the sink d has five states."""
    return DirectedNetwork.from_edges(
        [("a", 2), ("b", 2), ("c", 2), ("d", 5)],
        [("a", "b"), ("a", "c"), ("b", "d"), ("c", "d")],
    )


@pytest.fixture
def config() -> LoopcutConfig:
    return LoopcutConfig(log_level="WARNING")


@pytest.fixture(name="make_graph")
def make_graph_fixture():
    """The ``make_graph`` builder, for tests that assemble their own graphs."""
    return make_graph
