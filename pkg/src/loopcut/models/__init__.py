"""Loopcut data models.

Graph structures plus pydantic DTOs for results, generator specs and reports.
"""

from .multigraph import INFINITE, Edge, VertexSet, WeightedMultigraph
from .network import DirectedNetwork
from .results import (
    ExperimentReport,
    ExperimentRow,
    InstanceSpec,
    IterationRecord,
    ManifestEntry,
    OracleBudget,
    PairwiseRecord,
    RatioSummary,
    SolveResult,
)

__all__ = [
    "INFINITE",
    "Edge",
    "VertexSet",
    "WeightedMultigraph",
    "DirectedNetwork",
    "ExperimentReport",
    "ExperimentRow",
    "InstanceSpec",
    "IterationRecord",
    "ManifestEntry",
    "OracleBudget",
    "PairwiseRecord",
    "RatioSummary",
    "SolveResult",
]
