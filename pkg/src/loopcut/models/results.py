"""Pydantic DTOs for solver results, generator parameters and reports."""

from __future__ import annotations

import json
from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

Algorithm = Literal["ga", "mga", "exact"]

TSV_COLUMNS = (
    "instance",
    "algorithm",
    "set_size",
    "weight",
    "instances_log",
    "ratio",
    "millis",
    "status",
)


class OracleBudget(BaseModel):
    """Limits for the exact oracle."""

    max_vertices: int = Field(25, ge=1, description="Largest branchable vertex count accepted")
    max_nodes_expanded: int = Field(2_000_000, ge=1, description="Branch-and-bound node limit")


class IterationRecord(BaseModel):
    """One selection step: v_i, c_i and the edges removed in that step."""

    iteration: int = Field(..., ge=1)
    vertex: str
    ratio: float = Field(..., ge=0)
    removed_edges: list[int] = Field(default_factory=list)


class SolveResult(BaseModel):
    """Output of any solver, for a WVFS graph or a network."""

    algorithm: str
    vertices: list[str] = Field(default_factory=list, description="Chosen vertices in selection order")
    total_weight: float = 0.0
    instance_count_log: Optional[float] = None
    instance_count: Optional[int] = None
    trace: list[IterationRecord] = Field(default_factory=list)
    charges: dict[int, float] = Field(default_factory=dict, description="Charge per edge id of the core graph")
    phase2_removed: list[str] = Field(default_factory=list)
    nodes_expanded: Optional[int] = None

    @property
    def vertex_set(self) -> frozenset[str]:
        return frozenset(self.vertices)

    @property
    def size(self) -> int:
        return len(self.vertices)


class InstanceSpec(BaseModel):
    """Seeded random network batch parameters."""

    n_vertices: int = Field(..., ge=1)
    n_edges: int = Field(..., ge=0)
    domain_lo: int = Field(2, ge=2)
    domain_hi: int = Field(2, ge=2)
    seed: int = Field(0, ge=0, lt=2**64)
    count: int = Field(1, ge=1)

    @model_validator(mode="after")
    def check_feasible(self) -> InstanceSpec:
        if self.domain_hi < self.domain_lo:
            raise ValueError(f"domain_hi {self.domain_hi} < domain_lo {self.domain_lo}")
        limit = self.n_vertices * (self.n_vertices - 1) // 2
        if self.n_edges > limit:
            raise ValueError(
                f"{self.n_edges} edges do not fit on {self.n_vertices} vertices (max {limit})"
            )
        return self


class ExperimentRow(BaseModel):
    """One (instance, algorithm) solve."""

    instance: str
    algorithm: str
    set_size: Optional[int] = None
    weight: Optional[float] = None
    instances_log: Optional[float] = None
    ratio: Optional[float] = None
    millis: float = 0.0
    status: Literal["ok", "budget-exceeded"] = "ok"


class PairwiseRecord(BaseModel):
    """Win/tie/loss counts between two algorithms by total weight."""

    first: str
    second: str
    first_better: int = 0
    ties: int = 0
    second_better: int = 0

    @property
    def compared(self) -> int:
        return self.first_better + self.ties + self.second_better

    @property
    def disagreements(self) -> int:
        return self.first_better + self.second_better

    @property
    def second_share(self) -> Optional[float]:
        """Fraction of disagreements won by ``second``; None without any."""
        if not self.disagreements:
            return None
        return self.second_better / self.disagreements


class RatioSummary(BaseModel):
    """Instance-count ratios of one algorithm against the exact optimum."""

    algorithm: str
    instances: int = 0
    mean_ratio: Optional[float] = None
    geometric_mean_ratio: Optional[float] = None
    max_ratio: Optional[float] = None
    optimal_count: int = 0
    budget_exceeded: int = 0


class ExperimentReport(BaseModel):
    """Per-instance rows plus aggregate tables of one experiment run."""

    model_config = ConfigDict(extra="forbid")

    rows: list[ExperimentRow] = Field(default_factory=list)
    pairs: list[PairwiseRecord] = Field(default_factory=list)
    summaries: list[RatioSummary] = Field(default_factory=list)
    skipped: int = 0
    notes: list[str] = Field(default_factory=list)

    def to_json(self) -> str:
        return self.model_dump_json(indent=2)

    def to_tsv(self) -> str:
        lines = [f"# {note}" for note in self.notes]
        lines.append("\t".join(TSV_COLUMNS))
        for row in self.rows:
            lines.append("\t".join(_tsv_cell(getattr(row, col)) for col in TSV_COLUMNS))
        for pair in self.pairs:
            lines.append(
                f"# pair\t{pair.first}\t{pair.second}\t{pair.first_better}"
                f"\t{pair.ties}\t{pair.second_better}"
            )
        for summary in self.summaries:
            lines.append(
                "# summary\t"
                + "\t".join(
                    _tsv_cell(getattr(summary, field)) for field in RatioSummary.model_fields
                )
            )
        lines.append(f"# skipped\t{self.skipped}")
        return "\n".join(lines) + "\n"


def _tsv_cell(value: object) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return json.dumps(value)
    return str(value)


class ManifestEntry(BaseModel):
    """One ``instance`` line of a generator manifest."""

    index: int = Field(..., ge=0)
    seed: int = Field(..., ge=0)
    n_vertices: int = Field(..., ge=1)
    n_edges: int = Field(..., ge=0)
    domain_lo: int = Field(..., ge=1)
    domain_hi: int = Field(..., ge=1)

    @property
    def file_name(self) -> str:
        return f"instance-{self.index:04d}.txt"
