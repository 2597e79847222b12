"""Loopcut configuration management.

Pydantic-validated settings loaded from environment variables (with ``.env``
support) or a YAML file, plus named experiment presets kept in YAML.
"""

from __future__ import annotations

import os
from pathlib import Path
from typing import Any, Dict, List, Literal

import yaml
from dotenv import load_dotenv
from pydantic import BaseModel, Field, ValidationError as PydanticValidationError, field_validator

from ..models.results import OracleBudget
from .errors import ConfigurationError
from .logging import get_logger

logger = get_logger(__name__)

DEFAULT_PRESETS_PATH = "config/experiments.yaml"


class ExperimentPreset(BaseModel):
    """One named batch of generated networks and how to solve it."""

    nodes: int = Field(..., ge=1, description="Vertices per network")
    edges: int = Field(..., ge=0, description="Directed edges per network")
    domains: str = Field("2:2", description="Domain size range as LO:HI")
    count: int = Field(100, ge=1, description="Networks in the batch")
    seed: int = Field(0, ge=0, description="Base seed; instance k uses seed + k")
    algorithms: List[Literal["ga", "mga"]] = Field(default_factory=lambda: ["ga", "mga"])
    exact: bool = Field(False, description="Also compute the exact optimum")

    @field_validator("domains")
    @classmethod
    def validate_domains(cls, v: str) -> str:
        lo, hi = parse_domain_range(v)
        return f"{lo}:{hi}"

    @property
    def domain_range(self) -> tuple[int, int]:
        return parse_domain_range(self.domains)


def parse_domain_range(text: str) -> tuple[int, int]:
    """Parse ``LO:HI`` (or a single ``N``) into a validated pair."""
    parts = text.split(":")
    try:
        if len(parts) == 1:
            lo = hi = int(parts[0])
        elif len(parts) == 2:
            lo, hi = int(parts[0]), int(parts[1])
        else:
            raise ValueError(text)
    except ValueError:
        raise ValueError(f"Domain range must look like LO:HI, got {text!r}") from None
    if lo < 2 or hi < lo:
        raise ValueError(f"Domain range needs 2 <= LO <= HI, got {text!r}")
    return lo, hi


class LoopcutConfig(BaseModel):
    """Main loopcut configuration."""

    log_level: Literal["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"] = Field("INFO")
    log_json: bool = Field(False, description="Render logs as JSON")
    default_algorithm: Literal["ga", "mga", "exact"] = Field("mga")
    phase2_method: Literal["union-find", "retest"] = Field(
        "union-find", description="Redundancy test used by MGA phase 2"
    )
    oracle: OracleBudget = Field(default_factory=OracleBudget)
    compare_tolerance: float = Field(1e-9, gt=0, le=1e-3, description="Weight comparison tolerance")
    clamp_tolerance: float = Field(1e-9, gt=0, le=1e-3, description="MGA working-weight clamp")
    charge_tolerance: float = Field(1e-6, gt=0, le=1e-2, description="Charge accounting tolerance")
    workers: int = Field(1, ge=1, le=256, description="Parallel experiment workers")
    report_format: Literal["tsv", "json"] = Field("tsv")

    @field_validator("log_level", mode="before")
    @classmethod
    def normalize_level(cls, v: Any) -> Any:
        return v.upper() if isinstance(v, str) else v

    @classmethod
    def from_environment(cls, env_file: str | None = None) -> LoopcutConfig:
        """Load configuration from ``LOOPCUT_*`` environment variables."""
        load_dotenv(env_file)
        env = os.environ
        values: Dict[str, Any] = {
            "log_level": env.get("LOOPCUT_LOG_LEVEL", "INFO"),
            "log_json": env.get("LOOPCUT_LOG_JSON", "false").lower() == "true",
            "default_algorithm": env.get("LOOPCUT_ALGORITHM", "mga"),
            "phase2_method": env.get("LOOPCUT_PHASE2", "union-find"),
            "report_format": env.get("LOOPCUT_FORMAT", "tsv"),
        }
        try:
            values["workers"] = int(env.get("LOOPCUT_WORKERS", "1"))
            values["oracle"] = OracleBudget(
                max_vertices=int(env.get("LOOPCUT_ORACLE_MAX_VERTICES", "25")),
                max_nodes_expanded=int(env.get("LOOPCUT_ORACLE_MAX_NODES", "2000000")),
            )
            return cls(**values)
        except (ValueError, PydanticValidationError) as e:
            raise ConfigurationError(f"Invalid environment configuration: {e}") from e

    @classmethod
    def from_file(cls, config_path: str | Path) -> LoopcutConfig:
        """Load configuration from a YAML file."""
        config_file = Path(config_path)
        if not config_file.exists():
            raise ConfigurationError(f"Configuration file not found: {config_path}")

        with open(config_file, "r", encoding="utf-8") as f:
            config_data = yaml.safe_load(f) or {}

        try:
            return cls(**config_data)
        except (TypeError, PydanticValidationError) as e:
            raise ConfigurationError(f"Invalid configuration in {config_path}: {e}") from e


def load_experiment_presets(presets_path: str | Path = DEFAULT_PRESETS_PATH) -> Dict[str, ExperimentPreset]:
    """Load named experiment presets from YAML.

    A missing file yields no presets; a malformed one raises ConfigurationError.
    """
    presets_file = Path(presets_path)
    if not presets_file.exists():
        logger.warning("Experiment presets file not found, using none", file=str(presets_file))
        return {}

    with open(presets_file, "r", encoding="utf-8") as f:
        raw = yaml.safe_load(f) or {}

    entries = raw.get("experiments", {})
    presets: Dict[str, ExperimentPreset] = {}
    for name, entry in entries.items():
        try:
            presets[name] = ExperimentPreset(**entry)
        except (TypeError, PydanticValidationError) as e:
            raise ConfigurationError(f"Invalid experiment preset '{name}': {e}") from e

    logger.info("Experiment presets loaded", file=str(presets_file), presets=sorted(presets))
    return presets
