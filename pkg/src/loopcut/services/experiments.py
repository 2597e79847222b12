"""Experiment harness: generate batches, solve them, tabulate the comparison.

Algorithms are compared by total weight (sum of ln domain sizes): a weight
smaller by more than the tolerance wins. Against the exact optimum each
instance contributes the instance-count ratio exp(w - w_opt).
"""

from __future__ import annotations

import math
import time
from concurrent.futures import ProcessPoolExecutor
from itertools import combinations
from pathlib import Path
from typing import Optional, Sequence

import numpy as np

from ..core.config import LoopcutConfig, load_experiment_presets
from ..core.errors import BudgetExceededError, ValidationError
from ..core.logging import ContextLogger
from ..models.results import (
    ExperimentReport,
    ExperimentRow,
    InstanceSpec,
    ManifestEntry,
    PairwiseRecord,
    RatioSummary,
)
from ..utils.textformat import (
    MANIFEST_NAME,
    load_network,
    parse_manifest,
    read_text,
    write_graph,
    write_manifest,
    write_network,
)
from .instance_gen import (
    CONNECTIVITY,
    GENERATOR_NAME,
    instance_spec,
    manifest_entries,
    random_dag,
    random_multigraph,
)
from .pipeline import loop_cutset

_log = ContextLogger(__name__)


def write_batch(spec: InstanceSpec, out_dir: str | Path, kind: str = "network") -> list[Path]:
    """Write ``spec.count`` instances plus a manifest into ``out_dir``.

    ``kind="graph"`` writes WVFS graphs whose weights are ln of the sampled
    domain sizes, with edges as unordered pairs.
    """
    if kind not in ("network", "graph"):
        raise ValidationError(f"Unknown instance kind {kind!r}")
    target = Path(out_dir)
    entries: list[ManifestEntry] = []
    paths: list[Path] = []
    try:
        target.mkdir(parents=True, exist_ok=True)
        for entry in manifest_entries(spec):
            if kind == "network":
                text = write_network(random_dag(spec, entry.index))
            else:
                text = write_graph(random_multigraph(
                    spec.n_vertices,
                    spec.n_edges,
                    entry.seed,
                    domains=(spec.domain_lo, spec.domain_hi),
                ))
            path = target / entry.file_name
            path.write_text(text, encoding="utf-8")
            entries.append(entry)
            paths.append(path)
        metadata = {"generator": GENERATOR_NAME, "connectivity": CONNECTIVITY, "kind": kind}
        (target / MANIFEST_NAME).write_text(write_manifest(entries, metadata), encoding="utf-8")
    except OSError as e:
        raise ValidationError(f"Cannot write instances to {target}: {e}") from e
    _log.info("Batch written", directory=str(target), kind=kind, count=len(paths))
    return paths


def run_experiment(
    directory: str | Path,
    algorithms: Sequence[str] = ("ga", "mga"),
    with_exact: bool = False,
    *,
    config: Optional[LoopcutConfig] = None,
) -> ExperimentReport:
    """Solve every network file in ``directory`` with every algorithm.

    Unreadable or invalid files are skipped and counted. Budget overruns of
    the exact oracle are reported per row and left out of the ratio means.
    """
    config = config or LoopcutConfig()
    algorithms = list(dict.fromkeys(algorithms))
    for name in algorithms:
        if name not in ("ga", "mga"):
            raise ValidationError(f"Unknown algorithm {name!r} for experiments")
    paths, metadata = _instance_files(Path(directory))
    log = _log.bind(directory=str(directory), instances=len(paths), algorithms=",".join(algorithms))
    log.info("Experiment started", exact=with_exact, workers=config.workers)

    jobs = [(path, algorithms, with_exact, config) for path in paths]
    if config.workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            outcomes = list(pool.map(_solve_instance, *zip(*jobs)))
    else:
        outcomes = [_solve_instance(*job) for job in jobs]

    rows: list[ExperimentRow] = []
    skipped = 0
    for path, outcome in zip(paths, outcomes):
        if isinstance(outcome, str):
            skipped += 1
            log.warning("Instance skipped", file=str(path), reason=outcome)
        else:
            rows.extend(outcome)

    order = {name: i for i, name in enumerate([*algorithms, "exact"])}
    rows.sort(key=lambda r: (r.instance, order[r.algorithm]))

    notes = [f"comparison by total weight, tolerance {config.compare_tolerance:g}"]
    notes += [f"{key} {value}" for key, value in metadata.items()]
    report = ExperimentReport(
        rows=rows,
        pairs=pairwise_table(rows, algorithms, config.compare_tolerance),
        summaries=ratio_summaries(rows, algorithms, config.compare_tolerance) if with_exact else [],
        skipped=skipped,
        notes=notes,
    )
    log.info("Experiment finished", rows=len(rows), skipped=skipped)
    return report


def run_preset(
    name: str,
    out_dir: str | Path,
    *,
    config: Optional[LoopcutConfig] = None,
    presets_path: Optional[str | Path] = None,
) -> ExperimentReport:
    """Generate the batch a named preset describes into ``out_dir`` and run it."""
    presets = load_experiment_presets(presets_path) if presets_path else load_experiment_presets()
    if name not in presets:
        raise ValidationError(f"Unknown preset {name!r}; known: {', '.join(sorted(presets)) or 'none'}")
    preset = presets[name]
    lo, hi = preset.domain_range
    spec = instance_spec(
        n_vertices=preset.nodes,
        n_edges=preset.edges,
        domain_lo=lo,
        domain_hi=hi,
        seed=preset.seed,
        count=preset.count,
    )
    write_batch(spec, out_dir)
    return run_experiment(out_dir, preset.algorithms, preset.exact, config=config)


def pairwise_table(rows: list[ExperimentRow], algorithms: Sequence[str], tolerance: float) -> list[PairwiseRecord]:
    weights = _weights_by_instance(rows)
    pairs = []
    for first, second in combinations(algorithms, 2):
        record = PairwiseRecord(first=first, second=second)
        for by_algorithm in weights.values():
            if first not in by_algorithm or second not in by_algorithm:
                continue
            diff = by_algorithm[first] - by_algorithm[second]
            if diff < -tolerance:
                record.first_better += 1
            elif diff > tolerance:
                record.second_better += 1
            else:
                record.ties += 1
        pairs.append(record)
    return pairs


def ratio_summaries(rows: list[ExperimentRow], algorithms: Sequence[str], tolerance: float) -> list[RatioSummary]:
    weights = _weights_by_instance(rows)
    exceeded = sum(1 for r in rows if r.algorithm == "exact" and r.status == "budget-exceeded")
    summaries = []
    for name in algorithms:
        gaps = np.array([
            max(0.0, by_algorithm[name] - by_algorithm["exact"])
            for by_algorithm in weights.values()
            if name in by_algorithm and "exact" in by_algorithm
        ])
        summary = RatioSummary(algorithm=name, instances=int(gaps.size), budget_exceeded=exceeded)
        if gaps.size:
            ratios = np.exp(gaps)
            summary.mean_ratio = float(np.mean(ratios))
            summary.geometric_mean_ratio = float(np.exp(np.mean(gaps)))
            summary.max_ratio = float(np.max(ratios))
            summary.optimal_count = int(np.count_nonzero(gaps <= tolerance))
        summaries.append(summary)
    return summaries


def _weights_by_instance(rows: list[ExperimentRow]) -> dict[str, dict[str, float]]:
    table: dict[str, dict[str, float]] = {}
    for row in rows:
        if row.status == "ok" and row.weight is not None:
            table.setdefault(row.instance, {})[row.algorithm] = row.weight
    return table


def _instance_files(directory: Path) -> tuple[list[Path], dict[str, str]]:
    if not directory.is_dir():
        raise ValidationError(f"Not a directory: {directory}")
    manifest = directory / MANIFEST_NAME
    if manifest.exists():
        metadata, entries = parse_manifest(read_text(manifest), source=str(manifest))
        if metadata.get("kind", "network") != "network":
            raise ValidationError(f"{directory} holds {metadata['kind']} instances, not networks")
        return [directory / e.file_name for e in entries], metadata
    return sorted(p for p in directory.glob("*.txt") if p.name != MANIFEST_NAME), {}


def _solve_instance(
    path: Path,
    algorithms: Sequence[str],
    with_exact: bool,
    config: LoopcutConfig,
) -> list[ExperimentRow] | str:
    """Rows for one instance, or the reason it was skipped."""
    try:
        network = load_network(path)
    except ValidationError as e:
        return str(e)

    instance = path.stem
    rows = []
    for name in [*algorithms, "exact"] if with_exact else algorithms:
        start = time.perf_counter()
        try:
            result = loop_cutset(network, name, config=config)
        except BudgetExceededError:
            _log.warning("Exact oracle budget exceeded", instance=instance)
            rows.append(ExperimentRow(
                instance=instance,
                algorithm=name,
                millis=(time.perf_counter() - start) * 1000.0,
                status="budget-exceeded",
            ))
            continue
        rows.append(ExperimentRow(
            instance=instance,
            algorithm=name,
            set_size=result.size,
            weight=result.total_weight,
            instances_log=result.instance_count_log,
            millis=(time.perf_counter() - start) * 1000.0,
        ))

    exact = rows[-1] if with_exact else None
    if exact is not None and exact.status == "ok":
        for row in rows[:-1]:
            row.ratio = math.exp(max(0.0, row.weight - exact.weight))
        exact.ratio = 1.0
    _log.debug("Instance solved", instance=instance, rows=len(rows))
    return rows
