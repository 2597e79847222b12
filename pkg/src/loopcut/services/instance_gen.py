"""Seeded random instance generation.

Every instance draws from its own numpy ``Generator(PCG64)`` seeded through
``SeedSequence(seed + index)``, so a batch is reproducible instance by
instance and can be generated in any order. Connectivity is not enforced.
"""

from __future__ import annotations

from collections.abc import Iterator
from typing import Optional

import numpy as np
import pydantic

from ..core.errors import ValidationError
from ..core.logging import get_logger
from ..models.multigraph import INFINITE, WeightedMultigraph
from ..models.network import DirectedNetwork
from ..models.results import InstanceSpec, ManifestEntry

GENERATOR_NAME = "numpy.PCG64"
CONNECTIVITY = "not-enforced"

logger = get_logger(__name__)


def instance_spec(**fields) -> InstanceSpec:
    """Build an InstanceSpec, reporting infeasible parameters as ValidationError."""
    try:
        return InstanceSpec(**fields)
    except pydantic.ValidationError as e:
        messages = "; ".join(err["msg"] for err in e.errors())
        raise ValidationError(f"Invalid instance parameters: {messages}") from e


def make_rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed)))


def vertex_names(n: int) -> list[str]:
    width = max(2, len(str(n - 1)))
    return [f"v{i:0{width}d}" for i in range(n)]


def random_dag(spec: InstanceSpec, index: int = 0) -> DirectedNetwork:
    """Random DAG with exactly ``spec.n_edges`` edges.

    A random permutation fixes the topological order; distinct unordered
    pairs are sampled uniformly without replacement and oriented from the
    earlier to the later vertex. Domain sizes are uniform in
    ``[spec.domain_lo, spec.domain_hi]``.
    """
    n, m = spec.n_vertices, spec.n_edges
    rng = make_rng(spec.seed + index)
    order = rng.permutation(n).tolist()
    rows, cols = _sample_pairs(rng, n, m)
    sizes = rng.integers(spec.domain_lo, spec.domain_hi + 1, size=n)

    names = vertex_names(n)
    d = DirectedNetwork()
    for name, size in zip(names, sizes):
        d.add_node(name, int(size))
    for i, j in zip(rows.tolist(), cols.tolist()):
        d.add_edge(names[order[i]], names[order[j]])
    return d


def manifest_entries(spec: InstanceSpec) -> list[ManifestEntry]:
    """One manifest entry per instance of the batch, without generating it."""
    return [
        ManifestEntry(
            index=index,
            seed=spec.seed + index,
            n_vertices=spec.n_vertices,
            n_edges=spec.n_edges,
            domain_lo=spec.domain_lo,
            domain_hi=spec.domain_hi,
        )
        for index in range(spec.count)
    ]


def generate_batch(spec: InstanceSpec) -> Iterator[tuple[ManifestEntry, DirectedNetwork]]:
    """Yield ``spec.count`` networks with their manifest entries."""
    for entry in manifest_entries(spec):
        yield entry, random_dag(spec, entry.index)


def random_multigraph(
    n: int,
    m: int,
    seed: int,
    *,
    weight_range: tuple[float, float] = (0.0, 1.0),
    domains: Optional[tuple[int, int]] = None,
    infinite_fraction: float = 0.0,
    self_loops: bool = False,
    parallel: bool = False,
) -> WeightedMultigraph:
    """Random WVFS instance.

    Finite weights are uniform in ``(lo, hi]`` of ``weight_range``, or
    ``ln`` of a uniform domain size when ``domains`` is given. Each vertex is
    independently made infinite with probability ``infinite_fraction``.
    Without ``parallel`` the edges are distinct pairs sampled without
    replacement; with it, endpoints are drawn independently.
    """
    if n < 1 or m < 0:
        raise ValidationError(f"Need n >= 1 and m >= 0, got n={n} m={m}")
    if not 0.0 <= infinite_fraction <= 1.0:
        raise ValidationError(f"infinite_fraction must be in [0, 1], got {infinite_fraction}")
    rng = make_rng(seed)

    if domains is not None:
        lo, hi = domains
        weights = np.log(rng.integers(lo, hi + 1, size=n).astype(float))
    else:
        lo_w, hi_w = weight_range
        if hi_w <= lo_w or lo_w < 0:
            raise ValidationError(f"Invalid weight range: {weight_range}")
        weights = lo_w + (hi_w - lo_w) * (1.0 - rng.random(n))
    infinite = rng.random(n) < infinite_fraction

    if parallel:
        us = rng.integers(0, n, size=m)
        if self_loops:
            vs = rng.integers(0, n, size=m)
        elif m and n < 2:
            raise ValidationError("Edges without self-loops need at least 2 vertices")
        else:
            vs = (us + rng.integers(1, n, size=m)) % n
    else:
        us, vs = _sample_pairs(rng, n, m, diagonal=self_loops)

    names = vertex_names(n)
    g = WeightedMultigraph()
    for name, weight, inf in zip(names, weights, infinite):
        g.add_vertex(name, INFINITE if inf else float(weight))
    for u, v in zip(us.tolist(), vs.tolist()):
        g.add_edge_at(u, v)
    logger.debug("Random multigraph generated", vertices=n, edges=m, seed=seed)
    return g


def _sample_pairs(
    rng: np.random.Generator, n: int, m: int, *, diagonal: bool = False
) -> tuple[np.ndarray, np.ndarray]:
    """``m`` distinct pairs (i < j, or i == j with ``diagonal``) in pair-index order."""
    off_diagonal = n * (n - 1) // 2
    pool = off_diagonal + (n if diagonal else 0)
    if m > pool:
        raise ValidationError(f"{m} edges do not fit on {n} vertices (max {pool})")
    if m == 0:
        empty = np.zeros(0, dtype=np.int64)
        return empty, empty
    ks = np.sort(rng.choice(pool, size=m, replace=False)).astype(np.int64)
    loops = ks >= off_diagonal
    rows, cols = _pair_at(np.where(loops, 0, ks), n)
    rows = np.where(loops, ks - off_diagonal, rows)
    cols = np.where(loops, ks - off_diagonal, cols)
    return rows, cols


def _pair_at(ks: np.ndarray, n: int) -> tuple[np.ndarray, np.ndarray]:
    """Row-major (i, j), i < j, of the k-th upper-triangle pair."""
    if n < 2:
        return np.zeros_like(ks), np.zeros_like(ks)
    root = np.sqrt(-8.0 * ks + 4.0 * n * (n - 1) - 7.0)
    rows = n - 2 - np.floor(root / 2.0 - 0.5).astype(np.int64)
    # float rounding can land one row off near row boundaries
    rows = np.where(ks < _row_start(rows, n), rows - 1, rows)
    rows = np.where(ks >= _row_start(rows + 1, n), rows + 1, rows)
    cols = ks - _row_start(rows, n) + rows + 1
    return rows, cols


def _row_start(rows: np.ndarray, n: int) -> np.ndarray:
    return rows * n - rows * (rows + 1) // 2
