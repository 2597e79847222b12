"""Batch experiments on generated networks.

Bands are wider than the published figures; the generator here is loopcut's own.
"""

import time

import pytest

from loopcut.core.logging import configure_logging
from loopcut.models.results import PairwiseRecord
from loopcut.services.experiments import run_experiment, write_batch
from loopcut.services.instance_gen import instance_spec, random_multigraph
from loopcut.services.solvers import run_mga


def _batch(tmp_path, name, **fields):
    out = tmp_path / name
    write_batch(instance_spec(**fields), out)
    return out


@pytest.mark.integration
class TestAgainstOptimum:
    """MGA against the exact loop cutset."""

    def test_binary_15_25(self, tmp_path, config):
        batch = _batch(tmp_path, "b", n_vertices=15, n_edges=25, count=100, seed=1000)
        report = run_experiment(batch, ["ga", "mga"], with_exact=True, config=config)
        mga = next(s for s in report.summaries if s.algorithm == "mga")
        assert mga.budget_exceeded == 0
        assert mga.instances == 100
        assert 1.0 <= mga.mean_ratio <= 1.1
        assert mga.optimal_count >= 90

        sizes = [row.set_size for row in report.rows if row.algorithm == "exact"]
        assert len(sizes) == 100
        assert 2 <= sum(sizes) / len(sizes) <= 7

    def test_varied_domains(self, tmp_path, config):
        summaries = []
        for lo_hi, seed in (((2, 6), 4000), ((2, 8), 4100), ((2, 10), 4200)):
            batch = _batch(
                tmp_path, f"d{lo_hi[1]}",
                n_vertices=15, n_edges=25, domain_lo=lo_hi[0], domain_hi=lo_hi[1], count=100, seed=seed,
            )
            report = run_experiment(batch, ["mga"], with_exact=True, config=config)
            summaries.append(report.summaries[0])
        mean = sum(s.mean_ratio * s.instances for s in summaries) / sum(s.instances for s in summaries)
        assert 1.0 <= mean <= 1.35


@pytest.mark.integration
class TestGreedyComparison:
    """MGA beats GA on most instances where they differ."""

    def test_larger_binary_networks(self, tmp_path, config):
        first_better = second_better = 0
        shapes = [(25, 25), (25, 50), (25, 75), (55, 55), (55, 75), (55, 105)]
        for i, (n, m) in enumerate(shapes):
            batch = _batch(tmp_path, f"s{i}", n_vertices=n, n_edges=m, count=100, seed=3000 + 100 * i)
            pair = run_experiment(batch, ["ga", "mga"], config=config).pairs[0]
            first_better += pair.first_better
            second_better += pair.second_better
        total = PairwiseRecord(first="ga", second="mga", first_better=first_better, second_better=second_better)
        assert total.disagreements > 0
        assert total.second_share >= 0.7


@pytest.mark.integration
class TestScale:
    """MGA stays near-linear on large sparse graphs."""

    def test_hundred_thousand_vertices(self):
        configure_logging(level="WARNING")
        g = random_multigraph(100_000, 300_000, 17)
        started = time.perf_counter()
        result = run_mga(g)
        elapsed = time.perf_counter() - started
        assert result.size > 0
        assert elapsed < 10.0
