"""Unit tests for solver dispatch and loop cutsets."""

import math
from unittest.mock import patch

import pytest

from loopcut.core.errors import SelfCheckError, UnbreakableCycleError, ValidationError
from loopcut.models.results import SolveResult
from loopcut.services.pipeline import loop_cutset, solve_graph
from loopcut.services.solvers import validate_charges


class TestSolveGraph:
    """Test WVFS dispatch."""

    @pytest.mark.unit
    @pytest.mark.parametrize("algorithm", ["ga", "mga", "exact"])
    def test_all_algorithms(self, weighted_triangle, algorithm, config):
        result = solve_graph(weighted_triangle, algorithm, config=config)
        assert result.total_weight == 1.0

    @pytest.mark.unit
    def test_unknown_algorithm(self, triangle):
        with pytest.raises(ValidationError, match="Unknown algorithm"):
            solve_graph(triangle, "a1")

    @pytest.mark.unit
    def test_self_check_failure(self, triangle):
        bogus = SolveResult(algorithm="mga", vertices=[])
        with patch("loopcut.services.pipeline.run_mga", return_value=bogus):
            with pytest.raises(SelfCheckError):
                solve_graph(triangle, "mga")

    @pytest.mark.unit
    def test_charge_check_failure(self, triangle, config):
        honest = solve_graph(triangle, "mga", config=config)
        assert validate_charges(triangle, honest, config.charge_tolerance)
        skewed = honest.model_copy(update={"charges": {eid: 0.0 for eid in honest.charges}})
        with patch("loopcut.services.pipeline.run_mga", return_value=skewed):
            with pytest.raises(SelfCheckError, match="charges"):
                solve_graph(triangle, "mga", config=config)

    @pytest.mark.unit
    def test_charge_check_skipped_for_ga(self, triangle, config):
        uncharged = SolveResult(algorithm="ga", vertices=["a"], total_weight=1.0)
        with patch("loopcut.services.pipeline.run_ga", return_value=uncharged):
            assert solve_graph(triangle, "ga", config=config) is uncharged

    @pytest.mark.unit
    def test_retest_phase2_from_config(self, double_bowtie, config):
        config.phase2_method = "retest"
        assert solve_graph(double_bowtie, "mga", config=config).vertices == ["a1", "b1"]


class TestLoopCutset:
    """Test network loop cutsets."""

    @pytest.mark.unit
    @pytest.mark.parametrize("algorithm", ["ga", "mga", "exact"])
    def test_chain(self, chain_network, algorithm):
        result = loop_cutset(chain_network, algorithm)
        assert result.vertices == []
        assert result.instance_count == 1
        assert result.instance_count_log == 0.0

    @pytest.mark.unit
    def test_loop_network(self, loop_network):
        result = loop_cutset(loop_network, "mga")
        assert result.vertices == ["a"]
        assert result.instance_count == 2
        assert result.total_weight == pytest.approx(math.log(2))
        assert result.trace[0].ratio == pytest.approx(math.log(2) / 2)
        assert result.trace[0].vertex == "a_out"

    @pytest.mark.unit
    @pytest.mark.parametrize("algorithm", ["ga", "mga", "exact"])
    def test_diamond(self, diamond_network, algorithm):
        result = loop_cutset(diamond_network, algorithm)
        assert len(result.vertices) == 1
        assert result.vertices[0] in {"a", "b", "c"}
        if algorithm != "exact":
            assert result.vertices == ["a"]
        assert result.instance_count == 2
        assert result.total_weight == pytest.approx(math.log(2))

    @pytest.mark.unit
    def test_unbreakable_never_happens_for_networks(self, diamond_network):
        try:
            loop_cutset(diamond_network, "ga")
        except UnbreakableCycleError:  # pragma: no cover
            pytest.fail("split graphs always have a finite vertex on every cycle")
