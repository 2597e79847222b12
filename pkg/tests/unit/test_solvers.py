"""Unit tests for the GA and MGA solvers."""

import json
import math

import pytest

from loopcut.core.errors import UnbreakableCycleError, ValidationError
from loopcut.core.logging import configure_logging
from loopcut.models.multigraph import INFINITE
from loopcut.services.exact_oracle import min_wvfs_exhaustive
from loopcut.services.graph_core import core_graph
from loopcut.services.instance_gen import random_multigraph
from loopcut.services.solvers import (
    charge_totals,
    is_minimal_fvs,
    run_ga,
    run_mga,
    validate_charges,
    validate_trace,
    verify_fvs,
)


class TestRunGA:
    """Test the plain greedy algorithm."""

    @pytest.mark.unit
    def test_weighted_triangle(self, weighted_triangle):
        result = run_ga(weighted_triangle)
        assert result.vertices == ["x"]
        assert result.total_weight == 1.0
        assert result.algorithm == "ga"

    @pytest.mark.unit
    def test_k4_ties_go_to_insertion_order(self, k4):
        result = run_ga(k4)
        assert result.vertices == ["a", "b"]
        assert result.total_weight == 2.0
        assert [r.ratio for r in result.trace] == pytest.approx([1 / 3, 1 / 2])

    @pytest.mark.unit
    def test_forest_gives_empty_set(self, make_graph):
        g = make_graph({"a": 1, "b": 1, "c": 1}, [("a", "b"), ("b", "c")])
        result = run_ga(g)
        assert result.vertices == []
        assert result.trace == []

    @pytest.mark.unit
    def test_input_untouched(self, k4):
        run_ga(k4)
        assert k4.n_vertices == 4
        assert k4.n_edges == 6

    @pytest.mark.unit
    @pytest.mark.parametrize("solver", [run_ga, run_mga])
    def test_unbreakable_self_loop(self, make_graph, solver):
        g = make_graph({"x": INFINITE}, [("x", "x")])
        with pytest.raises(UnbreakableCycleError, match="infinite-weight vertices"):
            solver(g)

    @pytest.mark.unit
    @pytest.mark.parametrize("solver", [run_ga, run_mga])
    def test_unbreakable_cycle_names_vertices(self, make_graph, solver):
        g = make_graph(
            {"a": 1.0, "p": INFINITE, "q": INFINITE, "r": INFINITE},
            [("a", "p"), ("p", "q"), ("q", "r"), ("r", "p")],
        )
        with pytest.raises(UnbreakableCycleError, match=r"infinite-weight vertices \(3 vertices.*p, q, r"):
            solver(g)

    @pytest.mark.unit
    def test_infinite_vertex_never_chosen(self, make_graph):
        g = make_graph(
            {"a": INFINITE, "b": 3.0, "c": 3.0},
            [("a", "b"), ("b", "c"), ("c", "a")],
        )
        assert run_ga(g).vertices == ["b"]


class TestRunMGA:
    """Test the modified greedy algorithm."""

    @pytest.mark.unit
    def test_weighted_triangle(self, weighted_triangle):
        result = run_mga(weighted_triangle)
        assert result.vertices == ["x"]
        assert result.phase2_removed == []

    @pytest.mark.unit
    def test_double_bowtie_phase2_drops_hub(self, double_bowtie):
        result = run_mga(double_bowtie)
        assert [r.vertex for r in result.trace] == ["h", "a1", "b1"]
        assert [r.ratio for r in result.trace] == pytest.approx([0.25, 0.375, 0.375])
        assert result.vertices == ["a1", "b1"]
        assert result.phase2_removed == ["h"]
        assert result.total_weight == 2.0
        assert is_minimal_fvs(double_bowtie, result.vertices)

    @pytest.mark.unit
    def test_double_bowtie_skip_phase2(self, double_bowtie):
        result = run_mga(double_bowtie, skip_phase2=True)
        assert result.algorithm == "mga-no-phase2"
        assert result.vertices == ["h", "a1", "b1"]
        assert verify_fvs(double_bowtie, result.vertices)
        assert not is_minimal_fvs(double_bowtie, result.vertices)

    @pytest.mark.unit
    def test_theta(self, theta):
        result = run_mga(theta)
        assert result.vertices == ["p1", "p2"]
        assert result.total_weight == pytest.approx(1.2)
        assert result.total_weight <= 2 * min_wvfs_exhaustive(theta).total_weight

    @pytest.mark.unit
    @pytest.mark.parametrize("fixture", ["double_bowtie", "theta", "k4", "weighted_triangle"])
    def test_phase2_methods_agree(self, fixture, request):
        g = request.getfixturevalue(fixture)
        assert run_mga(g, phase2_method="union-find").vertices == run_mga(g, phase2_method="retest").vertices

    @pytest.mark.unit
    def test_unknown_phase2_method(self, triangle):
        with pytest.raises(ValidationError):
            run_mga(triangle, phase2_method="magic")

    @pytest.mark.unit
    def test_charge_accounting_double_bowtie(self, double_bowtie, config):
        result = run_mga(double_bowtie, skip_phase2=True)
        totals = charge_totals(double_bowtie, result)
        assert totals["h"] == pytest.approx(1.0)
        assert validate_charges(double_bowtie, result, config.charge_tolerance)
        assert validate_charges(double_bowtie, run_mga(double_bowtie), config.charge_tolerance)

    @pytest.mark.unit
    def test_validate_charges_rejects_overcharge(self, double_bowtie, config):
        result = run_mga(double_bowtie)
        inflated = {eid: 2 * charge for eid, charge in result.charges.items()}
        assert not validate_charges(
            double_bowtie, result.model_copy(update={"charges": inflated}), config.charge_tolerance
        )

    @pytest.mark.unit
    def test_validate_charges_rejects_underpaid_pick(self, theta, config):
        result = run_mga(theta)
        short = {eid: 0.5 * charge for eid, charge in result.charges.items()}
        assert not validate_charges(
            theta, result.model_copy(update={"charges": short}), config.charge_tolerance
        )

    @pytest.mark.unit
    def test_charge_accounting_theta(self, theta):
        result = run_mga(theta)
        totals = charge_totals(theta, result)
        assert totals["p1"] == pytest.approx(0.6)
        assert totals["p2"] == pytest.approx(0.6)
        assert totals["u"] <= 1.0 + 1e-6
        assert validate_trace(result)

    @pytest.mark.unit
    def test_self_loop_vertex(self, make_graph):
        g = make_graph({"a": 2.0, "b": 1.0}, [("a", "a"), ("a", "b"), ("a", "b")])
        result = run_mga(g)
        assert result.vertices == ["a"]
        totals = charge_totals(g, result)
        assert totals["a"] == pytest.approx(2.0)


class TestSolverRuns:
    """Test run-level behaviour shared by both solvers."""

    @pytest.mark.unit
    @pytest.mark.parametrize("solver", [run_ga, run_mga])
    @pytest.mark.parametrize("seed", [3, 8, 21])
    def test_repeat_runs_are_identical(self, solver, seed):
        g = random_multigraph(40, 90, seed, parallel=True, self_loops=True)
        first = solver(g)
        second = solver(g)
        assert first.model_dump() == second.model_dump()
        assert first.trace

    @pytest.mark.unit
    @pytest.mark.parametrize("solver", [run_ga, run_mga])
    def test_one_log_entry_per_run(self, solver, capsys):
        configure_logging(level="DEBUG", format_json=True)
        try:
            g = random_multigraph(60, 150, 5)
            capsys.readouterr()
            result = solver(g)
            captured = capsys.readouterr()
        finally:
            configure_logging(level="WARNING")
        assert len(result.trace) > 1
        assert captured.out == ""
        entries = [json.loads(line) for line in captured.err.splitlines() if line.strip()]
        solver_entries = [e for e in entries if e["logger"] == "loopcut.services.solvers"]
        assert [e["event"] for e in solver_entries] == ["Solve finished"]
        assert solver_entries[0]["iterations"] == len(result.trace)


class TestChecks:
    """Test FVS verification helpers."""

    @pytest.mark.unit
    def test_verify_fvs(self, triangle, k4):
        assert verify_fvs(triangle, ["a"])
        assert not verify_fvs(triangle, [])
        assert verify_fvs(k4, ["a", "b"])

    @pytest.mark.unit
    def test_is_minimal(self, triangle):
        assert is_minimal_fvs(triangle, ["a"])
        assert not is_minimal_fvs(triangle, ["a", "b"])

    @pytest.mark.unit
    def test_is_minimal_requires_fvs(self, triangle):
        with pytest.raises(ValidationError):
            is_minimal_fvs(triangle, [])


class TestRandomizedGuarantees:
    """Approximation guarantees and charge invariants on small random graphs."""

    @pytest.mark.property
    @pytest.mark.parametrize("seed", range(60))
    def test_guarantees(self, seed, config):
        g = random_multigraph(
            9,
            16,
            seed,
            infinite_fraction=0.15 if seed % 3 == 0 else 0.0,
            self_loops=seed % 4 == 1,
            parallel=seed % 2 == 1,
        )
        try:
            optimum = min_wvfs_exhaustive(g).total_weight
        except UnbreakableCycleError:
            with pytest.raises(UnbreakableCycleError):
                run_mga(g)
            return

        mga = run_mga(g)
        ga = run_ga(g)
        core = core_graph(g)
        max_degree = max((core.degree(v) for v in core.vertices()), default=1)

        assert verify_fvs(g, mga.vertices)
        assert is_minimal_fvs(g, mga.vertices)
        assert mga.total_weight <= 2 * optimum + 1e-9
        assert ga.total_weight <= 2 * (math.log(max_degree) + 1) * optimum + 1e-9
        assert validate_trace(mga)
        assert validate_trace(ga)

        assert validate_charges(g, run_mga(g, skip_phase2=True), config.charge_tolerance)
        assert validate_charges(g, mga, config.charge_tolerance)
