"""Unit tests for the exact chromatic oracle."""
import pytest

from typegraph.colorings import Coloring, color_G1_graph, color_shift_graph, verify_proper
from typegraph.dyadic import ceil_log2
from typegraph.exceptions import BudgetExceeded, CoverageGap, TypeGraphError
from typegraph.graphs import Graph, build_Gb, build_typegraph
from typegraph.oracle import (
    clique_lower_bound,
    dsatur_order,
    exact_chromatic,
    greedy_coloring,
    search_order,
)
from typegraph.order_types import parse_type
from typegraph.utils.settings import reset_settings


class TestHeuristics:
    def test_greedy_on_triangle(self, triangle):
        coloring = greedy_coloring(triangle)
        assert coloring.colors == (0, 1, 2)

    def test_greedy_rejects_bad_orders(self, triangle):
        with pytest.raises(CoverageGap):
            greedy_coloring(triangle, [0, 0, 1])

    def test_greedy_follows_the_order(self):
        # path 0-1-2-3: natural order needs 2 colours, 0,3,1,2 needs 3
        path = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
        assert greedy_coloring(path).palette_size == 2
        assert greedy_coloring(path, [0, 3, 1, 2]).palette_size == 3

    def test_dsatur_order_is_a_permutation(self, five_cycle):
        order = dsatur_order(five_cycle)
        assert sorted(order) == list(range(5))
        assert order[0] == 0

    def test_clique_bound(self, k4, five_cycle):
        assert clique_lower_bound(k4) == 4
        assert clique_lower_bound(five_cycle) == 2


class TestExactChromatic:
    @pytest.mark.parametrize(("fixture", "chi"), [("triangle", 3), ("five_cycle", 3), ("k4", 4)])
    def test_small_graphs(self, request, fixture, chi):
        graph = request.getfixturevalue(fixture)
        result = exact_chromatic(graph)
        assert result.chi == chi
        assert result.witness.palette_size == chi
        assert verify_proper(graph, result.witness).proper
        assert result.lower <= chi <= result.upper

    def test_empty_and_edgeless_graphs(self):
        assert exact_chromatic(Graph.from_edges(0, [])).chi == 0
        assert exact_chromatic(Graph.from_edges(3, [])).chi == 1

    @pytest.mark.parametrize("n", range(1, 9))
    def test_clique_type_graph(self, n):
        assert exact_chromatic(build_typegraph(n, parse_type("12"))).chi == n

    @pytest.mark.parametrize("n", range(1, 9))
    def test_first_auxiliary_graph_is_a_clique(self, n):
        assert exact_chromatic(build_Gb(1, n)).chi == n
        assert color_G1_graph(n).palette_size == n

    @pytest.mark.parametrize("n", list(range(2, 9)))
    def test_shift_graph_needs_log_n_colours(self, n):
        result = exact_chromatic(build_typegraph(n, parse_type("132")))
        assert result.chi == ceil_log2(n)

    def test_auxiliary_graph_without_edges(self):
        assert exact_chromatic(build_Gb(2, 2)).chi == 1

    def test_odd_cycle_lifts_the_lower_bound(self, five_cycle):
        result = exact_chromatic(five_cycle)
        assert result.lower == 3
        assert result.chi == 3
        assert result.nodes_explored == 0

    def test_node_budget(self):
        with pytest.raises(BudgetExceeded) as info:
            exact_chromatic(build_typegraph(9, parse_type("132")), budget_nodes=1)
        assert info.value.lower == 3
        assert info.value.upper >= 4
        assert info.value.exit_code == 4

    def test_zero_budget_is_taken_literally(self):
        with pytest.raises(BudgetExceeded) as info:
            exact_chromatic(build_typegraph(9, parse_type("132")), budget_nodes=0)
        assert info.value.nodes_explored == 1

    def test_budget_defaults_come_from_settings(self, monkeypatch):
        monkeypatch.setenv("TYPEGRAPH_BUDGET_NODES", "1")
        reset_settings()
        with pytest.raises(BudgetExceeded):
            exact_chromatic(build_typegraph(9, parse_type("132")))

    def test_report(self, five_cycle):
        report = exact_chromatic(five_cycle).to_report()
        assert report.chi == 3
        assert len(report.colors) == 5
        assert report.nodes_explored == 0


class TestUpperHint:
    def test_hint_caps_the_search(self):
        graph = build_typegraph(9, parse_type("132"))
        result = exact_chromatic(graph, upper_hint=color_shift_graph(9))
        assert result.upper == 4
        assert result.chi == 4
        assert verify_proper(graph, result.witness).proper

    def test_hint_must_be_proper(self):
        graph = build_typegraph(5, parse_type("132"))
        flat = Coloring.from_colors(graph, [0] * graph.order)
        with pytest.raises(TypeGraphError, match="not proper"):
            exact_chromatic(graph, upper_hint=flat)

    def test_hint_must_colour_the_same_vertices(self):
        with pytest.raises(CoverageGap):
            exact_chromatic(build_typegraph(9, parse_type("132")), upper_hint=color_shift_graph(8))


class TestSearchOrder:
    def test_colex_order_of_pairs(self):
        # lexicographic (1,2) (1,3) (1,4) (2,3) (2,4) (3,4)
        graph = build_typegraph(4, parse_type("132"))
        assert search_order(graph) == [0, 1, 3, 2, 4, 5]

    def test_plain_graphs_keep_their_order(self, five_cycle):
        assert search_order(five_cycle) == [0, 1, 2, 3, 4]

    def test_prefixes_are_smaller_ground_sets(self):
        graph = build_typegraph(7, parse_type("1332"))
        maxima = [max(graph.vertices[v]) for v in search_order(graph)]
        assert maxima == sorted(maxima)
