import math
from fractions import Fraction

import networkx as nx
import pytest

from factor_graph.extended import NEG_INF, POS_INF, ext_add, format_extended, is_finite
from factor_graph.girth import girth
from factor_graph.graph import build_factor_graph, constraint_node, eval_factor, objective, variable_node
from instances.model import ProblemInstance
from utils.errors import DimensionError


class TestExtendedValues:
    def test_infinities_absorb(self):
        assert ext_add([Fraction(1, 2), NEG_INF, Fraction(3)]) == NEG_INF
        assert ext_add([]) == 0
        assert NEG_INF < Fraction(-10 ** 9) < POS_INF

    def test_format(self):
        assert format_extended(NEG_INF) == "-inf"
        assert format_extended(POS_INF) == "inf"
        assert format_extended(Fraction(-2, 4)) == "-1/2"
        assert not is_finite(POS_INF)
        assert is_finite(Fraction(0))


class TestFactorGraph:
    def test_structure(self, triangle):
        fg = build_factor_graph(triangle)
        assert fg.edges == ((0, 0), (1, 0), (1, 1), (2, 1), (0, 2), (2, 2))
        assert fg.var_neighbors == ((0, 2), (0, 1), (1, 2))
        assert fg.budgets == (1, 1, 1)
        assert fg.graph.number_of_nodes() == 6
        assert fg.graph.has_edge(variable_node(2), constraint_node(1))
        assert nx.is_bipartite(fg.graph)

    def test_fractional_budget(self):
        inst = ProblemInstance(n=2, m=1, rows=[[0, 1]], b=["5/2"], w=[1, 1], X=[2, 2])
        assert build_factor_graph(inst).budgets == (2,)

    def test_phi(self, path2):
        fg = build_factor_graph(path2)
        assert fg.phi(0, 1) == 2
        assert fg.phi(1, 0) == 0

    def test_eval_factor_packing(self, triangle):
        fg = build_factor_graph(triangle)
        assert eval_factor(fg, 0, [1, 0]) == 0
        assert eval_factor(fg, 0, {0: 1, 1: 1}) == NEG_INF

    def test_eval_factor_covering(self, triangle_cover):
        fg = build_factor_graph(triangle_cover)
        assert eval_factor(fg, 1, [0, 1]) == 0
        assert eval_factor(fg, 1, {1: 0, 2: 0}) == POS_INF

    @pytest.mark.parametrize("y", [[1], [1, 0, 0], {0: 1}, {0: 1, 2: 0}])
    def test_eval_factor_dimension(self, triangle, y):
        with pytest.raises(DimensionError):
            eval_factor(build_factor_graph(triangle), 0, y)

    def test_objective(self, triangle, triangle_cover):
        assert objective(build_factor_graph(triangle), (1, 0, 0)) == 1
        assert objective(build_factor_graph(triangle), (1, 1, 0)) == NEG_INF
        assert objective(build_factor_graph(triangle_cover), (1, 1, 0)) == 2
        assert objective(build_factor_graph(triangle_cover), (1, 0, 0)) == POS_INF
        with pytest.raises(DimensionError):
            objective(build_factor_graph(triangle), (1,))

    def test_to_dot(self, path2):
        dot = build_factor_graph(path2).to_dot()
        assert dot.startswith("graph factor_graph {")
        assert "v0 -- C1;" in dot
        assert "v1 -- C2;" in dot


class TestGirth:
    @pytest.mark.parametrize("k", [3, 4, 5, 8])
    def test_cycles(self, k):
        assert girth(nx.cycle_graph(k)) == k

    def test_forest(self):
        assert girth(nx.path_graph(6)) == math.inf
        assert girth(nx.empty_graph(3)) == math.inf

    @pytest.mark.parametrize("graph, expected", [
        (nx.complete_graph(4), 3),
        (nx.complete_bipartite_graph(3, 3), 4),
        (nx.petersen_graph(), 5),
        (nx.heawood_graph(), 6),
    ])
    def test_known_graphs(self, graph, expected):
        assert girth(graph) == expected
        assert girth(graph, roots=graph.nodes) == expected

    def test_factor_graphs(self, triangle, path2):
        assert girth(build_factor_graph(triangle).graph) == 6
        assert girth(build_factor_graph(path2).graph) == math.inf

    def test_roots(self):
        g = nx.disjoint_union(nx.cycle_graph(3), nx.cycle_graph(5))
        assert girth(g) == 3
        assert girth(g, roots=[3]) == 5
