import pytest

from factor_graph.extended import NEG_INF, POS_INF
from factor_graph.graph import build_factor_graph
from instances.generators import GeneratorParams, generate
from instances.model import ProblemInstance, Sense
from lifts.girth_amplification import amplify_girth
from minsum.covering_direct import run_minsum_covering_direct
from minsum.engine import MinSumEngine
from minsum.decision import decide
from tree_dp.solver import opt_dp_root_set, tree_optima, tree_optimum
from tree_dp.tree import build_tree
from utils.errors import InfeasibleRootError, ParameterRangeError, ResourceLimitError


ORACLE_PARAMS = GeneratorParams(n=5, m=5, max_bound=2, max_row_size=3)


def _assert_tree_matches_minsum(inst, t_values):
    fg = build_factor_graph(inst)
    engine = MinSumEngine(fg, normalize=False, workers=1)
    for t in t_values:
        engine.run(t)
        decision = decide(engine.state, t)
        for r in range(inst.n):
            tree = build_tree(fg, r, 2 * t)
            assert tree_optima(tree) == decision.mu_v[r]
            assert opt_dp_root_set(tree, t) == decision.delta[r]


class TestPathPrefixTree:
    def test_triangle_sizes(self, triangle):
        fg = build_factor_graph(triangle)
        assert len(build_tree(fg, 0, 0)) == 1
        assert len(build_tree(fg, 0, 2)) == 5
        assert len(build_tree(fg, 0, 4)) == 9

    def test_no_backtracking(self, path2):
        tree = build_tree(build_factor_graph(path2), 0, 6)
        # the factor graph is the path C0 - v0 - C1 - v1 - C2
        assert sorted(tree.path(i) for i in range(len(tree)))[-1] == (("v", 0), ("C", 1), ("v", 1), ("C", 2))
        assert len(tree) == 5

    def test_breadth_first_order(self, triangle):
        tree = build_tree(build_factor_graph(triangle), 1, 4)
        depths = [node.depth for node in tree.nodes]
        assert depths == sorted(depths)
        for node in tree.nodes[1:]:
            assert node.parent < node.index
            assert node.kind != tree.nodes[node.parent].kind

    def test_to_networkx(self, triangle):
        tree = build_tree(build_factor_graph(triangle), 0, 4)
        g = tree.to_networkx()
        assert g.number_of_nodes() == len(tree)
        assert g.number_of_edges() == len(tree) - 1

    def test_cap(self, triangle):
        with pytest.raises(ResourceLimitError):
            build_tree(build_factor_graph(triangle), 0, 10, cap=8)

    @pytest.mark.parametrize("r, h", [(0, -1), (3, 2), (-1, 2)])
    def test_bad_parameters(self, triangle, r, h):
        with pytest.raises(ParameterRangeError):
            build_tree(build_factor_graph(triangle), r, h)


class TestTreeOptima:
    def test_triangle(self, triangle):
        tree = build_tree(build_factor_graph(triangle), 0, 2)
        assert tree_optima(tree) == (2, 1)
        assert tree_optimum(tree, 1) == 1
        assert opt_dp_root_set(tree, 1) == frozenset({0})

    def test_single(self, single):
        tree = build_tree(build_factor_graph(single), 0, 2)
        assert tree_optima(tree) == (0, 1, NEG_INF)

    def test_enumeration_and_dp_agree(self):
        inst = generate("random", ORACLE_PARAMS, seed=3)
        tree = build_tree(build_factor_graph(inst), 0, 4)
        assert tree_optima(tree, limit=1) == tree_optima(tree, limit=10 ** 6)

    def test_root_value_range(self, triangle):
        tree = build_tree(build_factor_graph(triangle), 0, 2)
        with pytest.raises(ParameterRangeError):
            tree_optimum(tree, 2)

    def test_depth_must_match_iterations(self, triangle):
        tree = build_tree(build_factor_graph(triangle), 0, 4)
        with pytest.raises(ParameterRangeError):
            opt_dp_root_set(tree, 1)

    def test_infeasible_covering_root(self):
        inst = ProblemInstance(n=1, m=1, rows=[[0]], b=[3], w=[1], X=[1], sense=Sense.COVERING)
        tree = build_tree(build_factor_graph(inst), 0, 2)
        assert tree_optima(tree) == (POS_INF, POS_INF)
        with pytest.raises(InfeasibleRootError):
            opt_dp_root_set(tree)


class TestMinSumOracle:
    def test_triangle(self, triangle):
        _assert_tree_matches_minsum(triangle, (1, 2, 3))

    def test_tied_pair(self, tied_pair):
        _assert_tree_matches_minsum(tied_pair, (1, 2, 3))

    @pytest.mark.parametrize("seed", range(40))
    def test_random_packing(self, seed):
        _assert_tree_matches_minsum(generate("random", ORACLE_PARAMS, seed), (1, 2, 3))

    @pytest.mark.slow
    @pytest.mark.parametrize("seed", range(40, 240))
    def test_random_packing_acceptance(self, seed):
        _assert_tree_matches_minsum(generate("random", ORACLE_PARAMS, seed), (1, 2, 3))

    @pytest.mark.parametrize("seed", range(15))
    def test_covering_trees_match_direct_minsum(self, seed):
        inst = generate("set-cover", GeneratorParams(n=4, m=4, max_bound=2, max_row_size=3), seed)
        fg = build_factor_graph(inst)
        for t in (1, 2):
            decision = run_minsum_covering_direct(inst, t)
            for r in range(inst.n):
                tree = build_tree(fg, r, 2 * t)
                assert tree_optima(tree) == decision.mu_v[r]
                assert opt_dp_root_set(tree, t) == decision.delta[r]


class TestHighGirthEmbedding:
    @pytest.fixture(scope="class")
    def lifted_fg(self):
        triangle = generate("triangle-mwis")
        lift = amplify_girth(build_factor_graph(triangle), 12)
        assert lift.girth() >= 12
        return lift.lifted_factor_graph()

    @pytest.mark.parametrize("h", range(11))
    def test_paths_end_at_distinct_vertices(self, lifted_fg, h):
        # below girth - 1 no two backtrack-free paths from the root meet again
        for r in (0, 1, 64, 130):
            tree = build_tree(lifted_fg, r, h)
            ends = [tree.path(i)[-1] for i in range(len(tree))]
            assert len(set(ends)) == len(ends) == 1 + 2 * h


class TestBudgetMonotonicity:
    @pytest.mark.parametrize("h", [2, 4, 6])
    def test_single_variable_drops_past_budget(self, single, h):
        values = tree_optima(build_tree(build_factor_graph(single), 0, h))
        assert values == (0, 1, NEG_INF)
        peak = values.index(max(values))
        # from the budget on the optimum only decreases
        assert all(a >= b for a, b in zip(values[peak:], values[peak + 1:]))
