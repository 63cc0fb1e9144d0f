from fractions import Fraction

import pytest

from instances.generators import GeneratorParams, generate
from instances.model import ProblemInstance, Sense
from lp_exact.analysis import LpClass, classify, compute_c, convergence_threshold, variable_range
from lp_exact.integral import best_integral
from lp_exact.solver import count_systems, enumerate_vertices, invert, solve_lp
from utils.errors import LpInfeasibleError, ParameterRangeError, ResourceLimitError, UndefinedMarginError


HALF = Fraction(1, 2)


class TestInvert:
    def test_inverse(self):
        assert invert([[1, 1], [0, 1]]) == [[1, -1], [0, 1]]
        assert invert([[0, 1], [1, 0]]) == [[0, 1], [1, 0]]
        assert invert([]) == []

    def test_singular(self):
        assert invert([[1, 1], [1, 1]]) is None


class TestSolveLp:
    def test_single(self, single):
        lp = solve_lp(single)
        assert lp.opt_value == 1
        assert lp.vertices == ((0,), (1,))
        assert lp.witness == (1,)
        assert lp.is_unique

    def test_triangle(self, triangle):
        lp = solve_lp(triangle)
        assert lp.opt_value == Fraction(3, 2)
        assert lp.witness == (HALF, HALF, HALF)
        assert lp.vertices == ((0, 0, 0), (0, 0, 1), (0, 1, 0), (HALF, HALF, HALF), (1, 0, 0))
        assert classify(triangle, lp) == LpClass.UNIQUE_FRACTIONAL

    def test_matching(self, path2):
        lp = solve_lp(path2)
        assert lp.opt_value == 2
        assert lp.witness == (1, 0)
        assert classify(path2, lp) == LpClass.UNIQUE_INTEGRAL

    def test_covering(self, triangle_cover, single_cover):
        lp = solve_lp(triangle_cover)
        assert lp.opt_value == Fraction(3, 2)
        assert lp.witness == (HALF, HALF, HALF)
        assert solve_lp(single_cover).witness == (1,)

    def test_multiple_optima(self, tied_pair):
        lp = solve_lp(tied_pair)
        assert lp.opt_vertices == ((0, 1), (1, 0))
        assert lp.witness == (0, 1)
        rng = variable_range(tied_pair, lp)
        assert rng.x_min == (0, 0) and rng.x_max == (1, 1)
        assert classify(tied_pair, lp) == LpClass.MULTIPLE

    def test_fractional_b(self):
        inst = ProblemInstance(n=2, m=1, rows=[[0, 1]], b=["3/2"], w=[1, 1], X=[1, 1])
        lp = solve_lp(inst)
        assert lp.opt_value == Fraction(3, 2)
        assert (1, HALF) in lp.opt_vertices

    def test_infeasible(self):
        inst = ProblemInstance(n=1, m=1, rows=[[0]], b=[3], w=[1], X=[1], sense=Sense.COVERING)
        with pytest.raises(LpInfeasibleError):
            solve_lp(inst)

    def test_system_cap(self, triangle):
        assert count_systems(3, 3) == 8 + 9 * 4 + 9 * 2 + 1
        with pytest.raises(ResourceLimitError):
            solve_lp(triangle, cap=10)

    @pytest.mark.parametrize("seed", range(25))
    def test_lp_bounds_integral_optimum(self, seed):
        inst = generate("random", GeneratorParams(n=4, m=4, max_bound=2, max_row_size=3), seed)
        lp = solve_lp(inst)
        assert lp.opt_value >= best_integral(inst).value
        assert all(inst.is_feasible_point(v) for v in lp.vertices)
        assert list(lp.vertices) == sorted(lp.vertices)

    @pytest.mark.parametrize("seed", range(25))
    def test_covering_lp_bounds_integral_optimum(self, seed):
        inst = generate("set-cover", GeneratorParams(n=4, m=4, max_row_size=3), seed)
        assert solve_lp(inst).opt_value <= best_integral(inst).value

    @pytest.mark.parametrize("seed", range(10))
    def test_vertices_include_integral_vertices_of_box(self, seed):
        inst = generate("b-matching", GeneratorParams(n=4, m=4), seed)
        vertices, _ = enumerate_vertices(inst)
        assert tuple(0 for _ in range(inst.n)) in vertices


class TestMargin:
    def test_values(self, single, triangle, path2):
        assert compute_c(single, solve_lp(single)) == 1
        assert compute_c(triangle, solve_lp(triangle)) == Fraction(1, 3)
        assert compute_c(path2, solve_lp(path2)) == HALF

    def test_covering_margin(self, single_cover):
        assert compute_c(single_cover, solve_lp(single_cover)) == 1

    def test_multiple_optima_give_zero(self, tied_pair):
        assert compute_c(tied_pair, solve_lp(tied_pair)) == 0

    def test_single_point(self):
        inst = ProblemInstance(n=1, m=1, rows=[[0]], b=[0], w=[1], X=[0])
        with pytest.raises(UndefinedMarginError):
            compute_c(inst, solve_lp(inst))

    @pytest.mark.parametrize("seed", range(20))
    def test_margin_bounded_by_weights(self, seed):
        inst = generate("b-matching", GeneratorParams(n=4, m=4), seed)
        lp = solve_lp(inst)
        c = compute_c(inst, lp)
        assert 0 <= c <= inst.max_weight()
        assert (c > 0) == lp.is_unique

    def test_threshold(self, path2):
        assert convergence_threshold(path2, HALF) == 5
        assert convergence_threshold(path2, Fraction(8)) == 1
        assert convergence_threshold(path2, Fraction(1), w_max=Fraction(3, 2)) == 3
        with pytest.raises(ParameterRangeError):
            convergence_threshold(path2, Fraction(0))


class TestBestIntegral:
    def test_triangle(self, triangle):
        optimum = best_integral(triangle)
        assert optimum.value == 1
        assert optimum.solutions == ((0, 0, 1), (0, 1, 0), (1, 0, 0))

    def test_cover(self, triangle_cover):
        optimum = best_integral(triangle_cover)
        assert optimum.value == 2
        assert len(optimum.solutions) == 3

    def test_limit(self, triangle):
        with pytest.raises(ResourceLimitError):
            best_integral(triangle, limit=4)

    def test_infeasible(self):
        inst = ProblemInstance(n=1, m=1, rows=[[0]], b=[3], w=[1], X=[1], sense=Sense.COVERING)
        with pytest.raises(LpInfeasibleError):
            best_integral(inst)
