import json
from fractions import Fraction

import pytest
from pydantic import ValidationError

from instances.generators import FAMILIES, GeneratorParams, generate
from instances.model import ProblemInstance, Sense, integral_assignment, validate_assignment
from instances.rational import format_rational, lcm_of_denominators, parse_rational
from instances.reduction import complement_reduction
from instances.serialization import load_instance, parse_instance, save_instance, serialize_instance
from utils.errors import (
    DimensionError,
    InfeasibleCoveringError,
    InstanceFormatError,
    ParameterRangeError,
    SenseError,
    UnknownFamilyError,
)


class TestRational:
    @pytest.mark.parametrize("text, expected", [
        ("3", Fraction(3)),
        ("-3/6", Fraction(-1, 2)),
        (" 4/2 ", Fraction(2)),
        (7, Fraction(7)),
        (Fraction(1, 3), Fraction(1, 3)),
    ])
    def test_parse(self, text, expected):
        assert parse_rational(text) == expected

    @pytest.mark.parametrize("bad", [0.5, True, "1/0", "a/b", "1.5", None])
    def test_parse_rejects(self, bad):
        with pytest.raises(ValueError):
            parse_rational(bad)

    def test_format(self):
        assert format_rational(Fraction(6, 4)) == "3/2"
        assert format_rational(Fraction(-4, 2)) == "-2"

    def test_lcm(self):
        assert lcm_of_denominators([Fraction(1, 2), Fraction(2, 3), Fraction(5)]) == 6
        assert lcm_of_denominators([]) == 1


class TestProblemInstance:
    def test_rows_are_sorted(self):
        inst = ProblemInstance(n=3, m=1, rows=[[2, 0]], b=[1], w=[1, 1, 1], X=[1, 1, 1])
        assert inst.rows == ((0, 2),)

    @pytest.mark.parametrize("kwargs", [
        dict(n=2, m=1, rows=[[0, 0]], b=[1], w=[1, 1], X=[1, 1]),
        dict(n=2, m=1, rows=[[0, 2]], b=[1], w=[1, 1], X=[1, 1]),
        dict(n=2, m=1, rows=[[]], b=[1], w=[1, 1], X=[1, 1]),
        dict(n=2, m=1, rows=[[0]], b=[-1], w=[1, 1], X=[1, 1]),
        dict(n=2, m=1, rows=[[0]], b=[1], w=[1], X=[1, 1]),
        dict(n=2, m=1, rows=[[0]], b=[1], w=[1, 1], X=[1, -1]),
        dict(n=2, m=2, rows=[[0]], b=[1], w=[1, 1], X=[1, 1]),
    ])
    def test_invalid_shapes(self, kwargs):
        with pytest.raises(ValidationError):
            ProblemInstance(**kwargs)

    def test_budgets_round_by_sense(self):
        packing = ProblemInstance(n=1, m=1, rows=[[0]], b=["3/2"], w=[1], X=[2])
        covering = packing.model_copy(update={"sense": Sense.COVERING})
        assert packing.budgets() == (1,)
        assert covering.budgets() == (2,)
        assert packing.normalized().b == (Fraction(1),)

    def test_columns_and_matrix(self, triangle, path2):
        assert triangle.columns() == ((0, 2), (0, 1), (1, 2))
        assert triangle.max_column_weight() == 2
        assert path2.to_matrix().tolist() == [[1, 0], [1, 1], [0, 1]]

    def test_validate_assignment(self, triangle):
        assert validate_assignment(triangle, (1, 0, 0))
        assert not validate_assignment(triangle, (1, 1, 0))
        assert validate_assignment(triangle, (Fraction(1, 2),) * 3)
        assert not validate_assignment(triangle, (2, 0, 0))

    def test_validate_assignment_dimension(self, triangle):
        with pytest.raises(DimensionError):
            validate_assignment(triangle, (1, 0))

    def test_covering_validity(self, single_cover):
        assert validate_assignment(single_cover, (1,))
        assert not validate_assignment(single_cover, (0,))

    def test_objective_and_box(self, path2):
        assert path2.objective_value((1, 0)) == 2
        assert path2.box_size() == 4
        assert list(path2.iter_box()) == [(0, 0), (0, 1), (1, 0), (1, 1)]

    def test_integral_assignment(self):
        assert integral_assignment([Fraction(2), 1]) == (2, 1)
        assert integral_assignment([Fraction(1, 2)]) is None


class TestComplementReduction:
    def test_triangle_cover(self, triangle_cover):
        packing, mapping = complement_reduction(triangle_cover)
        assert packing.sense == Sense.PACKING
        assert packing.b == (Fraction(1),) * 3
        assert mapping.to_covering((1, 0, 0)) == (0, 1, 1)
        assert mapping.offset == 3
        assert mapping.covering_objective(Fraction(1)) == 2
        assert mapping.describe() == "z = X - x with X = [1, 1, 1]; w.z = 3 - w.x"

    def test_feasibility_bijection(self, triangle_cover):
        packing, mapping = complement_reduction(triangle_cover)
        for z in triangle_cover.iter_box():
            assert validate_assignment(triangle_cover, z) == validate_assignment(packing, mapping.to_packing(z))

    def test_rejects_packing(self, triangle):
        with pytest.raises(SenseError):
            complement_reduction(triangle)

    def test_infeasible_row(self):
        inst = ProblemInstance(n=1, m=1, rows=[[0]], b=[3], w=[1], X=[1], sense=Sense.COVERING)
        with pytest.raises(InfeasibleCoveringError):
            complement_reduction(inst)


class TestSerialization:
    def test_round_trip(self, triangle_cover, tmp_path):
        inst = triangle_cover.with_weights([Fraction(1, 2), 3, Fraction(-2, 3)])
        assert parse_instance(serialize_instance(inst)) == inst
        path = save_instance(inst, tmp_path / "nested" / "inst.json")
        assert load_instance(path) == inst

    def test_text_form(self, path2):
        data = json.loads(serialize_instance(path2.with_weights([Fraction(3, 2), 1])))
        assert list(data) == ["n", "m", "rows", "b", "w", "X", "sense"]
        assert data["w"] == ["3/2", "1"]
        assert data["sense"] == "packing"

    def test_sense_defaults_to_packing(self):
        text = '{"n": 1, "m": 1, "rows": [[0]], "b": ["1"], "w": ["2"], "X": [1]}'
        assert parse_instance(text).sense == Sense.PACKING

    @pytest.mark.parametrize("text", [
        "not json",
        "[1, 2]",
        '{"n": 1, "m": 1, "rows": [[0]], "b": ["1"], "X": [1]}',
        '{"n": 1, "m": 1, "rows": [[0]], "b": ["1"], "w": [0.5], "X": [1]}',
        '{"n": 1, "m": 1, "rows": [[0]], "b": ["1"], "w": ["1"], "X": [1], "sense": "mixed"}',
        '{"n": 2, "m": 1, "rows": [[0.9, 1]], "b": ["1"], "w": ["1", "1"], "X": [1, 1]}',
        '{"n": 2, "m": 1, "rows": [0], "b": ["1"], "w": ["1", "1"], "X": [1, 1]}',
        '{"n": 2, "m": 1, "rows": [[true, 1]], "b": ["1"], "w": ["1", "1"], "X": [1, 1]}',
    ])
    def test_malformed(self, text):
        with pytest.raises(InstanceFormatError):
            parse_instance(text)


class TestGenerators:
    @pytest.mark.parametrize("family", sorted(FAMILIES))
    def test_deterministic(self, family):
        params = GeneratorParams(n=4, m=4)
        assert generate(family, params, seed=7) == generate(family, params, seed=7)

    def test_seeds_differ(self):
        instances = {serialize_instance(generate("random", seed=s)) for s in range(10)}
        assert len(instances) > 1

    def test_triangle(self, triangle):
        assert triangle.rows == ((0, 1), (1, 2), (0, 2))
        assert triangle.w == (1, 1, 1)

    def test_path_matching(self, path2):
        assert path2.rows == ((0,), (0, 1), (1,))
        assert path2.w == (2, 1)

    @pytest.mark.parametrize("seed", range(20))
    def test_b_matching_columns(self, seed):
        inst = generate("b-matching", GeneratorParams(n=5, m=5, max_b=2), seed)
        assert inst.max_column_weight() <= 2
        assert all(len(col) == 2 for col in inst.columns())

    @pytest.mark.parametrize("seed", range(20))
    def test_set_cover_is_coverable(self, seed):
        inst = generate("set-cover", GeneratorParams(n=4, m=4), seed)
        assert inst.sense == Sense.COVERING
        complement_reduction(inst)

    @pytest.mark.parametrize("seed", range(20))
    def test_random_respects_params(self, seed):
        params = GeneratorParams(n=5, m=4, max_bound=2, max_row_size=3)
        inst = generate("random", params, seed)
        assert inst.n == 5 and inst.m == 4
        assert all(1 <= len(row) <= 3 for row in inst.rows)
        assert all(1 <= x <= 2 for x in inst.X)
        assert all(1 <= w <= 9 for w in inst.w)

    def test_unknown_family(self):
        with pytest.raises(UnknownFamilyError):
            generate("knapsack")

    @pytest.mark.parametrize("params", [
        GeneratorParams(n=13),
        GeneratorParams(m=13),
        GeneratorParams(max_bound=5),
        GeneratorParams(min_weight=5, max_weight=1),
    ])
    def test_parameter_ranges(self, params):
        with pytest.raises(ParameterRangeError):
            generate("random", params)

    def test_explicit_weights(self):
        inst = generate("random", GeneratorParams(n=2, m=1, weights=("1/2", 3)), seed=1)
        assert inst.w == (Fraction(1, 2), Fraction(3))
        with pytest.raises(ParameterRangeError):
            generate("random", GeneratorParams(n=3, m=1, weights=(1,)))
