"""
Seeded instance generators.

Families:
- random: arbitrary zero-one rows, box bounds, budgets and weights
- triangle-mwis: maximum weight independent set on a triangle (fixed structure)
- path-matching: maximum weight matching on a path (one variable per edge)
- b-matching: random graph, one variable per edge, so every column has at most two 1s
- set-cover: covering rows over random set systems with unit demands

Every generator is a pure function of (family, params, seed).
"""

import logging
from fractions import Fraction
from typing import Callable, Dict, Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from config.settings import settings
from instances.model import ProblemInstance, Sense
from instances.rational import Rational
from utils.errors import ParameterRangeError, UnknownFamilyError


logger = logging.getLogger(__name__)


class GeneratorParams(BaseModel):
    """Parameters shared by the generator families (each family reads what it needs)."""

    n: int = Field(default=4, ge=1, description="Variables (edges for b-matching, sets for set-cover)")
    m: int = Field(default=3, ge=1, description="Constraints (vertices for b-matching, elements for set-cover)")
    max_bound: int = Field(default=1, ge=0, description="Largest box bound X_i")
    max_row_size: Optional[int] = Field(default=None, ge=1, description="Largest row support (default n)")
    max_b: int = Field(default=2, ge=1, description="Largest vertex capacity for b-matching")
    min_weight: int = Field(default=1, description="Smallest random integer weight")
    max_weight: int = Field(default=9, description="Largest random integer weight")
    weights: Optional[tuple[Rational, ...]] = Field(default=None, description="Explicit weights")
    sense: Sense = Field(default=Sense.PACKING)

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)


def _check_ranges(params: GeneratorParams) -> None:
    if params.n > settings.generator_max_vars:
        raise ParameterRangeError(f"n={params.n} exceeds {settings.generator_max_vars}")
    if params.m > settings.generator_max_constraints:
        raise ParameterRangeError(f"m={params.m} exceeds {settings.generator_max_constraints}")
    if params.max_bound > settings.generator_max_bound:
        raise ParameterRangeError(f"max_bound={params.max_bound} exceeds {settings.generator_max_bound}")
    if params.min_weight > params.max_weight:
        raise ParameterRangeError("min_weight must not exceed max_weight")


def _weights(params: GeneratorParams, rng: np.random.Generator, count: int) -> tuple[Fraction, ...]:
    if params.weights is not None:
        if len(params.weights) != count:
            raise ParameterRangeError(f"expected {count} weights, got {len(params.weights)}")
        return tuple(Fraction(x) for x in params.weights)
    draws = rng.integers(params.min_weight, params.max_weight + 1, size=count)
    return tuple(Fraction(int(x)) for x in draws)


def _random_family(params: GeneratorParams, rng: np.random.Generator) -> ProblemInstance:
    n, m = params.n, params.m
    row_cap = min(params.max_row_size or n, n)
    X = [int(x) for x in rng.integers(1, max(params.max_bound, 1) + 1, size=n)]
    if params.max_bound == 0:
        X = [0] * n

    rows, b = [], []
    for _ in range(m):
        size = int(rng.integers(1, row_cap + 1))
        row = sorted(int(i) for i in rng.choice(n, size=size, replace=False))
        capacity = sum(X[i] for i in row)
        rows.append(row)
        b.append(Fraction(int(rng.integers(1, capacity + 1))) if capacity > 0 else Fraction(0))

    w = _weights(params, rng, n)
    return ProblemInstance(n=n, m=m, rows=rows, b=b, w=w, X=X, sense=params.sense)


def _triangle_mwis(params: GeneratorParams, rng: np.random.Generator) -> ProblemInstance:
    w = params.weights if params.weights is not None else (1, 1, 1)
    if len(w) != 3:
        raise ParameterRangeError("triangle-mwis takes exactly three weights")
    return ProblemInstance(
        n=3, m=3, rows=[[0, 1], [1, 2], [0, 2]], b=[1, 1, 1], w=tuple(w), X=[1, 1, 1],
        sense=Sense.PACKING,
    )


def _path_matching(params: GeneratorParams, rng: np.random.Generator) -> ProblemInstance:
    w = params.weights if params.weights is not None else (2, 1)
    k = len(w)
    if k < 1 or k + 1 > settings.generator_max_constraints:
        raise ParameterRangeError(f"path-matching needs between 1 and {settings.generator_max_constraints - 1} weights")
    # vertex j of the path meets edges j-1 and j
    rows = [[e for e in (j - 1, j) if 0 <= e < k] for j in range(k + 1)]
    return ProblemInstance(
        n=k, m=k + 1, rows=rows, b=[1] * (k + 1), w=tuple(w), X=[1] * k, sense=Sense.PACKING,
    )


def _b_matching(params: GeneratorParams, rng: np.random.Generator) -> ProblemInstance:
    vertices, edges = params.m, params.n
    pairs = [(u, v) for u in range(vertices) for v in range(u + 1, vertices)]
    if edges > len(pairs):
        raise ParameterRangeError(f"a graph on {vertices} vertices has at most {len(pairs)} edges")
    chosen = sorted(int(i) for i in rng.choice(len(pairs), size=edges, replace=False))
    edge_list = [pairs[i] for i in chosen]

    X = [int(x) for x in rng.integers(1, max(params.max_bound, 1) + 1, size=edges)]
    incident: Dict[int, list[int]] = {}
    for e, (u, v) in enumerate(edge_list):
        incident.setdefault(u, []).append(e)
        incident.setdefault(v, []).append(e)

    rows, b = [], []
    for vertex in sorted(incident):
        row = incident[vertex]
        capacity = int(rng.integers(1, params.max_b + 1))
        if params.sense == Sense.COVERING:
            capacity = min(capacity, sum(X[e] for e in row))
        rows.append(row)
        b.append(Fraction(capacity))

    w = _weights(params, rng, edges)
    return ProblemInstance(n=edges, m=len(rows), rows=rows, b=b, w=w, X=X, sense=params.sense)


def _set_cover(params: GeneratorParams, rng: np.random.Generator) -> ProblemInstance:
    n, m = params.n, params.m
    row_cap = min(params.max_row_size or n, n)
    rows = []
    for _ in range(m):
        size = int(rng.integers(1, row_cap + 1))
        rows.append(sorted(int(i) for i in rng.choice(n, size=size, replace=False)))
    X = [max(params.max_bound, 1)] * n
    w = _weights(params, rng, n)
    return ProblemInstance(n=n, m=m, rows=rows, b=[1] * m, w=w, X=X, sense=Sense.COVERING)


FAMILIES: Dict[str, Callable[[GeneratorParams, np.random.Generator], ProblemInstance]] = {
    "random": _random_family,
    "triangle-mwis": _triangle_mwis,
    "path-matching": _path_matching,
    "b-matching": _b_matching,
    "set-cover": _set_cover,
}


def generate(family: str, params: Optional[GeneratorParams] = None, seed: int = 0) -> ProblemInstance:
    """
    Generate an instance deterministically.

    Args:
        family: One of FAMILIES
        params: Family parameters (defaults when omitted)
        seed: Seed of the numpy generator

    Returns:
        ProblemInstance

    Raises:
        UnknownFamilyError: family not in FAMILIES
        ParameterRangeError: parameters outside the documented ranges
    """
    if family not in FAMILIES:
        raise UnknownFamilyError(f"unknown family {family!r}, expected one of {sorted(FAMILIES)}")
    params = params or GeneratorParams()
    _check_ranges(params)

    rng = np.random.default_rng(seed)
    inst = FAMILIES[family](params, rng)
    logger.debug(f"Generated {family} instance (seed={seed}): n={inst.n}, m={inst.m}")
    return inst
