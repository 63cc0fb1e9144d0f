"""Shared instances for the test suite."""

import pytest

from instances.generators import generate
from instances.model import ProblemInstance, Sense


@pytest.fixture
def single():
    """S: max x subject to x <= 1, 0 <= x <= 2."""
    return ProblemInstance(n=1, m=1, rows=[[0]], b=[1], w=[1], X=[2])


@pytest.fixture
def single_cover():
    """S': min x subject to x >= 1, 0 <= x <= 2."""
    return ProblemInstance(n=1, m=1, rows=[[0]], b=[1], w=[1], X=[2], sense=Sense.COVERING)


@pytest.fixture
def triangle():
    """T: unit-weight independent set on a triangle; LP optimum (1/2, 1/2, 1/2)."""
    return generate("triangle-mwis")


@pytest.fixture
def path2():
    """M: matching on a two-edge path with weights (2, 1)."""
    return generate("path-matching")


@pytest.fixture
def triangle_cover():
    return ProblemInstance(
        n=3, m=3, rows=[[0, 1], [1, 2], [0, 2]], b=[1, 1, 1], w=[1, 1, 1], X=[1, 1, 1],
        sense=Sense.COVERING,
    )


@pytest.fixture
def tied_pair():
    """max x0 + x1 subject to x0 + x1 <= 1: the whole edge between (1, 0) and (0, 1) is optimal."""
    return ProblemInstance(n=2, m=1, rows=[[0, 1]], b=[1], w=[1, 1], X=[1, 1])
