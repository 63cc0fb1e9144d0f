"""
Canonical data model for packing and covering programs.

A ProblemInstance holds a zero-one matrix A (as sorted row index sets), a
non-negative constraint vector b, weights w, box bounds X and the sense.
Packing: maximise w.x subject to A.x <= b, 0 <= x <= X.
Covering: minimise w.x subject to A.x >= b, 0 <= x <= X.
"""

import itertools
import math
from enum import Enum
from fractions import Fraction
from typing import Iterator, Optional, Sequence, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from instances.rational import Rational
from utils.errors import DimensionError


Scalar = Union[int, Fraction]
Assignment = tuple[Scalar, ...]


class Sense(str, Enum):
    """Optimisation sense of an instance."""
    PACKING = "packing"
    COVERING = "covering"


class ProblemInstance(BaseModel):
    """Packing or covering program with a zero-one constraint matrix."""

    n: int = Field(ge=1, description="Number of variables (columns of A)")
    m: int = Field(ge=0, description="Number of constraints (rows of A)")
    rows: tuple[tuple[int, ...], ...] = Field(description="Column indices with entry 1, per row")
    b: tuple[Rational, ...] = Field(description="Constraint vector, each entry >= 0")
    w: tuple[Rational, ...] = Field(description="Weight vector")
    X: tuple[int, ...] = Field(description="Box bounds, each entry >= 0")
    sense: Sense = Field(default=Sense.PACKING)

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    @field_validator("rows", mode="before")
    @classmethod
    def sort_rows(cls, v):
        """Sort each row and reject non-integer or duplicate column indices."""
        if not isinstance(v, (list, tuple)):
            raise ValueError("rows must be a list of index lists")
        rows = []
        for j, row in enumerate(v):
            if not isinstance(row, (list, tuple)):
                raise ValueError(f"row {j} must be a list of column indices, got {row!r}")
            if any(isinstance(i, bool) or not isinstance(i, (int, np.integer)) for i in row):
                raise ValueError(f"row {j} has a non-integer column index: {list(row)}")
            indices = [int(i) for i in row]
            if len(set(indices)) != len(indices):
                raise ValueError(f"row {j} repeats a column index: {indices}")
            rows.append(tuple(sorted(indices)))
        return tuple(rows)

    @model_validator(mode="after")
    def check_shapes(self) -> "ProblemInstance":
        """Validate dimensions, row contents and sign constraints."""
        if len(self.rows) != self.m:
            raise ValueError(f"expected {self.m} rows, got {len(self.rows)}")
        if len(self.b) != self.m:
            raise ValueError(f"expected {self.m} entries in b, got {len(self.b)}")
        if len(self.w) != self.n:
            raise ValueError(f"expected {self.n} weights, got {len(self.w)}")
        if len(self.X) != self.n:
            raise ValueError(f"expected {self.n} box bounds, got {len(self.X)}")
        for j, row in enumerate(self.rows):
            if not row:
                raise ValueError(f"row {j} is empty")
            if row[0] < 0 or row[-1] >= self.n:
                raise ValueError(f"row {j} has a column index outside [0, {self.n})")
        if any(bj < 0 for bj in self.b):
            raise ValueError("constraint vector b must be non-negative")
        if any(x < 0 for x in self.X):
            raise ValueError("box bounds X must be non-negative")
        return self

    # ----- structure -----

    @property
    def is_packing(self) -> bool:
        return self.sense == Sense.PACKING

    def budget(self, j: int) -> int:
        """Integer budget of row j: floor(b_j) for packing, ceil(b_j) for covering."""
        if self.is_packing:
            return math.floor(self.b[j])
        return math.ceil(self.b[j])

    def budgets(self) -> tuple[int, ...]:
        return tuple(self.budget(j) for j in range(self.m))

    def columns(self) -> tuple[tuple[int, ...], ...]:
        """Row indices containing each column, in increasing order."""
        cols: list[list[int]] = [[] for _ in range(self.n)]
        for j, row in enumerate(self.rows):
            for i in row:
                cols[i].append(j)
        return tuple(tuple(c) for c in cols)

    def to_matrix(self) -> np.ndarray:
        """Dense 0/1 integer matrix view of A (m x n)."""
        A = np.zeros((self.m, self.n), dtype=np.int64)
        for j, row in enumerate(self.rows):
            A[j, list(row)] = 1
        return A

    def max_column_weight(self) -> int:
        """Largest number of 1s in any column of A."""
        if self.m == 0:
            return 0
        return int(self.to_matrix().sum(axis=0).max())

    def normalized(self) -> "ProblemInstance":
        """Same integer program with b replaced by its integer budgets."""
        return self.model_copy(update={"b": tuple(Fraction(x) for x in self.budgets())})

    def with_weights(self, w: Sequence[Scalar]) -> "ProblemInstance":
        return ProblemInstance(
            n=self.n, m=self.m, rows=self.rows, b=self.b, w=tuple(Fraction(x) for x in w),
            X=self.X, sense=self.sense,
        )

    def box_size(self) -> int:
        """Cardinality of ZBox(X)."""
        return math.prod(x + 1 for x in self.X)

    def iter_box(self) -> Iterator[tuple[int, ...]]:
        """Enumerate ZBox(X) in lexicographic order."""
        return itertools.product(*(range(x + 1) for x in self.X))

    # ----- evaluation -----

    def _check_length(self, a: Sequence[Scalar]) -> None:
        if len(a) != self.n:
            raise DimensionError(f"assignment has length {len(a)}, instance has {self.n} variables")

    def row_sums(self, a: Sequence[Scalar]) -> tuple[Scalar, ...]:
        """A.a as a tuple."""
        self._check_length(a)
        return tuple(sum((a[i] for i in row), 0) for row in self.rows)

    def in_box(self, a: Sequence[Scalar]) -> bool:
        self._check_length(a)
        return all(0 <= a[i] <= self.X[i] for i in range(self.n))

    def satisfies_rows(self, a: Sequence[Scalar]) -> bool:
        """Row constraints with the exact b (rational comparison)."""
        sums = self.row_sums(a)
        if self.is_packing:
            return all(s <= bj for s, bj in zip(sums, self.b))
        return all(s >= bj for s, bj in zip(sums, self.b))

    def is_feasible_point(self, a: Sequence[Scalar]) -> bool:
        """Membership of a (possibly rational) point in the LP polytope."""
        return self.in_box(a) and self.satisfies_rows(a)

    def objective_value(self, a: Sequence[Scalar]) -> Fraction:
        """w.a, exact."""
        self._check_length(a)
        return sum((wi * ai for wi, ai in zip(self.w, a)), Fraction(0))

    def max_weight(self) -> Fraction:
        return max(self.w)


def validate_assignment(inst: ProblemInstance, a: Sequence[Scalar]) -> bool:
    """
    Check box and row constraints of an assignment.

    Args:
        inst: Problem instance
        a: Integral or rational assignment of length n

    Returns:
        True iff 0 <= a_i <= X_i for all i and A.a <= b (packing) or A.a >= b (covering)

    Raises:
        DimensionError: if len(a) != n
    """
    return inst.is_feasible_point(a)


def integral_assignment(values: Sequence[Scalar]) -> Optional[Assignment]:
    """Convert a sequence of integral rationals to ints; None if any entry is fractional."""
    out = []
    for v in values:
        v = Fraction(v)
        if v.denominator != 1:
            return None
        out.append(v.numerator)
    return tuple(out)
