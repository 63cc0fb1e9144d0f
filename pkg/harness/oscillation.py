"""
Weak-oscillation checks of min-sum against the LP optimal face.

Packing: at even t the largest optimal belief value is at least x_max, at
odd t the smallest is at most x_min. Covering mirrors both inequalities.
The report also evaluates the rounding consequence for fractional optima
and the cross-parity intersection property for every pair (even t, odd s).
"""

import logging
import math
from pathlib import Path
from typing import Literal, Optional, Union

import pandas as pd
from pydantic import BaseModel, ConfigDict, Field

from instances.model import ProblemInstance
from instances.rational import Rational, format_rational
from lp_exact.analysis import LpClass, VariableRange, classify, variable_range
from lp_exact.solver import solve_lp
from minsum.decision import Decision
from minsum.engine import iterate_minsum


logger = logging.getLogger(__name__)

CSV_COLUMNS = ["instance_id", "r", "t", "parity", "delta_min", "delta_max", "x_min", "x_max", "x_hat", "verdict"]

Verdict = Literal["pass", "fail"]


class OscillationRow(BaseModel):
    """One (instance, variable, iteration) observation."""

    instance_id: str
    r: int
    t: int
    parity: Literal["even", "odd"]
    delta_min: int
    delta_max: int
    x_min: Rational
    x_max: Rational
    x_hat: int
    verdict: Verdict
    rounding: Optional[Verdict] = Field(default=None, description="Fractional-optimum rounding check, when it applies")

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    def csv_record(self) -> dict:
        record = self.model_dump(include=set(CSV_COLUMNS))
        record["x_min"] = format_rational(self.x_min)
        record["x_max"] = format_rational(self.x_max)
        return record


class OscillationReport(BaseModel):
    instance_id: str
    sense: str
    lp_class: LpClass
    t_max: int
    rows: list[OscillationRow] = Field(default_factory=list)
    intersection_violations: list[str] = Field(default_factory=list)

    model_config = ConfigDict(arbitrary_types_allowed=True)

    @property
    def violations(self) -> list[OscillationRow]:
        return [row for row in self.rows if row.verdict == "fail"]

    @property
    def rounding_violations(self) -> list[OscillationRow]:
        return [row for row in self.rows if row.rounding == "fail"]

    @property
    def passed(self) -> bool:
        return not self.violations and not self.rounding_violations and not self.intersection_violations

    def to_dataframe(self) -> pd.DataFrame:
        return rows_to_dataframe(self.rows)

    def to_csv(self, path: Union[str, Path]) -> Path:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        self.to_dataframe().to_csv(path, index=False, lineterminator="\n")
        logger.info(f"Wrote {len(self.rows)} oscillation rows to {path}")
        return path


def rows_to_dataframe(rows: list[OscillationRow]) -> pd.DataFrame:
    """Rows in CSV column order; an empty list gives a header-only frame."""
    if not rows:
        return pd.DataFrame(columns=CSV_COLUMNS)
    return pd.DataFrame([row.csv_record() for row in rows], columns=CSV_COLUMNS)


def _oscillation_verdict(packing: bool, even: bool, delta: frozenset, rng: VariableRange, r: int) -> bool:
    if packing == even:
        # packing at even t, covering at odd t: overshoot
        return max(delta) >= rng.x_max[r]
    return min(delta) <= rng.x_min[r]


def _rounding_verdict(packing: bool, even: bool, x_hat: int, rng: VariableRange, r: int) -> Optional[Verdict]:
    if not rng.has_fraction(r):
        return None
    if packing == even:
        ok = x_hat >= math.ceil(rng.x_max[r])
    else:
        ok = x_hat <= math.floor(rng.x_min[r])
    return "pass" if ok else "fail"


def _intersection_findings(decisions: list[Decision], rng: VariableRange, n: int) -> list[str]:
    findings = []
    even = [d for d in decisions if d.t % 2 == 0]
    odd = [d for d in decisions if d.t % 2 == 1]
    for r in range(n):
        for de in even:
            for do in odd:
                # the even output bounds one end of the optimal range and the odd output the other
                beta = de.x_hat[r]
                if beta != do.x_hat[r]:
                    continue
                if not (rng.x_min[r] == rng.x_max[r] == beta):
                    findings.append(
                        f"r={r}, t={de.t}, s={do.t}: both parities settle on {beta} "
                        f"with x_min={rng.x_min[r]}, x_max={rng.x_max[r]}"
                    )
    return findings


def check_weak_oscillation(
    inst: ProblemInstance,
    t_max: int,
    instance_id: str = "instance",
    decisions: Optional[list[Decision]] = None,
) -> OscillationReport:
    """
    Check the oscillation inequalities for every variable and 1 <= t <= t_max.

    The LP is solved on the budget-normalised instance (b replaced by its
    floor or ceiling), which has the same integer program as inst.

    Args:
        inst: Packing or covering instance
        t_max: Largest iteration checked
        instance_id: Label used in the report rows
        decisions: Precomputed min-sum decisions for t = 1..t_max

    Returns:
        OscillationReport; violations are reported, not raised
    """
    lp_inst = inst.normalized()
    lp = solve_lp(lp_inst)
    rng = variable_range(lp_inst, lp)
    lp_class = classify(lp_inst, lp)
    if decisions is None:
        decisions = list(iterate_minsum(inst, t_max))

    packing = inst.is_packing
    rows = []
    for decision in decisions:
        even = decision.t % 2 == 0
        for r in range(inst.n):
            delta = decision.delta[r]
            ok = _oscillation_verdict(packing, even, delta, rng, r)
            rows.append(OscillationRow(
                instance_id=instance_id,
                r=r,
                t=decision.t,
                parity=decision.parity,
                delta_min=min(delta),
                delta_max=max(delta),
                x_min=rng.x_min[r],
                x_max=rng.x_max[r],
                x_hat=decision.x_hat[r],
                verdict="pass" if ok else "fail",
                rounding=_rounding_verdict(packing, even, decision.x_hat[r], rng, r),
            ))

    report = OscillationReport(
        instance_id=instance_id,
        sense=inst.sense.value,
        lp_class=lp_class,
        t_max=t_max,
        rows=rows,
        intersection_violations=_intersection_findings(decisions, rng, inst.n),
    )
    if not report.passed:
        logger.warning(
            f"{instance_id}: {len(report.violations)} oscillation, {len(report.rounding_violations)} rounding "
            f"and {len(report.intersection_violations)} intersection violations"
        )
    return report
