"""
Convergence check: past t* = floor(w_max / c + 1/2) + 1 iterations, min-sum
returns the unique integral LP optimum, provided every column of A has at
most two 1s and the optimum sits on the box boundary.
"""

import logging
from fractions import Fraction
from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field

from config.settings import settings
from instances.model import ProblemInstance
from instances.rational import Rational
from lp_exact.analysis import LpClass, classify, compute_c, convergence_threshold
from lp_exact.solver import LpResult, solve_lp
from minsum.engine import iterate_minsum
from utils.errors import UndefinedMarginError


logger = logging.getLogger(__name__)

Status = Literal["pass", "fail", "precondition-violation"]


class IterationCheck(BaseModel):
    t: int
    x_hat: tuple[int, ...]
    matches: bool


class ConvergenceReport(BaseModel):
    """Outcome of a convergence check; failed hypotheses are reported, not raised."""

    status: Status
    reason: Optional[str] = None
    c: Optional[Rational] = None
    w_max: Optional[Rational] = None
    t_star: Optional[int] = None
    x_star: Optional[tuple[int, ...]] = None
    checks: list[IterationCheck] = Field(default_factory=list)

    model_config = ConfigDict(arbitrary_types_allowed=True)

    @property
    def passed(self) -> bool:
        return self.status == "pass"


def precondition_failure(inst: ProblemInstance, lp: Optional[LpResult] = None) -> Optional[str]:
    """
    Reason the convergence hypotheses fail, or None when they hold.

    Checks: column weight <= 2, unique integral LP optimum, x*_i in {0, X_i}.
    """
    weight = inst.max_column_weight()
    if weight > 2:
        return f"a column of A has {weight} nonzeros (at most 2 required)"
    lp_inst = inst.normalized()
    lp = solve_lp(lp_inst) if lp is None else lp
    lp_class = classify(lp_inst, lp)
    if lp_class != LpClass.UNIQUE_INTEGRAL:
        return f"LP optimum is {lp_class.value}"
    off_boundary = [i for i, v in enumerate(lp.witness) if v not in (0, inst.X[i])]
    if off_boundary:
        return f"optimum is strictly inside the box at variables {off_boundary}"
    return None


def check_convergence(inst: ProblemInstance, slack: Optional[int] = None) -> ConvergenceReport:
    """
    Run min-sum for t*, ..., t* + slack iterations and compare with x*.

    Args:
        inst: Packing or covering instance
        slack: Extra iterations past t* (default settings.convergence_slack)

    Returns:
        ConvergenceReport with status pass, fail or precondition-violation
    """
    slack = settings.convergence_slack if slack is None else slack
    lp_inst = inst.normalized()
    lp = solve_lp(lp_inst)

    reason = precondition_failure(inst, lp)
    if reason is not None:
        logger.info(f"Convergence preconditions not met: {reason}")
        return ConvergenceReport(status="precondition-violation", reason=reason)

    try:
        c = compute_c(lp_inst, lp)
    except UndefinedMarginError as e:
        return ConvergenceReport(status="precondition-violation", reason=str(e))

    w_max = Fraction(inst.max_weight())
    t_star = convergence_threshold(inst, c, w_max)
    x_star = tuple(int(v) for v in lp.witness)

    checks = []
    for decision in iterate_minsum(inst, t_star + slack):
        if decision.t < t_star:
            continue
        checks.append(IterationCheck(t=decision.t, x_hat=decision.x_hat, matches=decision.x_hat == x_star))

    status: Status = "pass" if all(check.matches for check in checks) else "fail"
    if status == "fail":
        logger.warning(f"Min-sum did not return {x_star} past t*={t_star} (c={c})")
    return ConvergenceReport(
        status=status, c=c, w_max=w_max, t_star=t_star, x_star=x_star, checks=checks,
    )
