"""
Min-sum engine for packing, and covering through complementation.

Packing: zero initialization, t full iterations, then the decision rule.
Covering: run packing min-sum on the complement (b replaced by d = A.X - b)
and map every value beta back to X_v - beta.
"""

import logging
from typing import Callable, Iterator, Optional

from config.settings import settings
from factor_graph.graph import FactorGraph, build_factor_graph
from instances.model import ProblemInstance, Sense
from instances.reduction import complement_reduction
from minsum.decision import Decision, decide, mirror_decision
from minsum.messages import MessageState, advance, init_messages
from utils.errors import ParameterRangeError, SenseError


logger = logging.getLogger(__name__)

IterationHook = Callable[[MessageState], None]


class MinSumEngine:
    """
    Synchronous min-sum on a packing factor graph.

    Holds the current message state; each step() runs one iteration.
    """

    def __init__(
        self,
        fg: FactorGraph,
        normalize: Optional[bool] = None,
        workers: Optional[int] = None,
        on_iteration: Optional[IterationHook] = None,
        keep_history: bool = False,
    ):
        if fg.sense != Sense.PACKING:
            raise SenseError("MinSumEngine runs on packing factor graphs; complement covering instances first")
        self.fg = fg
        self.normalize = settings.normalize_messages if normalize is None else normalize
        self.workers = settings.minsum_workers if workers is None else workers
        self.on_iteration = on_iteration
        self.state = init_messages(fg, keep_history=keep_history)
        if self.on_iteration:
            self.on_iteration(self.state)

    @property
    def iteration(self) -> int:
        return self.state.iteration

    def step(self) -> MessageState:
        self.state = advance(self.state, workers=self.workers, normalize=self.normalize)
        if self.on_iteration:
            self.on_iteration(self.state)
        return self.state

    def run(self, t: int) -> Decision:
        """Advance to iteration t (from wherever the engine is) and decide."""
        if t < self.iteration:
            raise ParameterRangeError(f"engine is already at iteration {self.iteration}, cannot go back to {t}")
        while self.iteration < t:
            self.step()
        return decide(self.state, t)

    def iterate(self, t_max: int) -> Iterator[Decision]:
        """Decisions for t = 1, ..., t_max sharing one message run."""
        for t in range(1, t_max + 1):
            yield self.run(t)


def _check_iterations(t: int) -> None:
    if t < 0:
        raise ParameterRangeError(f"iteration count must be >= 0, got {t}")


def run_minsum_packing(
    inst: ProblemInstance,
    t: int,
    normalize: Optional[bool] = None,
    workers: Optional[int] = None,
    on_iteration: Optional[IterationHook] = None,
) -> Decision:
    """
    Run min-sum for exactly t iterations on a packing instance.

    Args:
        inst: Packing instance
        t: Number of iterations (t = 0 decides on phi alone)
        normalize: Subtract each constraint table's maximum (default from settings)
        workers: Thread workers per half-iteration (default from settings)
        on_iteration: Callback receiving every message state, e.g. a TraceWriter

    Returns:
        Decision after t iterations

    Raises:
        SenseError: inst is a covering instance
        InfeasibleRootError: some variable has no feasible value
    """
    if inst.sense != Sense.PACKING:
        raise SenseError("run_minsum_packing expects a packing instance")
    _check_iterations(t)
    engine = MinSumEngine(build_factor_graph(inst), normalize, workers, on_iteration)
    decision = engine.run(t)
    logger.debug(f"Min-sum packing t={t}: x_hat={decision.x_hat}")
    return decision


def run_minsum_covering(
    inst: ProblemInstance,
    t: int,
    normalize: Optional[bool] = None,
    workers: Optional[int] = None,
    on_iteration: Optional[IterationHook] = None,
) -> Decision:
    """
    Min-sum for covering via the complement reduction.

    Returns:
        Decision in covering coordinates: delta = {X_v - beta}, x_hat = X - x_hat(packing)

    Raises:
        SenseError: inst is a packing instance
        InfeasibleCoveringError: some row cannot be covered within the box
    """
    packing, _ = complement_reduction(inst)
    _check_iterations(t)
    engine = MinSumEngine(build_factor_graph(packing), normalize, workers, on_iteration)
    decision = mirror_decision(engine.run(t), inst.X)
    logger.debug(f"Min-sum covering t={t}: x_hat={decision.x_hat}")
    return decision


def run_minsum(inst: ProblemInstance, t: int, **kwargs) -> Decision:
    """Dispatch on the instance sense."""
    if inst.is_packing:
        return run_minsum_packing(inst, t, **kwargs)
    return run_minsum_covering(inst, t, **kwargs)


def iterate_minsum(inst: ProblemInstance, t_max: int, **kwargs) -> Iterator[Decision]:
    """
    Decisions for t = 1, ..., t_max of either sense from a single message run.
    """
    _check_iterations(t_max)
    if inst.is_packing:
        engine = MinSumEngine(build_factor_graph(inst), **kwargs)
        yield from engine.iterate(t_max)
        return
    packing, _ = complement_reduction(inst)
    engine = MinSumEngine(build_factor_graph(packing), **kwargs)
    for decision in engine.iterate(t_max):
        yield mirror_decision(decision, inst.X)
