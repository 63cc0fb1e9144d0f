"""Min-sum message passing for packing and covering programs."""
from .messages import (
    MessageState,
    init_messages,
    variable_to_constraint_step,
    constraint_to_variable_step,
    advance,
    normalize_table,
)
from .decision import Decision, decide, beliefs, mirror_decision
from .engine import MinSumEngine, run_minsum_packing, run_minsum_covering, run_minsum, iterate_minsum
from .covering_direct import DirectCoveringMinSum, run_minsum_covering_direct
from .trace import TraceRecord, TraceWriter, read_trace

__all__ = [
    'MessageState',
    'init_messages',
    'variable_to_constraint_step',
    'constraint_to_variable_step',
    'advance',
    'normalize_table',
    'Decision',
    'decide',
    'beliefs',
    'mirror_decision',
    'MinSumEngine',
    'run_minsum_packing',
    'run_minsum_covering',
    'run_minsum',
    'iterate_minsum',
    'DirectCoveringMinSum',
    'run_minsum_covering_direct',
    'TraceRecord',
    'TraceWriter',
    'read_trace',
]
