"""Oscillation and convergence checks, sweeps and the command line."""
from .oscillation import OscillationRow, OscillationReport, check_weak_oscillation, CSV_COLUMNS
from .convergence import ConvergenceReport, check_convergence, precondition_failure
from .sweep import SweepConfig, SweepResult, sweep

__all__ = [
    'OscillationRow',
    'OscillationReport',
    'check_weak_oscillation',
    'CSV_COLUMNS',
    'ConvergenceReport',
    'check_convergence',
    'precondition_failure',
    'SweepConfig',
    'SweepResult',
    'sweep',
]
