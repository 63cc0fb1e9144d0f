"""Exact LP relaxation, optimal-face analysis and integral oracle."""
from .solver import LpResult, solve_lp, enumerate_vertices, invert
from .analysis import LpClass, VariableRange, variable_range, classify, compute_c, convergence_threshold
from .integral import IntegralOptimum, best_integral

__all__ = [
    'LpResult',
    'solve_lp',
    'enumerate_vertices',
    'invert',
    'LpClass',
    'VariableRange',
    'variable_range',
    'classify',
    'compute_c',
    'convergence_threshold',
    'IntegralOptimum',
    'best_integral',
]
