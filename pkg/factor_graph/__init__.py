"""Factor graph model, extended values and girth."""
from .extended import NEG_INF, POS_INF, ExtendedValue, is_finite, format_extended
from .graph import FactorGraph, build_factor_graph, eval_factor, objective, variable_node, constraint_node
from .girth import girth

__all__ = [
    'NEG_INF',
    'POS_INF',
    'ExtendedValue',
    'is_finite',
    'format_extended',
    'FactorGraph',
    'build_factor_graph',
    'eval_factor',
    'objective',
    'variable_node',
    'constraint_node',
    'girth',
]
