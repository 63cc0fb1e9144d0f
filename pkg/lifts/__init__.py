"""Graph covers: lifts, girth amplification and fractional realizations."""
from .lift import (
    Lift,
    build_lift,
    identity_lift,
    lift_instance,
    is_covering_map,
    validate_covering_map,
    lift_assignment,
    average_assignment,
)
from .girth_amplification import girth_doubling_lift, compose_lifts, amplify_girth
from .realizer import realize_fractional_solution, balanced_values

__all__ = [
    'Lift',
    'build_lift',
    'identity_lift',
    'lift_instance',
    'is_covering_map',
    'validate_covering_map',
    'lift_assignment',
    'average_assignment',
    'girth_doubling_lift',
    'compose_lifts',
    'amplify_girth',
    'realize_fractional_solution',
    'balanced_values',
]
