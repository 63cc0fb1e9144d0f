"""Problem instances: data model, reduction, generators and file format."""
from .model import ProblemInstance, Sense, Assignment, validate_assignment
from .reduction import ComplementMap, complement_reduction
from .generators import GeneratorParams, generate, FAMILIES
from .serialization import parse_instance, serialize_instance, load_instance, save_instance

__all__ = [
    'ProblemInstance',
    'Sense',
    'Assignment',
    'validate_assignment',
    'ComplementMap',
    'complement_reduction',
    'GeneratorParams',
    'generate',
    'FAMILIES',
    'parse_instance',
    'serialize_instance',
    'load_instance',
    'save_instance',
]
