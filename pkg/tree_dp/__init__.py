"""Computation-tree oracle for min-sum beliefs."""
from .tree import PathPrefixTree, TreeNode, build_tree
from .solver import tree_optima, tree_optimum, opt_dp_root_set

__all__ = [
    'PathPrefixTree',
    'TreeNode',
    'build_tree',
    'tree_optima',
    'tree_optimum',
    'opt_dp_root_set',
]
