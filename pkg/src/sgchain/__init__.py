"""Finite semigroups, ideals, socles, acts, string rewriting and chain
conditions on principal right ideals."""

from .core import FiniteSemigroup, Verdict, from_table, from_transformations
from .errors import SemigroupError
from .green import GreenStructure, Poset, compute_green, green_of
from .rewrite import FpSemigroup, RewritingSystem, example_41, fp_semigroup, free_fp

__version__ = "0.1.0"

__all__ = [
    "FiniteSemigroup", "Verdict", "from_table", "from_transformations", "SemigroupError",
    "GreenStructure", "Poset", "compute_green", "green_of",
    "FpSemigroup", "RewritingSystem", "example_41", "fp_semigroup", "free_fp",
]
