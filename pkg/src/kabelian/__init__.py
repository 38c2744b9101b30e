"""Exact computations with nilpotent Lie algebras given by structure constants."""

from __future__ import annotations

from .errors import KabelianError
from .exactlin import Matrix, Partition, Subspace, span
from .liealg import LieAlgebra, analyze, from_brackets

__all__ = [
    "KabelianError",
    "LieAlgebra",
    "Matrix",
    "Partition",
    "Subspace",
    "analyze",
    "from_brackets",
    "span",
]

__version__ = "0.1.0"
