"""Graded Lie algebras: codimensions, cocharacters, witnesses and embeddings."""

__version__ = "0.1.0"

from .algebra import (AlgebraElement, GradedLieAlgebra, Subspace, bracket, build_paper_algebra,
                      build_sl2, solvable_radical, spin, validate_algebra)
from .algfile import load_algebra, parse_algebra
from .codim import EngineConfig, cocharacter_table, graded_codimension, multiplicity
from .asymptotics import maximize_phi, mu_partition, phi

__all__ = [
    "AlgebraElement", "GradedLieAlgebra", "Subspace", "bracket", "build_paper_algebra", "build_sl2",
    "solvable_radical", "spin", "validate_algebra", "load_algebra", "parse_algebra",
    "EngineConfig", "cocharacter_table", "graded_codimension", "multiplicity",
    "maximize_phi", "mu_partition", "phi",
]
