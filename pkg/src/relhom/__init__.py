"""Exact relative homological algebra for finite-dimensional algebras."""
from .exactla import GF, QQ, Field, Matrix, Subspace
from .algebra import Algebra, Element, SubalgebraEmbedding, check_algebra
from .report import Report

__version__ = "0.1.0"

__all__ = [
    "GF", "QQ", "Field", "Matrix", "Subspace", "Algebra", "Element",
    "SubalgebraEmbedding", "check_algebra", "Report",
]
