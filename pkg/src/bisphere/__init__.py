"""Exact operator algebra for the superintegrable reflection model on the sphere."""

from .model import ModelParams
from .operators import apply, equal_on_degree
from .polyalg import LaurentPoly, Rational

__all__ = ["LaurentPoly", "ModelParams", "Rational", "apply", "equal_on_degree"]
__version__ = "0.1.0"
