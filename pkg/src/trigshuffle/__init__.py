"""Exact engine and verifier for the type A-hat trigonometric shuffle algebra."""

__version__ = "0.1.0"

from .scalars import Field, Scalar

__all__ = ["Field", "Scalar", "__version__"]
