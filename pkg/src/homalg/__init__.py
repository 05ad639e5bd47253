"""Exact homological computations over finite-dimensional commutative
algebras: resolutions, derived functors, duality classifications, and the
service/CLI surface on top of them."""

__version__ = "0.1.0"

from .field import Field, QQ, GF

__all__ = ["Field", "QQ", "GF", "__version__"]
