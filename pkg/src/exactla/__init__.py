"""Exact characteristic polynomials (Csanky, Berkowitz) and matrix-principle witnesses."""
from .charpoly import (CharPoly, adjoint, berkowitz, charpoly_oracle, csanky,
                       determinant, inverse, newton_coeffs, to_charpoly, triangular_charpoly,
                       triangular_inverse)
from .field import GF, Field, GFElement, Q
from .matrix import Matrix, build, companion, identity
from .poly import Poly, eval_matrix

__all__ = [
    "CharPoly", "Field", "GF", "GFElement", "Matrix", "Poly", "Q", "adjoint", "berkowitz",
    "build", "charpoly_oracle", "companion", "csanky", "determinant", "eval_matrix",
    "identity", "inverse", "newton_coeffs", "to_charpoly", "triangular_charpoly",
    "triangular_inverse",
]
