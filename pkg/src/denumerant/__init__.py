"""Exact restricted-partition quasi-polynomials via Bernoulli determinant systems."""

__version__ = "0.1.0"

from .barnes import PartitionSpec
from .detsolver import ZeroDeterminantError, cramer_solve, delta
from .partition import CORPUS, QuasiPolynomial, dp_count, qp_fit_oracle

__all__ = [
    "__version__",
    "PartitionSpec",
    "QuasiPolynomial",
    "ZeroDeterminantError",
    "CORPUS",
    "cramer_solve",
    "delta",
    "dp_count",
    "qp_fit_oracle",
]
