"""Exact genus-0 orbifold Gromov-Witten invariants of the projective plane
rooted to order 2 along a smooth plane curve.

Every value is an exact rational (fractions.Fraction).  A Session fixes the
degree of the rooting curve and memoizes everything it computes.
"""

from ._core import Session, lambda_k, __version__

__all__ = ["Session", "lambda_k", "__version__"]
