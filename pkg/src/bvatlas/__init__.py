"""K3 surfaces with non-symplectic involution in weighted projective 3-space.

Weights, Delsarte equations, fixed loci and Nikulin invariants, Borcea-Voisin
Hodge data, and the finite-field arithmetic around them.
"""

from .wps import Weight, WPolynomial, K3Record, parse_polynomial

__all__ = ["Weight", "WPolynomial", "K3Record", "parse_polynomial"]
__version__ = "0.1.0"
