"""Exact computation of signed and classical Kazhdan-Lusztig polynomials,
wall-crossing signs, and truncated signature characters of Verma modules
for equal-rank semisimple Lie algebras at small rank."""

from .algebra import IntPolynomial, TruncatedCharacter, expand_inverse_factor, substitute_neg_q
from .kl import KLTable
from .rootsystem import RootSystem, build_root_system
from .skl import SKLTable, signed_level_coefficient, verify_main_theorem
from .weyl import IntegralData, WeylElt, WeylGroup, integral_data

__version__ = "0.1.0"

__all__ = [
    "IntPolynomial",
    "TruncatedCharacter",
    "expand_inverse_factor",
    "substitute_neg_q",
    "KLTable",
    "RootSystem",
    "build_root_system",
    "SKLTable",
    "signed_level_coefficient",
    "verify_main_theorem",
    "IntegralData",
    "WeylElt",
    "WeylGroup",
    "integral_data",
    "__version__",
]
