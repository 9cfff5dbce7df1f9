"""Divisor classes of the even/odd semicanonical-pencil loci in Prym moduli.

Exact (GMP-backed) closed forms for the divisor classes, the three-step
derivation that re-proves them, theta-characteristic counting in the abstract
symplectic model and the hyperelliptic subset model, and the verification
batteries.  Integers cross the boundary as ``int``, rationals as
``fractions.Fraction``.
"""

from ._core import *  # noqa: F401,F403

__version__ = "1.0.0"
