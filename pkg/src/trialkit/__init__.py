"""Exact-arithmetic workbench for triality groups of composition algebras.

The package certifies, over exact fields (rationals, quadratic extensions,
odd prime fields), the identities relating symmetric composition algebras,
their triality triples and local (Lie) triples, automorphisms built from
idempotents, and the vector-matrix (Zorn) families.
"""

from .algebra import Algebra, AlgebraError, Element, LinearMap
from .fields import FieldDescriptor, FieldElement

__all__ = [
    "Algebra",
    "AlgebraError",
    "Element",
    "FieldDescriptor",
    "FieldElement",
    "LinearMap",
]

__version__ = "1.0.0"
