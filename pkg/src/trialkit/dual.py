"""Dual numbers a + eps*b with eps^2 = 0 over an exact field.

Used to turn first-order heuristics into exact statements: an identity that
holds "up to eps^2" becomes an exact equation of Dual matrices.
"""

from __future__ import annotations

from .fields import FieldDescriptor, FieldElement


class Dual:
    __slots__ = ("re", "ep")

    def __init__(self, re: FieldElement, ep: FieldElement):
        self.re = re
        self.ep = ep

    @staticmethod
    def lift(x: FieldElement) -> "Dual":
        return Dual(x, x.desc.zero())

    def __add__(self, other: "Dual") -> "Dual":
        return Dual(self.re + other.re, self.ep + other.ep)

    def __sub__(self, other: "Dual") -> "Dual":
        return Dual(self.re - other.re, self.ep - other.ep)

    def __neg__(self) -> "Dual":
        return Dual(-self.re, -self.ep)

    def __mul__(self, other: "Dual") -> "Dual":
        return Dual(self.re * other.re, self.re * other.ep + self.ep * other.re)

    def __eq__(self, other) -> bool:
        return isinstance(other, Dual) and self.re == other.re and self.ep == other.ep

    def __hash__(self) -> int:
        return hash((self.re, self.ep))

    def is_zero(self) -> bool:
        return self.re.is_zero() and self.ep.is_zero()

    def __repr__(self) -> str:
        return f"Dual({self.re}, {self.ep})"


def dual_zero(field: FieldDescriptor) -> Dual:
    return Dual(field.zero(), field.zero())


def dual_one(field: FieldDescriptor) -> Dual:
    return Dual(field.one(), field.zero())
