"""Exact scalar arithmetic over Q, quadratic extensions Q(sqrt(d)), and odd prime fields F_p.

Every coefficient in the library flows through :class:`FieldElement`.  Elements
are immutable and hashable, so they can be shared freely between threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Optional, Union

RATIONALS = "Q"
QUADRATIC = "Q_sqrt"
PRIME = "Fp"


class FieldError(Exception):
    pass


class DescriptorMismatch(FieldError):
    pass


class DivisionByZero(FieldError):
    pass


class SqrtUnavailable(FieldError):
    pass


class FieldNotEmbeddable(FieldError):
    """Raised when a float embedding is requested for a finite field."""


class CharThree(FieldError):
    """Raised by operations that require characteristic != 3."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def is_square_free(n: int) -> bool:
    n = abs(n)
    if n == 0:
        return False
    f = 2
    while f * f <= n:
        if n % (f * f) == 0:
            return False
        f += 1
    return True


@dataclass(frozen=True)
class FieldDescriptor:
    kind: str
    d: Optional[int] = None
    p: Optional[int] = None

    def __post_init__(self) -> None:
        if self.kind == RATIONALS:
            if self.d is not None or self.p is not None:
                raise ValueError("rationals take no parameters")
        elif self.kind == QUADRATIC:
            if self.d is None or self.d in (0, 1) or not is_square_free(self.d):
                raise ValueError(f"d must be square-free and != 0, 1: {self.d}")
        elif self.kind == PRIME:
            if self.p is None or not is_prime(self.p) or self.p == 2:
                raise ValueError(f"p must be an odd prime: {self.p}")
        else:
            raise ValueError(f"unknown field kind: {self.kind}")

    @property
    def characteristic(self) -> int:
        return self.p if self.kind == PRIME else 0

    def zero(self) -> "FieldElement":
        return self.from_int(0)

    def one(self) -> "FieldElement":
        return self.from_int(1)

    def from_int(self, n: int) -> "FieldElement":
        return self.from_fraction(Fraction(n))

    def from_fraction(self, q: Fraction) -> "FieldElement":
        if self.kind == RATIONALS:
            return FieldElement(self, q)
        if self.kind == QUADRATIC:
            return FieldElement(self, q, Fraction(0))
        if q.denominator % self.p == 0:
            raise DivisionByZero(f"denominator divisible by p={self.p}")
        num = q.numerator % self.p
        inv = pow(q.denominator % self.p, self.p - 2, self.p)
        return FieldElement(self, num * inv % self.p)

    def element(self, a, b=None) -> "FieldElement":
        """Build an element from raw coordinates.

        Q: a rational; Q(sqrt d): a + b*sqrt(d); F_p: an integer residue.
        """
        if self.kind == QUADRATIC:
            return FieldElement(self, Fraction(a), Fraction(0 if b is None else b))
        if b is not None:
            raise ValueError("second coordinate only valid for quadratic fields")
        if self.kind == PRIME:
            return FieldElement(self, int(a) % self.p)
        return FieldElement(self, Fraction(a))

    def sqrt_generator(self) -> "FieldElement":
        if self.kind != QUADRATIC:
            raise ValueError("sqrt generator only exists in quadratic fields")
        return FieldElement(self, Fraction(0), Fraction(1))

    def to_json(self) -> dict:
        if self.kind == RATIONALS:
            return {"field": "Q"}
        if self.kind == QUADRATIC:
            return {"field": "Q_sqrt", "d": self.d}
        return {"field": "Fp", "p": self.p}

    @staticmethod
    def from_json(obj: dict) -> "FieldDescriptor":
        kind = obj["field"]
        if kind == "Q":
            return FieldDescriptor(RATIONALS)
        if kind == "Q_sqrt":
            return FieldDescriptor(QUADRATIC, d=int(obj["d"]))
        if kind == "Fp":
            return FieldDescriptor(PRIME, p=int(obj["p"]))
        raise ValueError(f"unknown field tag: {kind}")


Scalar = Union["FieldElement", int, Fraction]


class FieldElement:
    """Immutable exact scalar in one of the three supported field families."""

    __slots__ = ("desc", "a", "b")

    def __init__(self, desc: FieldDescriptor, a, b=None):
        object.__setattr__(self, "desc", desc)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    def __setattr__(self, *args):
        raise AttributeError("FieldElement is immutable")

    def _coerce(self, other: Scalar) -> "FieldElement":
        if isinstance(other, FieldElement):
            if other.desc != self.desc:
                raise DescriptorMismatch(f"{self.desc} vs {other.desc}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.desc.from_fraction(Fraction(other))
        return NotImplemented  # type: ignore[return-value]

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = self.desc.from_fraction(Fraction(other))
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.desc == other.desc and self.a == other.a and self.b == other.b

    def __hash__(self) -> int:
        return hash((self.desc, self.a, self.b))

    def __bool__(self) -> bool:
        return not self.is_zero()

    def is_zero(self) -> bool:
        if self.desc.kind == QUADRATIC:
            return self.a == 0 and self.b == 0
        return self.a == 0

    def __add__(self, other: Scalar) -> "FieldElement":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        k = self.desc.kind
        if k == QUADRATIC:
            return FieldElement(self.desc, self.a + o.a, self.b + o.b)
        if k == PRIME:
            return FieldElement(self.desc, (self.a + o.a) % self.desc.p)
        return FieldElement(self.desc, self.a + o.a)

    __radd__ = __add__

    def __neg__(self) -> "FieldElement":
        k = self.desc.kind
        if k == QUADRATIC:
            return FieldElement(self.desc, -self.a, -self.b)
        if k == PRIME:
            return FieldElement(self.desc, (-self.a) % self.desc.p)
        return FieldElement(self.desc, -self.a)

    def __sub__(self, other: Scalar) -> "FieldElement":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: Scalar) -> "FieldElement":
        return (-self) + other

    def __mul__(self, other: Scalar) -> "FieldElement":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        k = self.desc.kind
        if k == QUADRATIC:
            return FieldElement(
                self.desc,
                self.a * o.a + self.desc.d * self.b * o.b,
                self.a * o.b + self.b * o.a,
            )
        if k == PRIME:
            return FieldElement(self.desc, self.a * o.a % self.desc.p)
        return FieldElement(self.desc, self.a * o.a)

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        if self.is_zero():
            raise DivisionByZero("inverse of zero")
        k = self.desc.kind
        if k == QUADRATIC:
            # 1/(a + b sqrt d) = (a - b sqrt d)/(a^2 - d b^2); the norm is
            # nonzero because d is not a rational square.
            norm = self.a * self.a - self.desc.d * self.b * self.b
            return FieldElement(self.desc, self.a / norm, -self.b / norm)
        if k == PRIME:
            return FieldElement(self.desc, pow(self.a, self.desc.p - 2, self.desc.p))
        return FieldElement(self.desc, 1 / self.a)

    def __truediv__(self, other: Scalar) -> "FieldElement":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other: Scalar) -> "FieldElement":
        return self.inverse() * other

    def __pow__(self, n: int) -> "FieldElement":
        if n < 0:
            return self.inverse() ** (-n)
        out = self.desc.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def conj(self) -> "FieldElement":
        """Quadratic conjugate a + b*sqrt(d) -> a - b*sqrt(d); identity elsewhere."""
        if self.desc.kind == QUADRATIC:
            return FieldElement(self.desc, self.a, -self.b)
        return self

    def to_float(self) -> float:
        k = self.desc.kind
        if k == PRIME:
            raise FieldNotEmbeddable("F_p has no float embedding")
        if k == QUADRATIC:
            return float(self.a) + float(self.b) * float(self.desc.d) ** 0.5
        return float(self.a)

    def __repr__(self) -> str:
        return f"FieldElement({self})"

    def __str__(self) -> str:
        k = self.desc.kind
        if k == PRIME:
            return str(self.a)
        if k == QUADRATIC:
            if self.b == 0:
                return str(self.a)
            if self.a == 0:
                return f"{self.b}*sqrt({self.desc.d})"
            return f"{self.a}+{self.b}*sqrt({self.desc.d})"
        return str(self.a)


def field_arith(op: str, x: FieldElement, y: FieldElement) -> FieldElement:
    """Functional surface over the element operators."""
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "div":
        if y.is_zero():
            raise DivisionByZero("division by zero")
        return x / y
    if op == "neg":
        return -x
    raise ValueError(f"unknown op: {op}")


def _rational_sqrt(q: Fraction) -> Optional[Fraction]:
    if q < 0:
        return None
    rn = isqrt(q.numerator)
    rd = isqrt(q.denominator)
    if rn * rn == q.numerator and rd * rd == q.denominator:
        return Fraction(rn, rd)
    return None


def sqrt_in_field(c: FieldElement) -> Optional[FieldElement]:
    """Return r with r*r == c if one exists in c's field, else None."""
    desc = c.desc
    if desc.kind == RATIONALS:
        r = _rational_sqrt(c.a)
        return None if r is None else FieldElement(desc, r)
    if desc.kind == PRIME:
        # Exhaustive: p is small in this workbench.
        target = c.a
        for r in range((desc.p + 1) // 2):
            if r * r % desc.p == target:
                return FieldElement(desc, r)
        return None
    # Q(sqrt d): solve (a + b sqrt d)^2 = c0 + c1 sqrt d.
    c0, c1, d = c.a, c.b, desc.d
    if c1 == 0:
        r = _rational_sqrt(c0)
        if r is not None:
            return FieldElement(desc, r, Fraction(0))
        r = _rational_sqrt(c0 / d)
        if r is not None:
            return FieldElement(desc, Fraction(0), r)
        return None
    # a != 0, b = c1/(2a), and a^2 solves 2t^2 - 2 c0 t + c1^2 d / 2 = 0.
    disc = _rational_sqrt(c0 * c0 - c1 * c1 * d)
    if disc is None:
        return None
    for sign in (1, -1):
        a2 = (c0 + sign * disc) / 2
        a = _rational_sqrt(a2)
        if a is not None and a != 0:
            b = c1 / (2 * a)
            return FieldElement(desc, a, b)
    return None


def format_scalar(x: FieldElement) -> str:
    """Encode a scalar for the algebra-spec file (exact round-trip)."""
    k = x.desc.kind
    if k == PRIME:
        return str(x.a)
    if k == QUADRATIC:
        return f"{x.a}+{x.b}*sqrt({x.desc.d})"
    return str(x.a)


def parse_scalar(text: str, desc: FieldDescriptor) -> FieldElement:
    text = text.strip().replace(" ", "")
    if desc.kind == PRIME:
        return desc.element(int(text))
    if desc.kind == QUADRATIC:
        if "sqrt" in text:
            head, tail = text.split("+", 1) if "+" in text.split("sqrt")[0] else _split_quad(text)
            b_part = tail[: tail.index("*sqrt(")]
            return desc.element(Fraction(head), Fraction(b_part))
        return desc.element(Fraction(text))
    return desc.element(Fraction(text))


def _split_quad(text: str):
    # "a+b*sqrt(d)" where a may itself start with '-'; split at the '+' or '-'
    # that precedes the sqrt coefficient.
    idx = text.index("*sqrt(")
    # walk back to the sign separating a from b
    depth = 0
    for i in range(idx - 1, 0, -1):
        ch = text[i]
        if ch in "+-" and text[i - 1] not in "/+-":
            return text[:i], text[i:idx + len(text) - idx]
    raise ValueError(f"cannot parse quadratic scalar: {text}")
