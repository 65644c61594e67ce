"""Finite-dimensional algebras given by dense structure constants.

An :class:`Algebra` bundles a field, a structure tensor c[i][j][k] with
e_i e_j = sum_k c[i][j][k] e_k, a symmetric bilinear form, an optional
involution matrix, and an optional unit element.  Instances are treated as
immutable; left/right multiplication operators for every basis vector are
precomputed once at construction.
"""

from __future__ import annotations

from typing import List, Optional, Sequence

from . import linalg
from .fields import FieldDescriptor, FieldElement

Matrix = List[list]


class AlgebraError(Exception):
    pass


class DimensionMismatch(AlgebraError):
    pass


class FormUndeclared(AlgebraError):
    pass


class InvolutionUndeclared(AlgebraError):
    pass


class AxiomViolation(AlgebraError):
    pass


class Element:
    """A vector in an algebra, supporting + - scalar* and the algebra product."""

    __slots__ = ("algebra", "coords")

    def __init__(self, algebra: "Algebra", coords: Sequence[FieldElement]):
        if len(coords) != algebra.dim:
            raise DimensionMismatch(f"expected {algebra.dim} coords, got {len(coords)}")
        self.algebra = algebra
        self.coords = list(coords)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Element)
            and other.algebra is self.algebra
            and other.coords == self.coords
        )

    def __hash__(self) -> int:
        return hash((id(self.algebra), tuple(self.coords)))

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coords)

    def __add__(self, other: "Element") -> "Element":
        self._check(other)
        return Element(self.algebra, linalg.vec_add(self.coords, other.coords))

    def __sub__(self, other: "Element") -> "Element":
        self._check(other)
        return Element(self.algebra, linalg.vec_sub(self.coords, other.coords))

    def __neg__(self) -> "Element":
        return Element(self.algebra, [-c for c in self.coords])

    def __mul__(self, other):
        if isinstance(other, Element):
            self._check(other)
            return self.algebra.multiply(self, other)
        return Element(self.algebra, linalg.vec_scale(self._scalar(other), self.coords))

    def __rmul__(self, other):
        return Element(self.algebra, linalg.vec_scale(self._scalar(other), self.coords))

    def __truediv__(self, other):
        return self * self._scalar(other).inverse()

    def _scalar(self, c) -> FieldElement:
        if isinstance(c, FieldElement):
            return c
        return self.algebra.field.from_int(int(c))

    def _check(self, other: "Element") -> None:
        if other.algebra is not self.algebra:
            raise DimensionMismatch("elements belong to different algebras")

    def __repr__(self) -> str:
        return f"Element({[str(c) for c in self.coords]})"


class LinearMap:
    """A dense linear operator on one algebra, applied as a callable."""

    __slots__ = ("algebra", "rows")

    def __init__(self, algebra: "Algebra", rows: Matrix):
        n = algebra.dim
        if len(rows) != n or any(len(r) != n for r in rows):
            raise DimensionMismatch("operator shape does not match the algebra")
        self.algebra = algebra
        self.rows = [list(r) for r in rows]

    def __call__(self, x: Element) -> Element:
        return Element(self.algebra, linalg.mat_vec(self.rows, x.coords))

    def __matmul__(self, other: "LinearMap") -> "LinearMap":
        return LinearMap(self.algebra, linalg.mat_mul(self.rows, other.rows))

    def __add__(self, other: "LinearMap") -> "LinearMap":
        return LinearMap(self.algebra, linalg.mat_add(self.rows, other.rows))

    def __sub__(self, other: "LinearMap") -> "LinearMap":
        return LinearMap(self.algebra, linalg.mat_sub(self.rows, other.rows))

    def __neg__(self) -> "LinearMap":
        return LinearMap(self.algebra, linalg.mat_scale(self.algebra.field.from_int(-1), self.rows))

    def __mul__(self, c) -> "LinearMap":
        if isinstance(c, LinearMap):
            return self @ c
        if not isinstance(c, FieldElement):
            c = self.algebra.field.from_int(int(c))
        return LinearMap(self.algebra, linalg.mat_scale(c, self.rows))

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return isinstance(other, LinearMap) and linalg.mat_eq(self.rows, other.rows)

    def __hash__(self) -> int:
        return hash(tuple(tuple(r) for r in self.rows))

    def inverse(self) -> "LinearMap":
        f = self.algebra.field
        return LinearMap(self.algebra, linalg.mat_inv(self.rows, f.zero(), f.one()))

    def commutator(self, other: "LinearMap") -> "LinearMap":
        return self @ other - other @ self

    def is_identity(self) -> bool:
        f = self.algebra.field
        return linalg.mat_eq(self.rows, linalg.identity(self.algebra.dim, f.one(), f.zero()))

    def __repr__(self) -> str:
        return f"LinearMap({[[str(c) for c in r] for r in self.rows]})"


class Algebra:
    def __init__(
        self,
        field: FieldDescriptor,
        structure: Sequence[Sequence[Sequence[FieldElement]]],
        form: Optional[Matrix] = None,
        involution: Optional[Matrix] = None,
        unit: Optional[Sequence[FieldElement]] = None,
        name: str = "",
    ):
        self.field = field
        self.dim = len(structure)
        n = self.dim
        if any(len(plane) != n or any(len(row) != n for row in plane) for plane in structure):
            raise DimensionMismatch("structure tensor must be dim^3")
        self.structure = [[[structure[i][j][k] for k in range(n)] for j in range(n)] for i in range(n)]
        self.form = [list(r) for r in form] if form is not None else None
        if self.form is not None:
            if len(self.form) != n or any(len(r) != n for r in self.form):
                raise DimensionMismatch("form must be dim x dim")
            for i in range(n):
                for j in range(i):
                    if self.form[i][j] != self.form[j][i]:
                        raise AxiomViolation("form is not symmetric")
        self.involution = [list(r) for r in involution] if involution is not None else None
        if self.involution is not None:
            sq = linalg.mat_mul(self.involution, self.involution)
            if not linalg.mat_eq(sq, linalg.identity(n, field.one(), field.zero())):
                raise AxiomViolation("involution matrix must square to the identity")
        self.unit = list(unit) if unit is not None else None
        self.name = name
        # Precompute basis multiplication operators:
        # left_basis_ops[i] = L(e_i), right_basis_ops[j] = R(e_j).
        self.left_basis_ops = [
            LinearMap(self, [[self.structure[i][j][k] for j in range(n)] for k in range(n)])
            for i in range(n)
        ]
        self.right_basis_ops = [
            LinearMap(self, [[self.structure[i][j][k] for i in range(n)] for k in range(n)])
            for j in range(n)
        ]
        self._symcomp_cache: Optional[bool] = None

    # -- element builders ---------------------------------------------------
    def element(self, coords) -> Element:
        out = []
        for c in coords:
            if not isinstance(c, FieldElement):
                c = self.field.from_int(int(c))
            out.append(c)
        return Element(self, out)

    def basis(self, i: int) -> Element:
        f = self.field
        return Element(self, [f.one() if j == i else f.zero() for j in range(self.dim)])

    def zero_element(self) -> Element:
        return Element(self, [self.field.zero()] * self.dim)

    def unit_element(self) -> Element:
        if self.unit is None:
            raise AxiomViolation("algebra has no declared unit")
        return Element(self, self.unit)

    def basis_elements(self) -> List[Element]:
        return [self.basis(i) for i in range(self.dim)]

    # -- operations ---------------------------------------------------------
    def multiply(self, x: Element, y: Element) -> Element:
        n = self.dim
        zero = self.field.zero()
        out = [zero] * n
        for i, xi in enumerate(x.coords):
            if xi.is_zero():
                continue
            plane = self.structure[i]
            for j, yj in enumerate(y.coords):
                if yj.is_zero():
                    continue
                coef = xi * yj
                row = plane[j]
                for k in range(n):
                    if not row[k].is_zero():
                        out[k] = out[k] + coef * row[k]
        return Element(self, out)

    def left_op(self, x: Element) -> LinearMap:
        n = self.dim
        zero = self.field.zero()
        rows = [[zero] * n for _ in range(n)]
        for i, xi in enumerate(x.coords):
            if xi.is_zero():
                continue
            op = self.left_basis_ops[i].rows
            for k in range(n):
                for j in range(n):
                    if not op[k][j].is_zero():
                        rows[k][j] = rows[k][j] + xi * op[k][j]
        return LinearMap(self, rows)

    def right_op(self, y: Element) -> LinearMap:
        n = self.dim
        zero = self.field.zero()
        rows = [[zero] * n for _ in range(n)]
        for j, yj in enumerate(y.coords):
            if yj.is_zero():
                continue
            op = self.right_basis_ops[j].rows
            for k in range(n):
                for i in range(n):
                    if not op[k][i].is_zero():
                        rows[k][i] = rows[k][i] + yj * op[k][i]
        return LinearMap(self, rows)

    def form_eval(self, x: Element, y: Element) -> FieldElement:
        if self.form is None:
            raise FormUndeclared("algebra has no bilinear form")
        acc = self.field.zero()
        for i, xi in enumerate(x.coords):
            if xi.is_zero():
                continue
            for j, yj in enumerate(y.coords):
                if not yj.is_zero() and not self.form[i][j].is_zero():
                    acc = acc + xi * self.form[i][j] * yj
        return acc

    def involute(self, x: Element) -> Element:
        if self.involution is None:
            raise InvolutionUndeclared("algebra has no involution")
        return Element(self, linalg.mat_vec(self.involution, x.coords))

    def involution_map(self) -> LinearMap:
        if self.involution is None:
            raise InvolutionUndeclared("algebra has no involution")
        return LinearMap(self, self.involution)

    def identity_map(self) -> LinearMap:
        f = self.field
        return LinearMap(self, linalg.identity(self.dim, f.one(), f.zero()))

    def product_vector(self, i: int, j: int) -> List[FieldElement]:
        """Coordinates of e_i e_j."""
        return [self.structure[i][j][k] for k in range(self.dim)]

    # -- axioms -------------------------------------------------------------
    def check_axioms(self, which: Sequence[str]) -> dict:
        """Run the named axiom checks; returns {name: (ok, witness)}."""
        out = {}
        for name in which:
            if name == "involutive":
                out[name] = self._check_involutive()
            elif name == "nondegenerate":
                out[name] = self._check_nondegenerate()
            elif name == "condition_B":
                out[name] = self._check_condition_b()
            elif name == "condition_C":
                out[name] = self._check_condition_c()
            else:
                raise ValueError(f"unknown axiom: {name}")
        return out

    def _check_involutive(self):
        if self.involution is None:
            raise InvolutionUndeclared("algebra has no involution")
        for i in range(self.dim):
            for j in range(self.dim):
                lhs = self.involute(self.basis(i) * self.basis(j))
                rhs = self.involute(self.basis(j)) * self.involute(self.basis(i))
                if lhs != rhs:
                    return (False, f"conj(e{i} e{j}) != conj(e{j}) conj(e{i})")
        if self.form is not None:
            for i in range(self.dim):
                for j in range(self.dim):
                    lhs = self.form_eval(self.involute(self.basis(i)), self.involute(self.basis(j)))
                    if lhs != self.form[i][j]:
                        return (False, f"involution is not a form isometry at ({i},{j})")
        return (True, None)

    def _check_nondegenerate(self):
        if self.form is None:
            raise FormUndeclared("algebra has no bilinear form")
        r = linalg.rank(self.form, self.field.zero())
        return (r == self.dim, None if r == self.dim else f"form rank {r} < {self.dim}")

    def _check_condition_b(self):
        # span of all basis products must be the whole space
        rows = [self.product_vector(i, j) for i in range(self.dim) for j in range(self.dim)]
        r = linalg.rank(rows, self.field.zero())
        return (r == self.dim, None if r == self.dim else f"product span has rank {r}")

    def _check_condition_c(self):
        # x |-> L(x) and y |-> R(y) must both be injective
        zero, one = self.field.zero(), self.field.one()
        n = self.dim
        lmat = [[self.structure[i][j][k] for i in range(n)] for j in range(n) for k in range(n)]
        rmat = [[self.structure[i][j][k] for j in range(n)] for i in range(n) for k in range(n)]
        if linalg.nullspace(lmat, zero, one):
            return (False, "some nonzero x has L(x) = 0")
        if linalg.nullspace(rmat, zero, one):
            return (False, "some nonzero y has R(y) = 0")
        return (True, None)

    def __repr__(self) -> str:
        return f"Algebra(name={self.name!r}, dim={self.dim}, field={self.field})"


def symmetric_composition_quick(a: Algebra) -> bool:
    """Cached basis check of (xy)x = x(yx) = <x|x> y; used to gate skewness checks."""
    if a._symcomp_cache is not None:
        return a._symcomp_cache
    ok = True
    if a.form is None:
        ok = False
    else:
        basis = a.basis_elements()
        # bilinear-in-y, quadratic-in-x law: check on x = e_i, e_i + e_j
        xs = list(basis) + [basis[i] + basis[j] for i in range(a.dim) for j in range(i + 1, a.dim)]
        for x in xs:
            nx = a.form_eval(x, x)
            for y in basis:
                if (x * y) * x != nx * y or x * (y * x) != nx * y:
                    ok = False
                    break
            if not ok:
                break
    a._symcomp_cache = ok
    return ok
