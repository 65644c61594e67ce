"""Triality triples built from associative involutive algebras.

On an associative unital algebra with involution (matrix transpose, complex
or quaternion conjugation), unitary elements a (conj(a)*a = e) give
sandwich maps x -> a_j * x * conj(a_{j+1}); these become triality triples of
the conjugate algebra (product xy = conj(x*y)).  Skew elements give local
triples x -> p_j*x - x*p_{j+1}, and the Cayley transform bridges the two.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple

from . import linalg
from .algebra import Algebra, AlgebraError, Element, LinearMap
from .constructors import make_conjugate
from .symcomp import CertificationFailure
from .triality import LocalTriple, RelationFails, TrialityTriple, verify_local, verify_triality


class NotAssociative(AlgebraError):
    pass


class NotUnitary(AlgebraError):
    pass


class NotSkew(AlgebraError):
    pass


def check_associative(a: Algebra) -> None:
    basis = a.basis_elements()
    n = a.dim
    for i in range(n):
        for j in range(n):
            p = basis[i] * basis[j]
            for k in range(n):
                if p * basis[k] != basis[i] * (basis[j] * basis[k]):
                    raise NotAssociative(f"associativity fails at ({i}, {j}, {k})")


@dataclass(frozen=True)
class UnitaryTriple:
    algebra: Algebra
    elems: Tuple[Element, Element, Element]

    def comp(self, j: int) -> Element:
        return self.elems[(j - 1) % 3]


def certify_unitary(astar: Algebra, a1: Element, a2: Element, a3: Element) -> UnitaryTriple:
    if astar.unit is None or astar.involution is None:
        raise AlgebraError("a unital involutive algebra is required")
    e = astar.unit_element()
    for j, x in enumerate((a1, a2, a3)):
        if astar.involute(x) * x != e or x * astar.involute(x) != e:
            raise NotUnitary(f"component {j + 1} is not unitary")
    return UnitaryTriple(astar, (a1, a2, a3))


@dataclass(frozen=True)
class SkewTriple:
    algebra: Algebra
    elems: Tuple[Element, Element, Element]

    def comp(self, j: int) -> Element:
        return self.elems[(j - 1) % 3]


def certify_skew(astar: Algebra, p1: Element, p2: Element, p3: Element) -> SkewTriple:
    if astar.involution is None:
        raise AlgebraError("an involutive algebra is required")
    for j, x in enumerate((p1, p2, p3)):
        if astar.involute(x) != -x:
            raise NotSkew(f"component {j + 1} is not skew")
    return SkewTriple(astar, (p1, p2, p3))


def para_associativity(a: Algebra) -> None:
    """conj(z)(xy) = (yz)conj(x) on all basis triples of a conjugate algebra."""
    basis = a.basis_elements()
    n = a.dim
    for i in range(n):
        for j in range(n):
            for k in range(n):
                x, y, z = basis[i], basis[j], basis[k]
                if a.involute(z) * (x * y) != (y * z) * a.involute(x):
                    raise RelationFails("para-associativity fails", witness=(i, j, k))


def _rebind(target: Algebra, m: LinearMap) -> LinearMap:
    return LinearMap(target, m.rows)


def assoc_sigma_triple(astar: Algebra, u: UnitaryTriple) -> TrialityTriple:
    """Sandwich triple sigma_j x = a_j * x * conj(a_{j+1}), certified as a
    triality triple of the conjugate algebra.

    Verified along the way: sigma_j(a) sigma_j(conj a) = Id; the involution
    conjugate of sigma_j is the swapped sandwich a_{j+1} * x * conj(a_j) and
    intertwines the products; on the conjugate algebra sigma_j factors both
    as L(a_{j+1}) L(a_j) and as R(conj a_j) R(conj a_{j+1}).
    """
    check_associative(astar)
    conj_alg = make_conjugate(astar)
    jmap = astar.involution_map()
    sig = []
    sig_bar = []
    swapped = []
    for j in range(1, 4):
        aj = u.comp(j)
        aj1_bar = astar.involute(u.comp(j + 1))
        sig.append(astar.left_op(aj) @ astar.right_op(aj1_bar))
        sig_bar.append(astar.left_op(astar.involute(aj))
                       @ astar.right_op(u.comp(j + 1)))
        swapped.append(astar.left_op(u.comp(j + 1)) @ astar.right_op(astar.involute(aj)))
    for j in range(3):
        if not (sig[j] @ sig_bar[j]).is_identity():
            raise CertificationFailure("sigma(a) sigma(conj a) != Id", witness=(j + 1,))
        if jmap @ sig[j] @ jmap != swapped[j]:
            raise CertificationFailure("involution conjugate of sigma is wrong",
                                       witness=(j + 1,))
    basis = astar.basis_elements()
    n = astar.dim
    for j in range(3):
        conj_sig = jmap @ sig[j] @ jmap
        s1, s2 = sig[(j + 1) % 3], sig[(j + 2) % 3]
        for i in range(n):
            for k in range(n):
                if conj_sig(basis[i] * basis[k]) != s1(basis[i]) * s2(basis[k]):
                    raise CertificationFailure("sandwich product law fails",
                                               witness=(j + 1, i, k))
    for j in range(1, 4):
        m = sig[j - 1].rows
        left_form = (conj_alg.left_op(conj_alg.element([c for c in u.comp(j + 1).coords]))
                     @ conj_alg.left_op(conj_alg.element([c for c in u.comp(j).coords])))
        abar_j = astar.involute(u.comp(j))
        abar_j1 = astar.involute(u.comp(j + 1))
        right_form = (conj_alg.right_op(conj_alg.element(abar_j.coords))
                      @ conj_alg.right_op(conj_alg.element(abar_j1.coords)))
        if not linalg.mat_eq(m, left_form.rows) or not linalg.mat_eq(m, right_form.rows):
            raise CertificationFailure("operator factorizations disagree", witness=(j,))
    return verify_triality(conj_alg, *[_rebind(conj_alg, m) for m in sig])


def assoc_local_triple(astar: Algebra, p: SkewTriple) -> LocalTriple:
    """d_j x = p_j * x - x * p_{j+1} for skew p_j, certified as a local
    triple of the conjugate algebra; the involution conjugate of d_j is the
    swapped difference and satisfies the derivation-style law for *."""
    check_associative(astar)
    conj_alg = make_conjugate(astar)
    jmap = astar.involution_map()
    ds = [astar.left_op(p.comp(j)) - astar.right_op(p.comp(j + 1)) for j in range(1, 4)]
    basis = astar.basis_elements()
    n = astar.dim
    for j in range(1, 4):
        conj_d = jmap @ ds[j - 1] @ jmap
        if conj_d != astar.left_op(p.comp(j + 1)) - astar.right_op(p.comp(j)):
            raise CertificationFailure("involution conjugate of d is wrong", witness=(j,))
        d1, d2 = ds[j % 3], ds[(j + 1) % 3]
        for i in range(n):
            for k in range(n):
                if conj_d(basis[i] * basis[k]) != d1(basis[i]) * basis[k] \
                        + basis[i] * d2(basis[k]):
                    raise CertificationFailure("star-product local law fails",
                                               witness=(j, i, k))
    return verify_local(conj_alg, *[_rebind(conj_alg, m) for m in ds])


def cayley_transform(astar: Algebra, p: Element) -> Element:
    """a = (e - p) * (e + p)^{-1} for skew p; the result is unitary."""
    if astar.involution is None or astar.unit is None:
        raise AlgebraError("a unital involutive algebra is required")
    if astar.involute(p) != -p:
        raise NotSkew("the argument is not skew")
    e = astar.unit_element()
    lop = astar.left_op(e + p)
    inv_coords = linalg.solve(lop.rows, e.coords, astar.field.zero(), astar.field.one())
    if inv_coords is None:
        raise linalg.NotInvertible("e + p is not invertible")
    inv = astar.element(inv_coords)
    if (e + p) * inv != e or inv * (e + p) != e:
        raise linalg.NotInvertible("e + p has no two-sided inverse")
    a = (e - p) * inv
    if astar.involute(a) * a != e or a * astar.involute(a) != e:
        raise CertificationFailure("Cayley transform is not unitary")
    return a
