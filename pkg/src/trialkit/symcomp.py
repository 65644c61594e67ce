"""Product triples on symmetric composition algebras and what they generate.

A symmetric composition algebra satisfies (xy)x = x(yx) = <x|x>y for a
nondegenerate symmetric form.  A product triple (a1, a2, a3) of norm-one
elements with a_j a_{j+1} = a_{j+2} yields two operator triality triples
(sigma and theta, built from right and left multiplications); transport
vectors p orthogonal to the triple yield local triality triples D_j(a, p).
The module also enumerates the full triality group in dimensions 1 and 2
over a prime field, and the automorphism group in dimension 2.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field as dc_field
from typing import List, Optional, Sequence, Tuple

from . import linalg
from .algebra import Algebra, AlgebraError, Element, LinearMap
from .constructors import make_para_dim2
from .dual import Dual, dual_one, dual_zero
from .fields import FieldDescriptor, FieldElement, sqrt_in_field
from .triality import (
    LocalTriple,
    RelationFails,
    TrialityTriple,
    derivation_pair,
    klein_triples,
    trig_inv,
    trig_mul,
    verify_local,
    verify_triality,
)


class NormNotOne(AlgebraError):
    pass


class CertificationFailure(AlgebraError):
    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class PreconditionUnmet(AlgebraError):
    pass


class FieldNotFinite(AlgebraError):
    pass


# ---------------------------------------------------------------------------
# Defining identities
# ---------------------------------------------------------------------------

@dataclass
class Certificate:
    """Outcome of a batch of identity checks; ok iff every record passed."""

    records: List[Tuple[str, bool, Optional[tuple]]] = dc_field(default_factory=list)

    def add(self, clause: str, ok: bool, witness: Optional[tuple] = None) -> None:
        self.records.append((clause, ok, None if ok else witness))

    @property
    def ok(self) -> bool:
        return all(ok for _, ok, _ in self.records)

    @property
    def witness(self) -> Optional[tuple]:
        for clause, ok, w in self.records:
            if not ok:
                return (clause, w)
        return None


def is_symmetric_composition(a: Algebra) -> Certificate:
    """Certify (xy)x = x(yx) = <x|x>y together with its consequences:
    the composition law <xy|xy> = <x|x><y|y>, form associativity
    <xy|z> = <x|yz>, the linearized law, and (xy)(yz) = 2<x|yz>y - <y|y>zx.

    Checks run over basis tuples, which is complete by multilinearity
    (quadratic occurrences are covered by the polarized variants).
    """
    cert = Certificate()
    n = a.dim
    basis = a.basis_elements()

    def norm(x: Element) -> FieldElement:
        return a.form_eval(x, x)

    ok, wit = True, None
    for i in range(n):
        x = basis[i]
        nx = norm(x)
        for j in range(n):
            y = basis[j]
            if (x * y) * x != nx * y or x * (y * x) != nx * y:
                ok, wit = False, (i, j)
                break
        if not ok:
            break
    cert.add("two-sided-norm-law", ok, wit)

    ok, wit = True, None
    for i in range(n):
        for j in range(n):
            p = basis[i] * basis[j]
            if a.form_eval(p, p) != norm(basis[i]) * norm(basis[j]):
                ok, wit = False, (i, j)
                break
        if not ok:
            break
    cert.add("composition-law", ok, wit)

    # polarized composition law <xy|zw> + <zy|xw> = 2<x|z><y|w>
    two = a.field.from_int(2)
    prods = [[basis[i] * basis[j] for j in range(n)] for i in range(n)]
    ok, wit = True, None
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for l in range(n):
                    lhs = a.form_eval(prods[i][j], prods[k][l]) + a.form_eval(
                        prods[k][j], prods[i][l]
                    )
                    rhs = two * a.form_eval(basis[i], basis[k]) * a.form_eval(basis[j], basis[l])
                    if lhs != rhs:
                        ok, wit = False, (i, j, k, l)
                        break
                if not ok:
                    break
            if not ok:
                break
        if not ok:
            break
    cert.add("polarized-composition-law", ok, wit)

    ok, wit = True, None
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if a.form_eval(prods[i][j], basis[k]) != a.form_eval(basis[i], prods[j][k]):
                    ok, wit = False, (i, j, k)
                    break
            if not ok:
                break
        if not ok:
            break
    cert.add("form-associativity", ok, wit)

    ok, wit = True, None
    for i in range(n):
        for j in range(n):
            for k in range(n):
                x, y, z = basis[i], basis[j], basis[k]
                rhs = two * a.form_eval(x, z) * y
                if (x * y) * z + (z * y) * x != rhs or x * (y * z) + z * (y * x) != rhs:
                    ok, wit = False, (i, j, k)
                    break
            if not ok:
                break
        if not ok:
            break
    cert.add("linearized-norm-law", ok, wit)

    # (xy)(yz) = 2<x|yz>y - <y|y>zx, quadratic in y so sums of basis pairs
    # are also exercised
    ys = list(basis)
    for i in range(n):
        for j in range(i + 1, n):
            ys.append(basis[i] + basis[j])
    ok, wit = True, None
    for i in range(n):
        for y in ys:
            for k in range(n):
                x, z = basis[i], basis[k]
                lhs = (x * y) * (y * z)
                rhs = two * a.form_eval(x, y * z) * y - norm(y) * (z * x)
                if lhs != rhs:
                    ok, wit = False, (i, k)
                    break
            if not ok:
                break
        if not ok:
            break
    cert.add("product-exchange-law", ok, wit)
    return cert


# ---------------------------------------------------------------------------
# Product triples
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SigmaTriple:
    """Norm-one elements with a_j a_{j+1} = a_{j+2} for all j (indices mod 3)."""

    algebra: Algebra
    elems: Tuple[Element, Element, Element]

    def comp(self, j: int) -> Element:
        return self.elems[(j - 1) % 3]

    def __iter__(self):
        return iter(self.elems)


def certify_sigma(a: Algebra, a1: Element, a2: Element, a3: Element) -> SigmaTriple:
    elems = (a1, a2, a3)
    one = a.field.one()
    for j, x in enumerate(elems):
        if a.form_eval(x, x) != one:
            raise NormNotOne(f"component {j + 1} does not have norm one")
    for j in range(3):
        if elems[j] * elems[(j + 1) % 3] != elems[(j + 2) % 3]:
            raise CertificationFailure(
                f"a{j + 1} a{(j + 1) % 3 + 1} != a{(j + 2) % 3 + 1}", witness=(j + 1,)
            )
    return SigmaTriple(a, elems)


def sigma_from_pair(a: Algebra, x: Element, y: Element) -> SigmaTriple:
    """Build (x, y, xy); on a symmetric composition algebra the remaining
    product relations follow from the two-sided norm law."""
    one = a.field.one()
    if a.form_eval(x, x) != one or a.form_eval(y, y) != one:
        raise NormNotOne("both elements must have norm one")
    return certify_sigma(a, x, y, x * y)


def sigma_maps(a: SigmaTriple) -> List[LinearMap]:
    """sigma_j = R(a_{j+1}) R(a_{j+2})."""
    alg = a.algebra
    return [alg.right_op(a.comp(j + 1)) @ alg.right_op(a.comp(j + 2)) for j in range(1, 4)]


def theta_maps(a: SigmaTriple) -> List[LinearMap]:
    """theta_j = L(a_{j+2}) L(a_{j+1})."""
    alg = a.algebra
    return [alg.left_op(a.comp(j + 2)) @ alg.left_op(a.comp(j + 1)) for j in range(1, 4)]


def sigma_theta_triples(a: SigmaTriple) -> Tuple[TrialityTriple, TrialityTriple]:
    """Certify the sigma and theta operator triples of a product triple.

    Verified properties: both are triality triples; sigma_j theta_j =
    theta_j sigma_j = Id; theta_j theta_{j+1} theta_{j+2} = Id and
    sigma_{j+2} sigma_{j+1} sigma_j = Id; <sigma_j x|y> = <x|theta_j y>;
    both are isometries; and the closed forms
    sigma_j x = 2<a_{j+1}|x>a_{j+2} - a_j x,
    theta_j x = 2<a_{j+2}|x>a_{j+1} - x a_j.
    """
    alg = a.algebra
    sig = sigma_maps(a)
    the = theta_maps(a)
    sigma = verify_triality(alg, *sig)
    theta = verify_triality(alg, *the)
    n = alg.dim
    basis = alg.basis_elements()
    two = alg.field.from_int(2)
    for j in range(1, 4):
        sj, tj = sigma.comp(j), theta.comp(j)
        if not (sj @ tj).is_identity() or not (tj @ sj).is_identity():
            raise RelationFails(f"sigma_{j} theta_{j} != Id", witness=(j,))
    for j in range(1, 4):
        if not (theta.comp(j) @ theta.comp(j + 1) @ theta.comp(j + 2)).is_identity():
            raise RelationFails(f"theta product at j={j} is not Id", witness=(j,))
        if not (sigma.comp(j + 2) @ sigma.comp(j + 1) @ sigma.comp(j)).is_identity():
            raise RelationFails(f"sigma product at j={j} is not Id", witness=(j,))
    for j in range(1, 4):
        sj, tj = sigma.comp(j), theta.comp(j)
        for i in range(n):
            for k in range(n):
                x, y = basis[i], basis[k]
                if alg.form_eval(sj(x), y) != alg.form_eval(x, tj(y)):
                    raise RelationFails("sigma/theta adjointness fails", witness=(j, i, k))
                if alg.form_eval(sj(x), sj(y)) != alg.form_eval(x, y):
                    raise RelationFails("sigma is not an isometry", witness=(j, i, k))
                if alg.form_eval(tj(x), tj(y)) != alg.form_eval(x, y):
                    raise RelationFails("theta is not an isometry", witness=(j, i, k))
    for j in range(1, 4):
        aj, aj1, aj2 = a.comp(j), a.comp(j + 1), a.comp(j + 2)
        for i in range(n):
            x = basis[i]
            if sigma.comp(j)(x) != two * alg.form_eval(aj1, x) * aj2 - aj * x:
                raise RelationFails("sigma closed form fails", witness=(j, i))
            if theta.comp(j)(x) != two * alg.form_eval(aj2, x) * aj1 - x * aj:
                raise RelationFails("theta closed form fails", witness=(j, i))
    return sigma, theta


def _cycled(g: TrialityTriple, shift: int) -> Tuple[LinearMap, LinearMap, LinearMap]:
    return tuple(g.maps[(i + shift) % 3] for i in range(3))


def act_on_sigma(g: TrialityTriple, a: SigmaTriple, shift: int = 0) -> SigmaTriple:
    """Apply a triality triple componentwise to a product triple, with an
    optional cyclic shift of the triple's components first; re-certified."""
    maps = _cycled(g, shift)
    return certify_sigma(a.algebra, *(m(x) for m, x in zip(maps, a.elems)))


def conjugation_law(g: TrialityTriple, a: SigmaTriple) -> SigmaTriple:
    """Verify how triality triples move product triples and their operators:

    - ga = (g1 a1, g2 a2, g3 a3) is again a product triple (returned);
    - g_j theta_j(a) g_{j+1}^{-1} = theta_j(b) where b_m = g_{m-1} a_m;
    - g_j sigma_j(a) g_{j+2}^{-1} = sigma_j(c) where c_m = g_{m+1} a_m.
    """
    ga = act_on_sigma(g, a)
    b = act_on_sigma(g, a, shift=-1)
    c = act_on_sigma(g, a, shift=1)
    theta_a, theta_b = theta_maps(a), theta_maps(b)
    sigma_a, sigma_c = sigma_maps(a), sigma_maps(c)
    for j in range(1, 4):
        lhs = g.comp(j) @ theta_a[j - 1] @ g.comp(j + 1).inverse()
        if lhs != theta_b[j - 1]:
            raise RelationFails("theta conjugation fails", witness=(j,))
        lhs = g.comp(j) @ sigma_a[j - 1] @ g.comp(j + 2).inverse()
        if lhs != sigma_c[j - 1]:
            raise RelationFails("sigma conjugation fails", witness=(j,))
    return ga


def normal_subgroup_generators(a: SigmaTriple, b: SigmaTriple,
                               c: SigmaTriple) -> List[TrialityTriple]:
    """Componentwise products sigma(a)theta(b), theta(a)sigma(b),
    sigma(a)sigma(b)sigma(c), theta(a)theta(b)theta(c), each certified.
    Conjugating any of them by a triality triple lands back in this family,
    so the subgroup they generate is normal."""
    alg = a.algebra
    sa, ta = sigma_maps(a), theta_maps(a)
    sb, tb = sigma_maps(b), theta_maps(b)
    sc, tc = sigma_maps(c), theta_maps(c)
    out = [
        verify_triality(alg, *(x @ y for x, y in zip(sa, tb))),
        verify_triality(alg, *(x @ y for x, y in zip(ta, sb))),
        verify_triality(alg, *(x @ y @ z for x, y, z in zip(sa, sb, sc))),
        verify_triality(alg, *(x @ y @ z for x, y, z in zip(ta, tb, tc))),
    ]
    return out


# ---------------------------------------------------------------------------
# Transport vectors and the local triples they induce
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LambdaVector:
    """Vectors p_j with a_j p_{j+1} + p_j a_{j+1} = p_{j+2} and <p_j|a_j> = 0,
    stored together with the companions q_j = a_{j+1} p_{j+2}."""

    base: SigmaTriple
    ps: Tuple[Element, Element, Element]
    qs: Tuple[Element, Element, Element]

    def p_comp(self, j: int) -> Element:
        return self.ps[(j - 1) % 3]

    def q_comp(self, j: int) -> Element:
        return self.qs[(j - 1) % 3]


def lambda_vector(a: SigmaTriple, p1: Element, p2: Element,
                  p3: Optional[Element] = None) -> LambdaVector:
    """Certify (p1, p2, p3) as a transport vector of a, deriving
    p3 = a1 p2 + p1 a2 when not supplied, and verify the q-companion
    identities (recursion, inversion, orthogonality)."""
    alg = a.algebra
    if p3 is None:
        p3 = a.comp(1) * p2 + p1 * a.comp(2)
    ps = (p1, p2, p3)

    def p(j: int) -> Element:
        return ps[(j - 1) % 3]

    zero = alg.field.zero()
    for j in range(1, 4):
        if a.comp(j) * p(j + 1) + p(j) * a.comp(j + 1) != p(j + 2):
            raise CertificationFailure("p recursion fails", witness=("p", j))
        if alg.form_eval(p(j), a.comp(j)) != zero:
            raise CertificationFailure("p is not orthogonal to a", witness=("p-orth", j))
    qs = tuple(a.comp(j + 1) * p(j + 2) for j in range(1, 4))

    def q(j: int) -> Element:
        return qs[(j - 1) % 3]

    for j in range(1, 4):
        if q(j) != p(j) - p(j + 1) * a.comp(j + 2):
            raise CertificationFailure("q has two inconsistent expressions",
                                       witness=("q", j))
        if alg.form_eval(q(j), a.comp(j)) != zero:
            raise CertificationFailure("q is not orthogonal to a", witness=("q-orth", j))
        if p(j) != q(j + 1) * a.comp(j + 2):
            raise CertificationFailure("p recovery from q fails", witness=("pq", j))
        if p(j) != q(j) - a.comp(j + 1) * q(j + 2):
            raise CertificationFailure("p recovery from q fails", witness=("pq2", j))
        if a.comp(j) * q(j + 1) + q(j) * a.comp(j + 1) != q(j + 2):
            raise CertificationFailure("q recursion fails", witness=("qrec", j))
    return LambdaVector(a, ps, qs)


def lambda_space(a: SigmaTriple) -> List[LambdaVector]:
    """Basis of the space of transport vectors: all (p1, p2) with
    <p1|a1> = <p2|a2> = 0, each packaged and re-certified."""
    alg = a.algebra
    n = alg.dim
    zero = alg.field.zero()
    row1 = [alg.form_eval(alg.basis(i), a.comp(1)) for i in range(n)] + [zero] * n
    row2 = [zero] * n + [alg.form_eval(alg.basis(i), a.comp(2)) for i in range(n)]
    out = []
    for v in linalg.nullspace([row1, row2], zero, alg.field.one()):
        p1 = alg.element(v[:n])
        p2 = alg.element(v[n:])
        out.append(lambda_vector(a, p1, p2))
    return out


def _outer(alg: Algebra, u: Element, w: Element) -> LinearMap:
    """Map x -> <w|x> u as a matrix."""
    wdual = [alg.form_eval(alg.basis(l), w) for l in range(alg.dim)]
    return LinearMap(alg, [[u.coords[k] * wdual[l] for l in range(alg.dim)]
                           for k in range(alg.dim)])


def local_D(a: SigmaTriple, p: LambdaVector) -> LocalTriple:
    """Local triple D_j x = (p_{j+1} x) a_{j+1} + a_j (x q_j), certified
    against the local triality law; the two alternative closed forms must
    produce the identical matrices."""
    alg = a.algebra
    two = alg.field.from_int(2)
    mats = []
    for j in range(1, 4):
        dj = (alg.right_op(a.comp(j + 1)) @ alg.left_op(p.p_comp(j + 1))
              + alg.left_op(a.comp(j)) @ alg.right_op(p.q_comp(j)))
        alt1 = (two * _outer(alg, a.comp(j + 2), p.q_comp(j + 2))
                - two * _outer(alg, p.q_comp(j + 2), a.comp(j + 2))
                + alg.left_op(a.comp(j)) @ alg.right_op(p.p_comp(j)))
        alt2 = (two * _outer(alg, a.comp(j + 2), p.p_comp(j + 2))
                - two * _outer(alg, p.p_comp(j + 2), a.comp(j + 2))
                + alg.right_op(a.comp(j + 1)) @ alg.left_op(p.q_comp(j + 1)))
        if dj != alt1 or dj != alt2:
            raise CertificationFailure("alternative forms of D disagree", witness=(j,))
        mats.append(dj)
    try:
        return verify_local(alg, *mats)
    except RelationFails as exc:
        raise CertificationFailure(str(exc), witness=exc.witness) from exc


def cycle_shift(p: LambdaVector) -> LambdaVector:
    """Relabel (a_j, p_j, q_j) -> (a_{j+1}, p_{j+1}, q_{j+1}); the induced
    local triple components shift by one place: D_j(new) = D_{j+1}(old)."""
    a = p.base
    new_base = certify_sigma(a.algebra, a.comp(2), a.comp(3), a.comp(1))
    return lambda_vector(new_base, p.p_comp(2), p.p_comp(3), p.p_comp(1))


def first_order_factorization(p: LambdaVector) -> None:
    """Exact dual-number form of the infinitesimal statement: over F[eps]
    with eps^2 = 0, sigma_j(a) theta_j(a + eps p) = Id + eps D_j(a, p)."""
    a = p.base
    alg = a.algebra
    n = alg.dim
    fdesc = alg.field
    d = local_D(a, p)

    def dual_left(coords: List[Dual]) -> List[List[Dual]]:
        return [
            [
                sum(
                    (coords[r] * Dual.lift(alg.structure[r][s][k]) for r in range(n)),
                    dual_zero(fdesc),
                )
                for s in range(n)
            ]
            for k in range(n)
        ]

    for j in range(1, 4):
        sig = [[Dual.lift(v) for v in row] for row in sigma_maps(a)[j - 1].rows]
        bj1 = [Dual(a.comp(j + 1).coords[i], p.p_comp(j + 1).coords[i]) for i in range(n)]
        bj2 = [Dual(a.comp(j + 2).coords[i], p.p_comp(j + 2).coords[i]) for i in range(n)]
        theta_b = linalg.mat_mul(dual_left(bj2), dual_left(bj1))
        prod = linalg.mat_mul(sig, theta_b)
        for k in range(n):
            for l in range(n):
                want = Dual(fdesc.one() if k == l else fdesc.zero(), d.comp(j).rows[k][l])
                if prod[k][l] != want:
                    raise RelationFails("first-order factorization fails",
                                        witness=(j, k, l))


def express_D_as_d(p: LambdaVector, alpha: FieldElement, beta: FieldElement) -> None:
    """When p3 = 0, the local triple D(a, p) equals the two-element local
    triple d(u, v) with u = (p2 + alpha a2) / (2 beta), v = beta a2; the
    equality is independent of the choice of alpha and beta."""
    if not p.p_comp(3).is_zero():
        raise PreconditionUnmet("the third transport component must vanish")
    if beta.is_zero():
        raise PreconditionUnmet("beta must be invertible")
    a = p.base
    alg = a.algebra
    u = (p.p_comp(2) + alpha * a.comp(2)) / (alg.field.from_int(2) * beta)
    v = beta * a.comp(2)
    d = derivation_pair(alg, u, v, "symmetric_composition")
    big = local_D(a, p)
    for j in range(1, 4):
        if big.comp(j) != d.comp(j):
            raise RelationFails("D does not match d(u, v)", witness=(j,))


@dataclass
class CubicReport:
    delta: FieldElement
    cubic: Tuple[bool, bool, bool]          # d_j^3 = delta d_j
    square: Tuple[bool, bool]               # d_j^2 = delta Id, j = 1, 2
    scaled_third_cubic: bool                # d_3^3 = 4 delta d_3

    @property
    def ok(self) -> bool:
        return all(self.cubic) and all(self.square)


def cubic_identity(a: Algebra, x: Element, y: Element) -> CubicReport:
    """Report which power identities the derivation triple of (x, y)
    satisfies, with delta = 4(<x|y>^2 - <x|x><y|y>).

    The first two components always satisfy d^2 = delta Id, hence the cubic.
    The third component instead satisfies d^3 = 4 delta d: it kills the
    orthogonal complement of span(x, y) and squares to 4 delta there.
    """
    four = a.field.from_int(4)
    delta = four * (a.form_eval(x, y) * a.form_eval(x, y)
                    - a.form_eval(x, x) * a.form_eval(y, y))
    pair = derivation_pair(a, x, y, "symmetric_composition")
    ident = a.identity_map()
    cubic = tuple(
        (pair.comp(j) @ pair.comp(j) @ pair.comp(j)) == delta * pair.comp(j)
        for j in range(1, 4)
    )
    square = tuple((pair.comp(j) @ pair.comp(j)) == delta * ident for j in (1, 2))
    d3 = pair.comp(3)
    scaled = (d3 @ d3 @ d3) == (four * delta) * d3
    return CubicReport(delta=delta, cubic=cubic, square=square, scaled_third_cubic=scaled)


# ---------------------------------------------------------------------------
# Small-dimension enumeration
# ---------------------------------------------------------------------------

@dataclass
class TrigGroup:
    algebra: Algebra
    elements: List[TrialityTriple]
    order: int
    table_hash: str


def _triple_key(g: TrialityTriple) -> tuple:
    return tuple(tuple(str(v) for v in row) for m in g.maps for row in m.rows)


def _group_hash(elements: List[TrialityTriple]) -> str:
    keys = sorted(range(len(elements)), key=lambda i: _triple_key(elements[i]))
    index = {_triple_key(elements[i]): pos for pos, i in enumerate(keys)}
    lines = []
    for pos, i in enumerate(keys):
        for qos, j in enumerate(keys):
            prod = trig_mul(elements[i], elements[j])
            lines.append(f"{pos},{qos},{index[_triple_key(prod)]}")
    return hashlib.sha256("\n".join(lines).encode()).hexdigest()


def enumerate_trig_small(a: Algebra, p_cap: int = 31) -> TrigGroup:
    """Full triality group of a dimension-1 or dimension-2 symmetric
    composition algebra over a prime field.

    Dimension 1 always gives the Klein four-group of sign triples.
    Dimension 2: each component is determined by a point (mu, nu) on the
    circle mu^2 + nu^2 = 1 via g_j(f) = q_j = mu e + nu f, with the single
    compatibility constraint <q_3|q_1 q_2> = 0 and g_j(e) = -q_{j+1} q_{j+2}.
    Every member is certified, checked to be an isometry, and the group is
    checked for closure, inverses, and the Klein subgroup.
    """
    if a.field.kind != "Fp":
        raise FieldNotFinite("enumeration requires a prime field")
    if a.field.p > p_cap:
        raise ValueError(f"prime exceeds the enumeration cap {p_cap}")
    if a.dim == 1:
        elements = klein_triples(a)
        return TrigGroup(a, elements, len(elements), _group_hash(elements))
    if a.dim != 2:
        raise ValueError("enumeration covers dimensions 1 and 2 only")

    fdesc = a.field
    circle = []
    for mu_i in range(fdesc.p):
        for nu_i in range(fdesc.p):
            mu, nu = fdesc.from_int(mu_i), fdesc.from_int(nu_i)
            if mu * mu + nu * nu == fdesc.one():
                circle.append(a.element([mu, nu]))
    elements = []
    for q1 in circle:
        for q2 in circle:
            w = q1 * q2
            for q3 in circle:
                if not a.form_eval(q3, w).is_zero():
                    continue
                qs = (q1, q2, q3)
                ps = tuple(-(qs[(j + 1) % 3] * qs[(j + 2) % 3]) for j in range(3))
                maps = [
                    LinearMap(a, [[ps[j].coords[0], qs[j].coords[0]],
                                  [ps[j].coords[1], qs[j].coords[1]]])
                    for j in range(3)
                ]
                elements.append(verify_triality(a, *maps))
    # polynomial identity on the e-components of the members
    e = a.basis(0)
    two = fdesc.from_int(2)
    for g in elements:
        alphas = [a.form_eval(e, g.comp(j)(e)) for j in range(1, 4)]
        val = (two * alphas[0] * alphas[1] * alphas[2]
               - (alphas[0] ** 2 + alphas[1] ** 2 + alphas[2] ** 2)
               + fdesc.one())
        if not val.is_zero():
            raise RelationFails("member violates the alpha identity")
    basis = a.basis_elements()
    for g in elements:
        for j in range(1, 4):
            for x in basis:
                for y in basis:
                    if a.form_eval(g.comp(j)(x), g.comp(j)(y)) != a.form_eval(x, y):
                        raise RelationFails("member is not an isometry")
    seen = {_triple_key(g) for g in elements}
    for g in elements:
        if _triple_key(trig_inv(g)) not in seen:
            raise RelationFails("group is not closed under inverses")
    for g in elements:
        for h in elements:
            if _triple_key(trig_mul(g, h)) not in seen:
                raise RelationFails("group is not closed under products")
    for k in klein_triples(a):
        if _triple_key(k) not in seen:
            raise RelationFails("Klein subgroup is missing")
    return TrigGroup(a, elements, len(elements), _group_hash(elements))


def dim2_local(a: Algebra, lambdas: Sequence[FieldElement]) -> LocalTriple:
    """Local triple t_j e = lambda_j f, t_j f = -lambda_j e on a
    two-dimensional algebra; valid exactly when the lambdas sum to zero."""
    if a.dim != 2:
        raise ValueError("this shape of local triple needs dimension 2")
    mats = [LinearMap(a, [[a.field.zero(), -lam], [lam, a.field.zero()]])
            for lam in lambdas]
    return verify_local(a, *mats)


@dataclass
class AutoGroup:
    algebra: Algebra
    elements: List[LinearMap]
    order: int


def _certify_automorphism(a: Algebra, g: LinearMap) -> None:
    g.inverse()
    n = a.dim
    cols = [Element(a, [row[i] for row in g.rows]) for i in range(n)]
    for i in range(n):
        for k in range(n):
            if g(Element(a, a.product_vector(i, k))) != cols[i] * cols[k]:
                raise RelationFails("map is not an automorphism", witness=(i, k))


def auto_dim2(field: FieldDescriptor) -> AutoGroup:
    """Automorphism group of the two-dimensional symmetric composition
    algebra: order 2 generated by f -> -f, extended to the symmetric group
    of order 6 exactly when the field contains sqrt(3)."""
    if field.characteristic == 2:
        raise ValueError("characteristic two is out of scope")
    a = make_para_dim2(field)
    one, zero = field.one(), field.zero()
    p = LinearMap(a, [[one, zero], [zero, -one]])
    elements = [a.identity_map(), p]
    root = sqrt_in_field(field.from_int(3))
    if root is not None:
        half = field.from_int(2).inverse()
        q = LinearMap(a, [[-half, -half * root], [half * root, -half]])
        if not (q @ q @ q).is_identity() or not (q @ p @ q) == p:
            raise RelationFails("generator relations fail")
        elements = [a.identity_map(), q, q @ q, p, p @ q, p @ q @ q]
    if not (p @ p).is_identity():
        raise RelationFails("generator relations fail")
    for g in elements:
        _certify_automorphism(a, g)
    return AutoGroup(a, elements, len(elements))
