"""Global and local triality machinery.

A global triple (g1, g2, g3) of invertible maps satisfies
g_j(xy) = (g_{j+1}x)(g_{j+2}y) for all j (indices mod 3); the set of such
triples forms the group Trig(A).  A local triple (t1, t2, t3) satisfies the
derivation-style law t_j(xy) = (t_{j+1}x)y + x(t_{j+2}y).  All verifications
run over every basis pair, which proves the law by bilinearity.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, List, Optional, Sequence, Tuple, Union

from . import linalg
from .algebra import Algebra, AlgebraError, Element, LinearMap, \
    symmetric_composition_quick
from .fields import FieldElement, FieldNotEmbeddable


class RelationFails(AlgebraError):
    """An identity failed; carries a human-readable witness."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class TripleBase:
    """Three linear maps on one algebra, indexed 1-based modulo 3."""

    def __init__(self, algebra: Algebra, maps: Sequence[LinearMap]):
        if len(maps) != 3:
            raise ValueError("a triple needs exactly three maps")
        self.algebra = algebra
        self.maps = tuple(maps)

    def comp(self, j: int) -> LinearMap:
        return self.maps[(j - 1) % 3]

    def __iter__(self):
        return iter(self.maps)

    def __eq__(self, other) -> bool:
        return isinstance(other, TripleBase) and self.maps == other.maps

    def __hash__(self) -> int:
        return hash(self.maps)


class TrialityTriple(TripleBase):
    pass


class LocalTriple(TripleBase):
    pass


def _product_element(a: Algebra, i: int, j: int) -> Element:
    return Element(a, a.product_vector(i, j))


def _column(m: LinearMap, i: int) -> Element:
    return Element(m.algebra, [row[i] for row in m.rows])


def verify_triality(a: Algebra, g1: LinearMap, g2: LinearMap, g3: LinearMap) -> TrialityTriple:
    """Certify g_j(xy) = (g_{j+1}x)(g_{j+2}y) on all basis pairs for all j."""
    maps = (g1, g2, g3)
    for g in maps:
        g.inverse()  # raises NotInvertible on singular input
    n = a.dim
    for j in range(3):
        gj, gj1, gj2 = maps[j], maps[(j + 1) % 3], maps[(j + 2) % 3]
        cols1 = [_column(gj1, i) for i in range(n)]
        cols2 = [_column(gj2, i) for i in range(n)]
        for i in range(n):
            for k in range(n):
                lhs = gj(_product_element(a, i, k))
                rhs = cols1[i] * cols2[k]
                if lhs != rhs:
                    raise RelationFails(
                        f"g{j + 1}(e{i} e{k}) != (g{j + 2 if j < 2 else 1}...)",
                        witness=(j + 1, i, k),
                    )
    return TrialityTriple(a, maps)


def scaled_identity_triple(a: Algebra, s1: int, s2: int, s3: int) -> TrialityTriple:
    """Sign triple (s1 Id, s2 Id, s3 Id); valid in Trig iff s1 = s2 s3 etc."""
    if s1 * s2 * s3 != 1 or any(s not in (1, -1) for s in (s1, s2, s3)):
        raise ValueError("signs must be +-1 with product 1")
    ident = a.identity_map()
    return TrialityTriple(a, (s1 * ident, s2 * ident, s3 * ident))


def klein_triples(a: Algebra) -> List[TrialityTriple]:
    """The Klein four-group of sign triples inside Trig(A)."""
    return [
        scaled_identity_triple(a, 1, 1, 1),
        scaled_identity_triple(a, 1, -1, -1),
        scaled_identity_triple(a, -1, 1, -1),
        scaled_identity_triple(a, -1, -1, 1),
    ]


def trig_mul(g: TrialityTriple, h: TrialityTriple) -> TrialityTriple:
    return TrialityTriple(g.algebra, tuple(gm @ hm for gm, hm in zip(g.maps, h.maps)))


def trig_inv(g: TrialityTriple) -> TrialityTriple:
    return TrialityTriple(g.algebra, tuple(m.inverse() for m in g.maps))


_S4_GENERATORS = ("phi", "phi_inv", "tau1", "tau2", "tau3", "theta")


def s4_act(word: Sequence[str], g: TrialityTriple) -> TrialityTriple:
    """Apply a word of outer symmetries to a triple, leftmost letter first.

    phi cycles components, tau_mu flips the signs of the two components other
    than mu, and theta swaps the first two components and conjugates all three
    by the involution.  With this application order the standard word
    identities hold: phi tau_mu phi_inv = tau_{mu+1} and theta tau1 theta = tau2.
    """
    a = g.algebra
    maps = list(g.maps)
    for letter in word:
        if letter == "phi":
            maps = [maps[1], maps[2], maps[0]]
        elif letter in ("phi_inv", "phi2"):
            maps = [maps[2], maps[0], maps[1]]
        elif letter in ("tau1", "tau2", "tau3"):
            mu = int(letter[-1]) - 1
            maps = [m if i == mu else -m for i, m in enumerate(maps)]
        elif letter in ("theta", "theta_inv"):
            j = a.involution_map()
            maps = [j @ maps[1] @ j, j @ maps[0] @ j, j @ maps[2] @ j]
        else:
            raise ValueError(f"unknown generator: {letter}")
    return TrialityTriple(a, tuple(maps))


def verify_local(a: Algebra, t1: LinearMap, t2: LinearMap, t3: LinearMap) -> LocalTriple:
    """Certify t_j(xy) = (t_{j+1}x)y + x(t_{j+2}y) on all basis pairs; on a
    symmetric composition algebra each component must also be skew for the form."""
    maps = (t1, t2, t3)
    n = a.dim
    for j in range(3):
        tj, tj1, tj2 = maps[j], maps[(j + 1) % 3], maps[(j + 2) % 3]
        cols1 = [_column(tj1, i) for i in range(n)]
        cols2 = [_column(tj2, i) for i in range(n)]
        basis = a.basis_elements()
        for i in range(n):
            for k in range(n):
                lhs = tj(_product_element(a, i, k))
                rhs = cols1[i] * basis[k] + basis[i] * cols2[k]
                if lhs != rhs:
                    raise RelationFails(
                        f"local law fails at j={j + 1}, basis pair ({i},{k})",
                        witness=(j + 1, i, k),
                    )
    if a.form is not None and symmetric_composition_quick(a):
        for j, t in enumerate(maps):
            for i in range(n):
                for k in range(i, n):
                    x, y = a.basis(i), a.basis(k)
                    if a.form_eval(t(x), y) != -a.form_eval(x, t(y)):
                        raise RelationFails(
                            f"component {j + 1} is not skew for the form",
                            witness=(j + 1, i, k),
                        )
    return LocalTriple(a, maps)


def alpha_shift(t: LocalTriple, alphas: Sequence[FieldElement]) -> LocalTriple:
    """New local triple t'_j = sum_k alpha_{j-k} t_k (alpha indices mod 3)."""
    if len(alphas) != 3:
        raise ValueError("three shift coefficients required")

    def alpha(m: int) -> FieldElement:
        return alphas[(m - 1) % 3]

    a = t.algebra
    new = []
    for j in range(1, 4):
        acc = alpha(j - 1) * t.comp(1)
        for k in range(2, 4):
            acc = acc + alpha(j - k) * t.comp(k)
        new.append(acc)
    return verify_local(a, *new)


def commutator_closure(t: LocalTriple, u: LocalTriple) -> LocalTriple:
    """Componentwise commutator of two local triples, recertified."""
    a = t.algebra
    maps = [tm.commutator(um) for tm, um in zip(t.maps, u.maps)]
    return verify_local(a, *maps)


@dataclass
class DerivationPair:
    algebra: Algebra
    x: Element
    y: Element
    d1: LinearMap
    d2: LinearMap
    d3: LinearMap

    def comp(self, j: int) -> LinearMap:
        return (self.d1, self.d2, self.d3)[(j - 1) % 3]

    def maps(self) -> Tuple[LinearMap, LinearMap, LinearMap]:
        return (self.d1, self.d2, self.d3)


D3Rule = Union[str, Callable[[Algebra, Element, Element], LinearMap]]


def _d3_matrix(a: Algebra, x: Element, y: Element, rule: D3Rule) -> LinearMap:
    if callable(rule):
        return rule(a, x, y)
    if rule == "symmetric_composition":
        # d3(x,y) z = 4(<x|z> y - <y|z> x)
        four = a.field.from_int(4)
        bx = [a.form_eval(a.basis(l), x) for l in range(a.dim)]
        by = [a.form_eval(a.basis(l), y) for l in range(a.dim)]
        rows = [
            [four * (y.coords[k] * bx[l] - x.coords[k] * by[l]) for l in range(a.dim)]
            for k in range(a.dim)
        ]
        return LinearMap(a, rows)
    if rule == "lie":
        return a.left_op(x * y - y * x)
    raise ValueError(f"unknown d3 rule: {rule}")


def derivation_pair(a: Algebra, x: Element, y: Element, d3_rule: D3Rule = "symmetric_composition") -> DerivationPair:
    d1 = a.right_op(y) @ a.left_op(x) - a.right_op(x) @ a.left_op(y)
    d2 = a.left_op(y) @ a.right_op(x) - a.left_op(x) @ a.right_op(y)
    d3 = _d3_matrix(a, x, y, d3_rule)
    return DerivationPair(a, x, y, d1, d2, d3)


def _is_local(a: Algebra, maps: Sequence[LinearMap]) -> bool:
    try:
        verify_local(a, *maps)
        return True
    except RelationFails:
        return False


def classify_regularity(a: Algebra, d3_rule: D3Rule = "symmetric_composition") -> str:
    """Classify the derivation system: 'normal', 'pre-normal', 'regular', or 'none'.

    Regular: (d1, d2, d3)(x, y) is a local triple for all x, y.
    Pre-normal adds the cyclic sum d3(x,y)z + d3(y,z)x + d3(z,x)y = 0.
    Normal adds d1(z,xy) + d2(y,zx) + d3(x,yz) = 0.
    """
    n = a.dim
    basis = a.basis_elements()
    pairs = {}
    for i in range(n):
        for j in range(i + 1, n):
            pairs[(i, j)] = derivation_pair(a, basis[i], basis[j], d3_rule)
            if not _is_local(a, pairs[(i, j)].maps()):
                return "none"
    # d_j(x, x) must vanish for the bilinear antisymmetric system
    for i in range(n):
        p = derivation_pair(a, basis[i], basis[i], d3_rule)
        zero_rows = linalg.zeros(n, n, a.field.zero())
        if any(not linalg.mat_eq(m.rows, zero_rows) for m in p.maps()):
            return "none"
    pre_normal = True
    for i in range(n):
        for j in range(n):
            for k in range(n):
                acc = _pair_d3(pairs, a, i, j, d3_rule)(basis[k])
                acc = acc + _pair_d3(pairs, a, j, k, d3_rule)(basis[i])
                acc = acc + _pair_d3(pairs, a, k, i, d3_rule)(basis[j])
                if not acc.is_zero():
                    pre_normal = False
                    break
            if not pre_normal:
                break
        if not pre_normal:
            break
    if not pre_normal:
        return "regular"
    # normality: Q(x,y,z) = d1(z, xy) + d2(y, zx) + d3(x, yz) = 0 as operators
    for i in range(n):
        for j in range(n):
            for k in range(n):
                x, y, z = basis[i], basis[j], basis[k]
                q1 = derivation_pair(a, z, x * y, d3_rule).d1
                q2 = derivation_pair(a, y, z * x, d3_rule).d2
                q3 = _d3_matrix(a, x, y * z, d3_rule)
                total = q1 + q2 + q3
                if not linalg.mat_eq(total.rows, linalg.zeros(n, n, a.field.zero())):
                    return "pre-normal"
    return "normal"


def _pair_d3(pairs, a: Algebra, i: int, j: int, rule: D3Rule) -> LinearMap:
    if i == j:
        return LinearMap(a, linalg.zeros(a.dim, a.dim, a.field.zero()))
    if (i, j) in pairs:
        return pairs[(i, j)].d3
    return -pairs[(j, i)].d3


def commutator_covariance(a: Algebra, t: LocalTriple, x: Element, y: Element,
                          d3_rule: D3Rule = "symmetric_composition") -> None:
    """[t_j, d_k(x,y)] = d_k(t_{j-k}x, y) + d_k(x, t_{j-k}y) for all j, k."""
    for j in range(1, 4):
        for k in range(1, 4):
            tj = t.comp(j)
            tjk = t.comp(j - k)
            dk = derivation_pair(a, x, y, d3_rule).comp(k)
            lhs = tj.commutator(dk)
            rhs = (
                derivation_pair(a, tjk(x), y, d3_rule).comp(k)
                + derivation_pair(a, x, tjk(y), d3_rule).comp(k)
            )
            if lhs != rhs:
                raise RelationFails(f"commutator covariance fails at j={j}, k={k}",
                                    witness=(j, k))


def conjugation_covariance(a: Algebra, g: TrialityTriple, x: Element, y: Element,
                           d3_rule: D3Rule = "symmetric_composition") -> None:
    """g_j d_k(x,y) g_j^{-1} = d_k(g_{j-k}x, g_{j-k}y) for all j, k."""
    for j in range(1, 4):
        gj = g.comp(j)
        gj_inv = gj.inverse()
        for k in range(1, 4):
            gjk = g.comp(j - k)
            dk = derivation_pair(a, x, y, d3_rule).comp(k)
            lhs = gj @ dk @ gj_inv
            rhs = derivation_pair(a, gjk(x), gjk(y), d3_rule).comp(k)
            if lhs != rhs:
                raise RelationFails(f"conjugation covariance fails at j={j}, k={k}",
                                    witness=(j, k))


# ---------------------------------------------------------------------------
# Float bridge from local to global triples
# ---------------------------------------------------------------------------

@dataclass
class ExpReport:
    terms: int
    tolerance: float
    residual: float
    matrices: List[List[List[float]]]

    @property
    def ok(self) -> bool:
        return self.residual < self.tolerance


def _to_float_matrix(m: LinearMap) -> "object":
    import numpy as np

    return np.array([[c.to_float() for c in row] for row in m.rows], dtype=float)


def exp_bridge(t: LocalTriple, terms: int = 30, tolerance: float = 1e-9) -> ExpReport:
    """Truncated exponentials of a local triple, checked as an approximate
    global triple against the float structure tensor.

    Raises FieldNotEmbeddable over finite fields.
    """
    import numpy as np

    a = t.algebra
    if a.field.characteristic != 0:
        raise FieldNotEmbeddable("exponentials need a characteristic-zero field")
    n = a.dim
    c = np.array(
        [[[a.structure[i][j][k].to_float() for k in range(n)] for j in range(n)] for i in range(n)],
        dtype=float,
    )
    exps = []
    for m in t.maps:
        fm = _to_float_matrix(m)
        acc = np.eye(n)
        term = np.eye(n)
        for s in range(1, terms + 1):
            term = term @ fm / s
            acc = acc + term
        exps.append(acc)
    residual = 0.0
    for j in range(3):
        gj, gj1, gj2 = exps[j], exps[(j + 1) % 3], exps[(j + 2) % 3]
        for i in range(n):
            for k in range(n):
                lhs = gj @ c[i, k, :]
                # (g_{j+1} e_i)(g_{j+2} e_k) via the structure tensor
                u = gj1[:, i]
                v = gj2[:, k]
                rhs = np.einsum("a,b,abk->k", u, v, c)
                residual = max(residual, float(np.max(np.abs(lhs - rhs))))
    return ExpReport(terms=terms, tolerance=tolerance, residual=residual,
                     matrices=[e.tolist() for e in exps])


def exp_closed_form(pair: DerivationPair, j: int, lam: float):
    """Closed form of exp(lam * d_j) for j in {1, 2}, where d_j^2 = Delta Id
    with Delta = 4(<x|y>^2 - <x|x><y|y>)."""
    import numpy as np

    if j not in (1, 2):
        raise ValueError("closed form applies to the first two components")
    a = pair.algebra
    x, y = pair.x, pair.y
    delta = a.field.from_int(4) * (
        a.form_eval(x, y) * a.form_eval(x, y) - a.form_eval(x, x) * a.form_eval(y, y)
    )
    dval = delta.to_float()
    d = _to_float_matrix(pair.comp(j))
    n = a.dim
    eye = np.eye(n)
    d2 = d @ d
    if dval == 0.0:
        return eye + lam * d + (lam * lam / 2.0) * d2
    if dval > 0:
        r = dval ** 0.5
        s = np.sinh(lam * r) / r
        c = (np.cosh(lam * r) - 1.0) / dval
    else:
        r = (-dval) ** 0.5
        s = np.sin(lam * r) / r
        c = (np.cos(lam * r) - 1.0) / dval
    return eye + s * d + c * d2
