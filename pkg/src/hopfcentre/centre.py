"""Full centre of an H-module algebra as the centraliser of A in A#H.

The Yetter-Drinfeld structure is defined on all of A#H by

    h(a # g)   = h2(a) # h3 g S^-1(h1)
    psi(a # g) = S(g2) (x) a # g1

and restricted to the centraliser, whose closure is checked rather than assumed.
This is the structure transported from the left centre of H (x) A along
a # h -> S(h) (x) a.  The variant ``"sinv"`` uses

    h(a # g)   = h2(a) # S^2(h3) g S(h1)
    psi(a # g) = S^-1(g2) (x) a # g1

which agrees with the default whenever S^2 = id but is not closed on the
centraliser in general (Sweedler's algebra acting on its dual is a witness).

The algebra structure of Z(A) is the centraliser with the *reversed* smash
product, z * w := w z.  With the braiding c(m (x) n) = m_(-1) n (x) m_(0) this
is the product that makes Z(A) quantum commutative, turns a # h -> S(h) (x) a
into an algebra map onto the left centre of H (x) A, and makes the projection
to A multiplicative.  For A = k it is H^op on the nose.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .exact_linalg import einsum, coordinates, is_zero, NotInSpan, null_space_rows, rank, row_space, same_row_space
from .hopf import HopfAlgebraData, iterated_coproduct, opposite_hopf
from .modalg import ModuleAlgebraData, matrix_amplify, trivial_module_algebra
from .report import AxiomReport
from .smash import SmashProductData, smash_product
from .yd import (
    ClosureError,
    YDAlgebraData,
    adjoint_yd,
    left_centre,
    quantum_commutative_check,
    r_lax_product,
    restrict,
    verify_yd_algebra,
)


@dataclass(frozen=True, eq=False)
class FullCentreData:
    source: SmashProductData
    basis: np.ndarray  # rows in A#H
    mul: np.ndarray
    yd: YDAlgebraData
    canonical_to_A: np.ndarray
    report: AxiomReport

    @property
    def dim(self) -> int:
        return self.basis.shape[0]


VARIANTS = ("s", "sinv")


def _check_variant(variant: str) -> None:
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}; expected one of {VARIANTS}")


def smash_action(S: SmashProductData, variant: str = "s") -> np.ndarray:
    """h(a # g) = h2(a) # h3 g S^-1(h1) on all of A#H (see module docstring for ``"sinv"``)."""
    _check_variant(variant)
    H, act = S.hopf, S.base.action
    n, m = H.dim, S.base.alg.dim
    d2 = iterated_coproduct(H, 2)
    if variant == "s":
        left, right = H.field.identity(n), H.antipode_inv
    else:
        left, right = H.s2(), H.antipode
    out = einsum("hpqr,qab,rx,xgy,ps,ysz->hagbz", d2, act, left, H.mul, right, H.mul, optimize=True)
    return out.reshape(n, m * n, m * n)


def smash_coaction(S: SmashProductData, variant: str = "s") -> np.ndarray:
    """psi(a # g) = S(g2) (x) a # g1 on all of A#H."""
    _check_variant(variant)
    H = S.hopf
    n, m = H.dim, S.base.alg.dim
    T = H.antipode if variant == "s" else H.antipode_inv
    out = einsum("ab,gxy,yk->agkbx", S.field.identity(m), H.comul, T)
    return out.reshape(m * n, n, m * n)


def reversed_mul(mul: np.ndarray) -> np.ndarray:
    return np.transpose(mul, (1, 0, 2)).copy()


def centralizer(S: SmashProductData) -> np.ndarray:
    """Rows spanning {v in A#H : (a#1) v = v (a#1) for all a}, in RREF."""
    EA = S.embed_A()
    left = einsum("ju,uvw->jvw", EA, S.mul)
    right = einsum("vuw,ju->jvw", S.mul, EA)
    F = np.concatenate(list(left - right), axis=1)
    return row_space(null_space_rows(F, S.field), S.field)


def projection_to_A(S: SmashProductData) -> np.ndarray:
    """a # g -> eps(g) a."""
    m = S.base.alg.dim
    return einsum("ab,g->agb", S.field.identity(m), S.hopf.counit).reshape(S.dim, m)


def full_centre(M: ModuleAlgebraData, variant: str = "s") -> FullCentreData:
    S = smash_product(M)
    B = centralizer(S)
    parts = restrict(
        B,
        action=smash_action(S, variant),
        coaction=smash_coaction(S, variant),
        mul=reversed_mul(S.mul),
        unit=S.unit,
    )
    yd = YDAlgebraData(M.hopf, parts["action"], parts["coaction"], parts["mul"], parts["unit"])
    report = verify_yd_algebra(yd)
    report.extend(quantum_commutative_check(yd))
    return FullCentreData(S, B, parts["mul"], yd, B @ projection_to_A(S), report)


def canonical_projection(Z: FullCentreData) -> np.ndarray:
    """Matrix of Z(A) -> A, sum a_i # g_i -> sum eps(g_i) a_i; checked to be multiplicative."""
    P = Z.canonical_to_A
    A = Z.source.base.alg
    lhs = einsum("ijl,la->ija", Z.mul, P)
    rhs = einsum("ia,jb,abz->ijz", P, P, A.mul)
    if not is_zero(lhs - rhs) or not is_zero(Z.yd.unit @ P - A.unit):
        raise ArithmeticError("canonical projection is not an algebra homomorphism")
    return P


def check_yd_algebra_map(Q: np.ndarray, X: YDAlgebraData, Y: YDAlgebraData, prefix: str = "") -> AxiomReport:
    """Q: X -> Y (row convention, in the given bases) is a map of YD algebras."""
    r = AxiomReport()
    r.compare(
        prefix + "multiplicative",
        einsum("ijl,lw->ijw", X.mul, Q),
        einsum("ia,jb,abw->ijw", Q, Q, Y.mul),
        2,
    )
    r.compare(prefix + "unital", X.unit @ Q, Y.unit, 0)
    r.compare(
        prefix + "H-linear",
        einsum("hil,lw->hiw", X.action, Q),
        einsum("iv,hvw->hiw", Q, Y.action),
        2,
    )
    r.compare(
        prefix + "H-colinear",
        einsum("ikl,lw->ikw", X.coaction, Q),
        einsum("iv,vkw->ikw", Q, Y.coaction),
        1,
    )
    return r


def embedding_matrix(S: SmashProductData, direction: str = "s") -> np.ndarray:
    """a # h -> S(h) (x) a (or S^-1(h) (x) a), from A#H into H (x) A."""
    H = S.hopf
    m = S.base.alg.dim
    T = H.antipode if direction == "s" else H.antipode_inv
    out = einsum("ab,hg->ahgb", S.field.identity(m), T)
    return out.reshape(S.dim, H.dim * m)


def embed_and_compare(M: ModuleAlgebraData, Z: FullCentreData | None = None, direction: str = "s") -> AxiomReport:
    """Centraliser pipeline against the left centre of R(A) = H (x) A."""
    Z = Z or full_centre(M)
    img = Z.basis @ embedding_matrix(Z.source, direction)
    RA = r_lax_product(M.hopf, M)
    CL, BL = left_centre(RA)
    r = AxiomReport()
    r.add("embedding injective on Z(A)", rank(img) == Z.dim if Z.dim else True)
    r.add("image equals left centre of R(A)", same_row_space(img, BL), note=f"dim {Z.dim} vs {BL.shape[0]}")
    if not r.ok:
        return r
    # image of the centre basis, expressed in the left-centre basis
    Q = coordinates(BL, img)
    r.extend(check_yd_algebra_map(Q, Z.yd, CL, prefix="embedding "))
    r.add("left centre quantum commutative", quantum_commutative_check(CL).ok)
    return r


def compare_trivial_centre(H: HopfAlgebraData, direction: str = "s", variant: str = "s") -> AxiomReport:
    """Z(k) against H^op: a # h -> eps(a) S(h), or eps(a) S^-1(h) with ``direction="sinv"``.

    The centraliser of k in k#H is H; the map is an algebra isomorphism from
    it onto opposite_hopf(H), and carries the centre's YD structure to the
    adjoint action and the coproduct coaction on H.
    """
    Z = full_centre(trivial_module_algebra(H), variant)
    n = H.dim
    r = AxiomReport()
    r.add("dim Z(k) = dim H", Z.dim == n, note=f"{Z.dim} vs {n}")
    antipode = H.antipode if direction == "s" else H.antipode_inv
    T = Z.basis @ antipode  # k has one basis vector, so A#H = H and eps(a) = 1
    r.add("map bijective", rank(T) == n)
    if not r.ok:
        return r
    Hop = opposite_hopf(H)
    S = Z.source
    smash_products = einsum("ix,jy,xyz->ijz", Z.basis, Z.basis, S.mul)
    r.compare(
        "centraliser product -> H^op product",
        smash_products @ antipode,
        einsum("ia,jb,abz->ijz", T, T, Hop.mul),
        2,
    )
    ad = adjoint_yd(H)
    target = YDAlgebraData(H, ad.action, ad.coaction, H.mul, H.unit)
    r.extend(check_yd_algebra_map(T, Z.yd, target, prefix="Z(k) -> (H, ad, D) "))
    r.add("(H, ad, D) quantum commutative", quantum_commutative_check(target).ok)
    return r


def amplification_matrix(S: SmashProductData, S2: SmashProductData, r: int) -> np.ndarray:
    """a # g -> (I_r (x) a) # g from A#H into Mat_r(A)#H."""
    m, n = S.base.alg.dim, S.hopf.dim
    J = S.field.zeros(S.dim, S2.dim)
    for a in range(m):
        for g in range(n):
            for p in range(r):
                J[a * n + g, ((p * r + p) * m + a) * n + g] = S.field(1)
    return J


def morita_amplification(M: ModuleAlgebraData, r: int = 2) -> AxiomReport:
    """z -> z (I_r # 1) is an isomorphism of YD algebras Z(A) -> Z(Mat_r(A))."""
    Z = full_centre(M)
    Z2 = full_centre(matrix_amplify(M, r))
    img = Z.basis @ amplification_matrix(Z.source, Z2.source, r)
    rep = AxiomReport()
    rep.add("dim Z(A) = dim Z(Mat_r(A))", Z.dim == Z2.dim, note=f"{Z.dim} vs {Z2.dim}")
    try:
        Q = coordinates(Z2.basis, img)
    except NotInSpan as exc:
        rep.add("image inside Z(Mat_r(A))", False, (exc.args[0],))
        return rep
    rep.add("image inside Z(Mat_r(A))", True)
    rep.add("bijective", rank(Q) == Z.dim == Z2.dim)
    rep.extend(check_yd_algebra_map(Q, Z.yd, Z2.yd, prefix="amplification "))
    return rep
