"""Yetter-Drinfeld modules and algebras over a finite-dimensional Hopf algebra.

Left module, left comodule:

    e_h . m_i       = sum_j action[h, i, j] m_j
    delta(m_i)      = sum_{h,j} coaction[i, h, j] e_h (x) m_j      (m_(-1) (x) m_(0))
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .exact_linalg import einsum, coordinates, is_zero, kron, NotInSpan, null_space_rows, rank
from .hopf import HopfAlgebraData, iterated_coproduct
from .modalg import AlgebraData, ModuleAlgebraData, tensor_algebra, verify_algebra, verify_module
from .report import AxiomReport


class ClosureError(ArithmeticError):
    pass


@dataclass(frozen=True, eq=False)
class YDModuleData:
    hopf: HopfAlgebraData
    action: np.ndarray
    coaction: np.ndarray

    @property
    def dim(self) -> int:
        return self.action.shape[1]

    @property
    def field(self):
        return self.hopf.field


@dataclass(frozen=True, eq=False)
class YDAlgebraData(YDModuleData):
    mul: np.ndarray = None
    unit: np.ndarray = None

    @property
    def algebra(self) -> AlgebraData:
        return AlgebraData(self.field, self.mul, self.unit)

    @property
    def module(self) -> YDModuleData:
        return YDModuleData(self.hopf, self.action, self.coaction)


def trivial_yd(H: HopfAlgebraData) -> YDModuleData:
    act = H.field.zeros(H.dim, 1, 1)
    act[:, 0, 0] = H.counit
    coact = H.field.zeros(1, H.dim, 1)
    coact[0, :, 0] = H.unit
    return YDModuleData(H, act, coact)


def verify_comodule(H: HopfAlgebraData, coact: np.ndarray, prefix: str = "") -> AxiomReport:
    r = AxiomReport()
    r.compare(
        prefix + "comodule coassociativity",
        einsum("mxn,xab->mabn", coact, H.comul),
        einsum("map,pbn->mabn", coact, coact),
        1,
    )
    r.compare(prefix + "comodule counit", einsum("mhn,h->mn", coact, H.counit), H.field.identity(coact.shape[0]), 1)
    return r


def _com_sides(M: YDModuleData):
    H, act, co = M.hopf, M.action, M.coaction
    lhs = einsum("hpq,mxn,pxy,qnz->hmyz", H.comul, co, H.mul, act, optimize=True)
    rhs = einsum("hpq,pmn,nxz,xqy->hmyz", H.comul, act, co, H.mul, optimize=True)
    return lhs, rhs


def _yde_sides(M: YDModuleData):
    H, act, co = M.hopf, M.action, M.coaction
    d2 = iterated_coproduct(H, 2)
    lhs = einsum("hmn,nyz->hmyz", act, co)
    rhs = einsum("hpqr,mxn,pxt,rs,tsy,qnz->hmyz", d2, co, H.mul, H.antipode, H.mul, act, optimize=True)
    return lhs, rhs


def verify_yd(M: YDModuleData) -> AxiomReport:
    H = M.hopf
    if M.action.shape[0] != H.dim or M.coaction.shape != (M.dim, H.dim, M.dim):
        raise ValueError("YD tensors do not match the Hopf algebra dimension")
    r = verify_module(H, M.action)
    r.extend(verify_comodule(H, M.coaction))
    structural = r.ok
    com = r.compare("yd condition (com)", *_com_sides(M), 2)
    yde = r.compare("yd condition (yde)", *_yde_sides(M), 2)
    if structural:
        r.add("com/yde verdicts agree", com.ok == yde.ok)
    return r


def yd_tensor(M: YDModuleData, N: YDModuleData) -> YDModuleData:
    """M (x) N with diagonal action and coaction m_(-1) n_(-1) (x) m_(0) (x) n_(0)."""
    H = M.hopf
    d = M.dim * N.dim
    act = einsum("hpq,pac,qbd->habcd", H.comul, M.action, N.action, optimize=True).reshape(H.dim, d, d)
    coact = einsum("mxp,nyq,xyh->mnhpq", M.coaction, N.coaction, H.mul, optimize=True)
    coact = coact.reshape(d, H.dim, d)
    return YDModuleData(H, act, coact)


def braiding_matrix(M: YDModuleData, N: YDModuleData) -> np.ndarray:
    """c(m (x) n) = m_(-1) n (x) m_(0) as a map M(x)N -> N(x)M."""
    C = einsum("mhp,hnq->mnqp", M.coaction, N.action)
    return C.reshape(M.dim * N.dim, N.dim * M.dim)


def braiding_inverse_matrix(M: YDModuleData, N: YDModuleData) -> np.ndarray:
    """c^-1(n (x) m) = m_(0) (x) S^-1(m_(-1)) n as a map N(x)M -> M(x)N."""
    Ci = einsum("mhp,hk,knq->nmpq", M.coaction, M.hopf.antipode_inv, N.action)
    return Ci.reshape(N.dim * M.dim, M.dim * N.dim)


def verify_braiding_linearity(M: YDModuleData, N: YDModuleData) -> AxiomReport:
    MN, NM = yd_tensor(M, N), yd_tensor(N, M)
    C = braiding_matrix(M, N)
    r = AxiomReport()
    r.compare(
        "braiding H-linear",
        einsum("huv,vw->huw", MN.action, C),
        einsum("uv,hvw->huw", C, NM.action),
        2,
    )
    r.compare(
        "braiding H-colinear",
        einsum("uhv,vw->uhw", MN.coaction, C),
        einsum("uv,vhw->uhw", C, NM.coaction),
        1,
    )
    return r


def _braiding_tensor(M: YDModuleData, N: YDModuleData) -> np.ndarray:
    """c_{M,N} as [m, n, n', m']."""
    return einsum("mhp,hnq->mnqp", M.coaction, N.action)


def hexagon_checks(X: YDModuleData, Y: YDModuleData, Z: YDModuleData) -> AxiomReport:
    r = AxiomReport()
    dx, dy, dz = X.dim, Y.dim, Z.dim
    d = dx * dy * dz
    cXY, cXZ, cYZ = _braiding_tensor(X, Y), _braiding_tensor(X, Z), _braiding_tensor(Y, Z)
    # c_{X, Y(x)Z} = (id_Y (x) c_{X,Z}) o (c_{X,Y} (x) id_Z)
    lhs = braiding_matrix(X, yd_tensor(Y, Z))
    rhs = einsum("xyvu,uzwt->xyzvwt", cXY, cXZ).reshape(d, d)
    r.compare("hexagon (first)", lhs, rhs, 1)
    # c_{X(x)Y, Z} = (c_{X,Z} (x) id_Y) o (id_X (x) c_{Y,Z})
    lhs = braiding_matrix(yd_tensor(X, Y), Z)
    rhs = einsum("yzwv,xwtu->xyztuv", cYZ, cXZ).reshape(d, d)
    r.compare("hexagon (second)", lhs, rhs, 1)
    return r


def braiding(M: YDModuleData, N: YDModuleData) -> tuple[np.ndarray, np.ndarray, AxiomReport]:
    """Forward and inverse braiding; inverse and hexagon identities are checked on {M, N}^3."""
    C = braiding_matrix(M, N)
    Ci = braiding_inverse_matrix(M, N)
    I = M.field.identity(M.dim * N.dim)
    r = AxiomReport()
    r.compare("inverse after braiding", einsum("ij,jk->ik", C, Ci), I, 1)
    r.compare("braiding after inverse", einsum("ij,jk->ik", Ci, C), I, 1)
    if not r.ok and rank(C) != M.dim * N.dim:
        raise ArithmeticError("braiding is singular")
    r.extend(verify_braiding_linearity(M, N))
    pool = {"M": M, "N": N} if M is not N else {"M": M}
    for a, X in pool.items():
        for b, Y in pool.items():
            for c, Z in pool.items():
                r.extend(hexagon_checks(X, Y, Z), prefix=f"{a}{b}{c} ")
    return C, Ci, r


def quantum_commutative_check(A: YDAlgebraData) -> AxiomReport:
    """x y = x_(-1)(y) x_(0) on all basis pairs."""
    r = AxiomReport()
    rhs = einsum("xhp,hyq,qpz->xyz", A.coaction, A.action, A.mul, optimize=True)
    r.compare("quantum commutativity", A.mul, rhs, 2)
    return r


def verify_yd_algebra(A: YDAlgebraData) -> AxiomReport:
    H = A.hopf
    r = verify_yd(A)
    r.extend(verify_algebra(A.algebra))
    r.compare(
        "multiplication H-linear",
        einsum("xyw,hwz->hxyz", A.mul, A.action),
        einsum("hpq,pxs,qyt,stz->hxyz", H.comul, A.action, A.action, A.mul, optimize=True),
        3,
    )
    r.compare(
        "multiplication H-colinear",
        einsum("xyw,wkz->xykz", A.mul, A.coaction),
        einsum("xas,ybt,abk,stz->xykz", A.coaction, A.coaction, H.mul, A.mul, optimize=True),
        2,
    )
    r.compare("unit H-linear", einsum("u,huz->hz", A.unit, A.action), np.multiply.outer(H.counit, A.unit), 1)
    r.compare("unit H-colinear", einsum("u,ukz->kz", A.unit, A.coaction), np.multiply.outer(H.unit, A.unit), 0)
    return r


def restrict(B: np.ndarray, *, action=None, coaction=None, mul=None, unit=None) -> dict:
    """Express structure maps on the row span of ``B`` in the basis ``B``.

    Raises ClosureError naming the structure that leaves the subspace.
    """
    out = {}
    k = B.shape[0]
    try:
        if action is not None:
            out["action"] = np.array(
                [coordinates(B, B @ action[h]) for h in range(action.shape[0])], dtype=object
            ).reshape(action.shape[0], k, k)
        if coaction is not None:
            n_h = coaction.shape[1]
            co = einsum("im,mhn->hin", B, coaction)
            sub = np.array([coordinates(B, co[h]) for h in range(n_h)], dtype=object).reshape(n_h, k, k)
            out["coaction"] = sub.transpose(1, 0, 2)
        if mul is not None:
            prod = einsum("ix,jy,xyz->ijz", B, B, mul, optimize=True).reshape(k * k, -1)
            out["mul"] = coordinates(B, prod).reshape(k, k, k)
        if unit is not None:
            out["unit"] = coordinates(B, unit)[0]
    except NotInSpan as exc:
        name = [n for n in ("action", "coaction", "mul", "unit") if n not in out][0]
        raise ClosureError(f"subspace is not closed under {name} (row {exc.args[0]})") from None
    return out


def left_centre(A: YDAlgebraData) -> tuple[YDAlgebraData, np.ndarray]:
    """C_l(A) = {x : x b = x_(-1)(b) x_(0) for all b}, restricted, with its basis rows."""
    d = A.dim
    twisted = einsum("xhp,hbq,qpz->xbz", A.coaction, A.action, A.mul, optimize=True)
    F = (A.mul - twisted).reshape(d, d * d)
    B = null_space_rows(F, A.field)
    parts = restrict(B, action=A.action, coaction=A.coaction, mul=A.mul, unit=A.unit)
    C = YDAlgebraData(A.hopf, parts["action"], parts["coaction"], parts["mul"], parts["unit"])
    return C, B


def induce_R(H: HopfAlgebraData, N_action: np.ndarray) -> YDModuleData:
    """R(N) = H (x) N: h(g (x) n) = h1 g S(h3) (x) h2 n, coaction g1 (x) g2 (x) n."""
    dn = N_action.shape[1]
    n = H.dim
    d2 = iterated_coproduct(H, 2)
    act = einsum("hpqr,pgx,rs,xsy,qab->hgayb", d2, H.mul, H.antipode, H.mul, N_action, optimize=True)
    act = act.reshape(n, n * dn, n * dn)
    coact = einsum("gkx,ab->gakxb", H.comul, H.field.identity(dn)).reshape(n * dn, n, n * dn)
    return YDModuleData(H, act, coact)


def adjoint_yd(H: HopfAlgebraData) -> YDModuleData:
    """H with g(h) = g1 h S(g2) and coaction D; equal to R(k)."""
    return induce_R(H, trivial_yd(H).action)


def r_lax_product(H: HopfAlgebraData, M: ModuleAlgebraData) -> YDAlgebraData:
    """R(A) = H (x) A with (g (x) a)(h (x) b) = gh (x) ab."""
    R = induce_R(H, M.action)
    HA = AlgebraData(H.field, H.mul, H.unit)
    alg = tensor_algebra(HA, M.alg)
    return YDAlgebraData(H, R.action, R.coaction, alg.mul, alg.unit)


def adjunction_maps(M: YDModuleData, N_action: np.ndarray) -> tuple[np.ndarray, np.ndarray, AxiomReport]:
    """Unit alpha_M: M -> RF(M) and counit beta_N: FR(N) -> N, with triangle identities."""
    H = M.hopf
    fld = H.field
    dm, dn = M.dim, N_action.shape[1]
    alpha = M.coaction.reshape(dm, H.dim * dm)
    RFM = induce_R(H, M.action)
    RN = induce_R(H, N_action)

    def beta_of(d):
        return einsum("h,ab->hab", H.counit, fld.identity(d)).reshape(H.dim * d, d)

    beta = beta_of(dn)
    r = AxiomReport()
    r.compare(
        "alpha H-linear",
        einsum("hmp,pw->hmw", M.action, alpha),
        einsum("mv,hvw->hmw", alpha, RFM.action),
        2,
    )
    r.compare(
        "alpha H-colinear",
        einsum("mkp,pw->mkw", M.coaction, alpha),
        einsum("mv,vkw->mkw", alpha, RFM.coaction),
        1,
    )
    r.compare(
        "beta H-linear",
        einsum("huv,vn->hun", RN.action, beta),
        einsum("un,hnp->hup", beta, N_action),
        2,
    )
    r.compare("triangle beta_F o F(alpha) = id", alpha @ beta_of(dm), fld.identity(dm), 1)
    alpha_RN = RN.coaction.reshape(H.dim * dn, H.dim * H.dim * dn)
    r.compare("triangle R(beta) o alpha_R = id", alpha_RN @ kron(fld.identity(H.dim), beta), fld.identity(H.dim * dn), 1)
    r.add("beta epi", rank(beta) == dn)
    return alpha, beta, r
