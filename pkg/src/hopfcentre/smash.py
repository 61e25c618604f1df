"""Smash products A#H, their H-coaction, and modules over them.

The basis of A#H is a_i # h_j at index ``i * dim H + j`` (A-index major).
Representations are lists of matrices in column convention, rho(x) rho(y) = rho(xy).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .exact_linalg import einsum, is_zero, nonzero_indices, rank
from .modalg import AlgebraData, ModuleAlgebraData, verify_algebra
from .report import AxiomReport


class CorrespondenceError(ValueError):
    def __init__(self, message, witness):
        super().__init__(f"{message} (witness {witness})")
        self.witness = witness


@dataclass(frozen=True, eq=False)
class SmashProductData:
    base: ModuleAlgebraData
    mul: np.ndarray
    unit: np.ndarray
    comodule: np.ndarray  # psi(e_u) = sum comodule[u, v, k] e_v (x) h_k

    @property
    def dim(self) -> int:
        return len(self.unit)

    @property
    def hopf(self):
        return self.base.hopf

    @property
    def field(self):
        return self.base.field

    @property
    def algebra(self) -> AlgebraData:
        return AlgebraData(self.field, self.mul, self.unit)

    def index(self, a: int, h: int) -> int:
        return a * self.hopf.dim + h

    def embed_A(self) -> np.ndarray:
        """Rows: a_i # 1."""
        return np.multiply.outer(self.base.alg.field.identity(self.base.alg.dim), self.hopf.unit).reshape(
            self.base.alg.dim, self.dim
        )

    def embed_H(self) -> np.ndarray:
        """Rows: 1 # h_j."""
        return np.multiply.outer(self.base.alg.unit, self.field.identity(self.hopf.dim)).transpose(1, 0, 2).reshape(
            self.hopf.dim, self.dim
        )


def smash_product(M: ModuleAlgebraData) -> SmashProductData:
    """(a # g)(b # h) = sum a g1(b) # g2 h."""
    H, A, act = M.hopf, M.alg, M.action
    n, m = H.dim, A.dim
    N = n * m
    mul = einsum("gpq,pbs,asy,qhz->agbhyz", H.comul, act, A.mul, H.mul, optimize=True).reshape(N, N, N)
    unit = np.multiply.outer(A.unit, H.unit).reshape(N)
    psi = einsum("ab,hpq->ahbpq", M.field.identity(m), H.comul).reshape(N, N, n)
    return SmashProductData(M, mul, unit, psi)


def verify_smash(S: SmashProductData) -> AxiomReport:
    r = verify_algebra(S.algebra)
    A, H = S.base.alg, S.hopf
    EA, EH = S.embed_A(), S.embed_H()
    r.compare(
        "A embeds multiplicatively",
        einsum("ip,jq,pqy->ijy", EA, EA, S.mul),
        einsum("ijx,xy->ijy", A.mul, EA),
        2,
    )
    r.compare(
        "H embeds multiplicatively",
        einsum("ip,jq,pqy->ijy", EH, EH, S.mul),
        einsum("ijx,xy->ijy", H.mul, EH),
        2,
    )
    return r


def smash_comodule(S: SmashProductData) -> tuple[np.ndarray, AxiomReport]:
    H, psi = S.hopf, S.comodule
    r = AxiomReport()
    r.compare(
        "coaction multiplicative",
        einsum("uvx,xyk->uvyk", S.mul, psi),
        einsum("upa,vqb,pqy,abk->uvyk", psi, psi, S.mul, H.mul, optimize=True),
        2,
    )
    r.compare("coaction unital", einsum("u,uyk->yk", S.unit, psi), np.multiply.outer(S.unit, H.unit), 0)
    r.compare(
        "coaction coassociative",
        einsum("uxc,xyb->uybc", psi, psi),
        einsum("uyk,kbc->uybc", psi, H.comul),
        1,
    )
    r.compare("coaction counital", einsum("uyk,k->uy", psi, H.counit), S.field.identity(S.dim), 1)
    return psi, r


def theta_map(S: SmashProductData) -> np.ndarray:
    """theta(l # h)(m) = l h(m) on H*, as one row-convention matrix per basis element.

    ``S`` must be built from ``dual_regular_module_algebra``.
    """
    A, act = S.base.alg, S.base.action
    n = S.hopf.dim
    # row convention: m -> h(m) -> l * h(m)
    ops = einsum("hmx,lxy->lhmy", act, A.mul).reshape(S.dim, A.dim, A.dim)
    if rank(ops.reshape(S.dim, A.dim * A.dim)) != A.dim * A.dim or S.dim != A.dim * A.dim:
        raise ArithmeticError("theta is not bijective")
    assert n * A.dim == S.dim
    return ops


def is_representation(mul, unit, mats) -> AxiomReport:
    mats = np.asarray(mats, dtype=object)
    r = AxiomReport()
    lhs = einsum("uab,vbc->uvac", mats, mats)
    rhs = einsum("uvx,xac->uvac", mul, mats)
    r.compare("representation multiplicative", lhs, rhs, 2)
    d = mats.shape[1]
    ident = np.zeros((d, d), dtype=object)
    for i in range(d):
        ident[i, i] = 1
    r.compare("representation unital", einsum("u,uac->ac", unit, mats), ident, 0)
    return r


def module_correspondence(M: ModuleAlgebraData, repA, repH) -> np.ndarray:
    """A#H-representation (a # h) -> repA(a) repH(h) from compatible A- and H-modules."""
    H, A, act = M.hopf, M.alg, M.action
    RA = np.asarray(repA, dtype=object)
    RH = np.asarray(repH, dtype=object)
    for name, rep, mul, unit in (("A", RA, A.mul, A.unit), ("H", RH, H.mul, H.unit)):
        bad = is_representation(mul, unit, rep).failures
        if bad:
            raise CorrespondenceError(f"input is not an {name}-module: {bad[0].name}", bad[0].witness)
    # h(a m) = sum h1(a) h2(m), as operators: RH[h] RA[a] = sum c[h,p,q] act[p,a,s] RA[s] RH[q]
    lhs = einsum("hij,ajk->haik", RH, RA)
    rhs = einsum("hpq,pas,sij,qjk->haik", H.comul, act, RA, RH, optimize=True)
    bad = nonzero_indices(lhs - rhs)
    if bad:
        h, a, _, m = bad[0]
        raise CorrespondenceError("A- and H-actions are not compatible", (h, a, m))
    return einsum("aij,hjk->ahik", RA, RH).reshape(A.dim * H.dim, RA.shape[1], RA.shape[1])


def split_representation(S: SmashProductData, rep) -> tuple[np.ndarray, np.ndarray]:
    """Inverse of module_correspondence: restrict along a -> a#1 and h -> 1#h."""
    rep = np.asarray(rep, dtype=object)
    repA = einsum("iu,ujk->ijk", S.embed_A(), rep)
    repH = einsum("iu,ujk->ijk", S.embed_H(), rep)
    return repA, repH


def defining_representations(M: ModuleAlgebraData) -> tuple[np.ndarray, np.ndarray]:
    """A acting on itself by left multiplication and H acting through the module-algebra action."""
    A = M.alg
    repA = np.transpose(A.mul, (0, 2, 1))  # column matrix of v -> a_i v: [i, out, in] = mul[i, in, out]
    repH = np.transpose(M.action, (0, 2, 1))
    return repA, repH
