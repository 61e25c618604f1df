"""Finite-dimensional Hopf algebras given by structure constants.

Tensor conventions (all indices are basis indices of H):

    e_i e_j = sum_k mul[i, j, k] e_k
    1       = sum_i unit[i] e_i
    D(e_i)  = sum_{j,k} comul[i, j, k] e_j (x) e_k
    eps(e_i) = counit[i]
    S(e_i)  = sum_j antipode[i, j] e_j
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .exact_linalg import einsum, QQ, Field, field_of, inverse, is_zero, kernel_basis, solve
from .report import AxiomReport


class NoAntipode(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class Bialgebra:
    field: Field
    mul: np.ndarray
    unit: np.ndarray
    comul: np.ndarray
    counit: np.ndarray

    @property
    def dim(self) -> int:
        return len(self.unit)

    def check_shapes(self):
        n = self.dim
        expected = {
            "mul": (n, n, n),
            "unit": (n,),
            "comul": (n, n, n),
            "counit": (n,),
        }
        for name, shape in expected.items():
            if getattr(self, name).shape != shape:
                raise ValueError(f"{name} has shape {getattr(self, name).shape}, expected {shape}")


@dataclass(frozen=True, eq=False)
class HopfAlgebraData(Bialgebra):
    antipode: np.ndarray = None
    antipode_inv: np.ndarray = None

    def check_shapes(self):
        super().check_shapes()
        n = self.dim
        for name in ("antipode", "antipode_inv"):
            if getattr(self, name).shape != (n, n):
                raise ValueError(f"{name} must be {n}x{n}")

    # small helpers used all over the package
    def one(self) -> np.ndarray:
        return self.unit.copy()

    def product(self, x, y) -> np.ndarray:
        return einsum("i,j,ijk->k", x, y, self.mul)

    def s2(self) -> np.ndarray:
        return self.antipode @ self.antipode

    def same_as(self, other: "HopfAlgebraData") -> bool:
        if self.dim != other.dim or self.field != other.field:
            return False
        return all(
            is_zero(getattr(self, k) - getattr(other, k))
            for k in ("mul", "unit", "comul", "counit", "antipode", "antipode_inv")
        )


def make_hopf(field: Field, mul, unit, comul, counit, antipode=None) -> HopfAlgebraData:
    """Assemble Hopf data; a missing antipode is solved for, S^-1 is always computed."""
    bi = Bialgebra(field, field.array(mul), field.array(unit), field.array(comul), field.array(counit))
    bi.check_shapes()
    S = solve_antipode(bi) if antipode is None else field.array(antipode)
    try:
        S_inv = inverse(S, field)
    except np.linalg.LinAlgError:
        raise NoAntipode("antipode is singular") from None
    H = HopfAlgebraData(field, bi.mul, bi.unit, bi.comul, bi.counit, S, S_inv)
    H.check_shapes()
    return H


def verify_hopf(H: HopfAlgebraData) -> AxiomReport:
    H.check_shapes()
    field_of(H.mul, H.unit, H.comul, H.counit, H.antipode, H.antipode_inv)
    m, u, c, e, S, Si = H.mul, H.unit, H.comul, H.counit, H.antipode, H.antipode_inv
    I = H.field.identity(H.dim)
    r = AxiomReport()
    r.compare(
        "associativity",
        einsum("ijx,xky->ijky", m, m),
        einsum("jkx,ixy->ijky", m, m),
        3,
    )
    r.compare("left unit", einsum("u,uiy->iy", u, m), I, 1)
    r.compare("right unit", einsum("u,iuy->iy", u, m), I, 1)
    r.compare(
        "coassociativity",
        einsum("ixc,xab->iabc", c, c),
        einsum("iax,xbc->iabc", c, c),
        1,
    )
    r.compare("left counit", einsum("iab,a->ib", c, e), I, 1)
    r.compare("right counit", einsum("iab,b->ia", c, e), I, 1)
    r.compare(
        "comultiplication multiplicative",
        einsum("ijx,xab->ijab", m, c),
        einsum("ipq,jrs,pra,qsb->ijab", c, c, m, m, optimize=True),
        2,
    )
    r.compare("comultiplication unital", einsum("u,uab->ab", u, c), np.multiply.outer(u, u), 0)
    r.compare("counit multiplicative", einsum("ijx,x->ij", m, e), np.multiply.outer(e, e), 2)
    r.compare("counit unital", np.array([u @ e], dtype=object), np.array([1], dtype=object), 0)
    unit_counit = np.multiply.outer(e, u)
    r.compare("left antipode", einsum("iab,ax,xby->iy", c, S, m, optimize=True), unit_counit, 1)
    r.compare("right antipode", einsum("iab,bx,axy->iy", c, S, m, optimize=True), unit_counit, 1)
    r.compare("antipode inverse", S @ Si, I, 1)
    r.compare("antipode inverse (left)", Si @ S, I, 1)
    return r


def verify_antipode_properties(H: HopfAlgebraData) -> AxiomReport:
    """Derived consequences: S is an algebra and coalgebra anti-homomorphism."""
    m, c, S = H.mul, H.comul, H.antipode
    r = AxiomReport()
    r.compare("S anti-multiplicative", einsum("ijx,xy->ijy", m, S), einsum("ia,jb,bay->ijy", S, S, m), 2)
    r.compare("S anti-comultiplicative", einsum("ix,xab->iab", S, c), einsum("ipq,qa,pb->iab", c, S, S), 1)
    r.compare("S counital", S @ H.counit, H.counit, 1)
    r.compare("S unital", H.unit @ S, H.unit, 0)
    return r


def solve_antipode(B: Bialgebra) -> np.ndarray:
    """Convolution inverse of the identity, from the left identity; checked on the right."""
    n, fld = B.dim, B.field
    m, c = B.mul, B.comul
    # unknown S[j, x]; equation (i, y): sum c[i,j,k] S[j,x] m[x,k,y] = e[i] u[y]
    coeff = einsum("ijk,xky->iyjx", c, m).reshape(n * n, n * n)
    rhs = np.multiply.outer(B.counit, B.unit).reshape(n * n)
    sol = solve(coeff, rhs, fld)
    if sol is None:
        raise NoAntipode("no antipode exists")
    if kernel_basis(coeff, fld):
        raise NoAntipode("antipode equations are underdetermined")
    S = sol.reshape(n, n)
    right = einsum("iab,bx,axy->iy", c, S, m, optimize=True)
    if not is_zero(right - np.multiply.outer(B.counit, B.unit)):
        raise NoAntipode("left antipode solution violates the right antipode identity")
    return S


def dual_hopf(H: HopfAlgebraData) -> HopfAlgebraData:
    """H* on the dual basis."""
    mul = np.transpose(H.comul, (1, 2, 0))
    comul = np.transpose(H.mul, (2, 0, 1))
    return HopfAlgebraData(
        H.field, mul, H.counit.copy(), comul, H.unit.copy(), H.antipode.T.copy(), H.antipode_inv.T.copy()
    )


def opposite_hopf(H: HopfAlgebraData) -> HopfAlgebraData:
    mul = np.transpose(H.mul, (1, 0, 2))
    return HopfAlgebraData(
        H.field, mul, H.unit.copy(), H.comul.copy(), H.counit.copy(), H.antipode_inv.copy(), H.antipode.copy()
    )


def check_lemma_aux(H: HopfAlgebraData) -> AxiomReport:
    """sum (g S(h1))_1 h2 (x) (g S(h1))_2 == sum g1 (x) g2 S(h) for all basis g, h."""
    m, c, S = H.mul, H.comul, H.antipode
    lhs = einsum("hab,as,gsx,xpq,pby->ghyq", c, S, m, c, m, optimize=True)
    rhs = einsum("gab,hs,bsy->ghay", c, S, m, optimize=True)
    r = AxiomReport()
    r.compare("lemma aux", lhs, rhs, 2)
    return r


def iterated_coproduct(H: HopfAlgebraData, r: int, nesting: str = "left") -> np.ndarray:
    """Coefficient array of the r-fold coproduct: shape (n,) + (n,) * (r + 1).

    ``nesting="left"`` applies D to the first leg each time, ``"right"`` to the last.
    """
    if r < 1:
        raise ValueError("order must be >= 1")
    out = H.comul
    for _ in range(r - 1):
        if nesting == "left":
            out = np.tensordot(out, H.comul, axes=([1], [0]))
            # axes now: input, legs 2..k, new1, new2 -> move new legs to the front
            k = out.ndim
            out = np.moveaxis(out, [k - 2, k - 1], [1, 2])
        else:
            out = np.tensordot(out, H.comul, axes=([out.ndim - 1], [0]))
    return out
