"""The Drinfeld double D(H) on H (x) H* and the YD(H) = D(H)-Mod dictionary.

D(H) has basis h_i l_j at index ``i * dim H + j`` where l_j is the dual basis.
H* sits inside D(H) with one of two products and one of two coproducts; the
straightening rule

    l h = sum h2 . (x -> l(h1 x S(h3)))

is fixed.  ``convention_search`` tries the four combinations and reports which
ones give a Hopf algebra whose modules are exactly the YD modules.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .exact_linalg import einsum, inverse, rank
from .hopf import HopfAlgebraData, NoAntipode, iterated_coproduct, make_hopf, verify_hopf
from .modalg import verify_module
from .report import AxiomReport
from .yd import YDModuleData, verify_yd


@dataclass(frozen=True)
class DoubleConvention:
    """How H* multiplies and comultiplies inside D(H).

    dual_mul "op":  (l l')(x) = l(x2) l'(x1);   "std": l(x1) l'(x2)
    dual_comul "std": D(l)(x (x) y) = l(xy);    "op": l(yx)
    """

    dual_mul: str = "op"
    dual_comul: str = "std"

    def __str__(self):
        return f"H* product {self.dual_mul}, H* coproduct {self.dual_comul}"


CONVENTIONS = tuple(DoubleConvention(m, c) for m in ("op", "std") for c in ("std", "op"))
DEFAULT_CONVENTION = DoubleConvention()


@dataclass(frozen=True, eq=False)
class DoubleData:
    base: HopfAlgebraData
    hopf: HopfAlgebraData
    convention: DoubleConvention
    straightening: np.ndarray  # l_j h_k = sum straightening[j, k, b, x] h_b l_x
    embed_H: np.ndarray
    embed_dual: np.ndarray

    @property
    def dim(self) -> int:
        return self.hopf.dim


def dual_structure(H: HopfAlgebraData, conv: DoubleConvention) -> tuple[np.ndarray, np.ndarray]:
    """Product and coproduct tensors of H* in the dual basis."""
    mul = H.comul.transpose(1, 2, 0) if conv.dual_mul == "std" else H.comul.transpose(2, 1, 0)
    comul = H.mul.transpose(2, 0, 1) if conv.dual_comul == "std" else H.mul.transpose(2, 1, 0)
    return mul, comul


def straightening_tensor(H: HopfAlgebraData) -> np.ndarray:
    """Coefficients of l_j h_k = sum h_(2) . l_j(h_(1) - S(h_(3))) in the basis h_b l_x."""
    d2 = iterated_coproduct(H, 2)
    return einsum("kabc,axu,cs,usj->jkbx", d2, H.mul, H.antipode, H.mul)


def double_tensors(H: HopfAlgebraData, conv: DoubleConvention = DEFAULT_CONVENTION):
    n = H.dim
    dmul, dcomul = dual_structure(H, conv)
    st = straightening_tensor(H)
    mul = einsum("jkbx,ibp,xmq->ijkmpq", st, H.mul, dmul).reshape(n * n, n * n, n * n)
    comul = einsum("iab,jcd->ijacbd", H.comul, dcomul).reshape(n * n, n * n, n * n)
    unit = np.multiply.outer(H.unit, H.counit).reshape(n * n)
    counit = np.multiply.outer(H.counit, H.unit).reshape(n * n)
    return mul, unit, comul, counit, st


def drinfeld_double(H: HopfAlgebraData, conv: DoubleConvention = DEFAULT_CONVENTION) -> DoubleData:
    """Build D(H); the antipode is solved for and every Hopf axiom is checked."""
    n = H.dim
    mul, unit, comul, counit, st = double_tensors(H, conv)
    try:
        D = make_hopf(H.field, mul, unit, comul, counit)
    except NoAntipode as exc:
        raise ArithmeticError(f"D(H) has no antipode under {conv}: {exc}") from None
    report = verify_hopf(D)
    if not report.ok:
        bad = report.failures[0]
        raise ArithmeticError(f"D(H) fails {bad.name} under {conv} at {bad.witness}")
    eH = np.multiply.outer(H.field.identity(n), H.counit).reshape(n, n * n)
    eL = np.multiply.outer(H.unit, H.field.identity(n)).transpose(1, 0, 2).reshape(n, n * n)
    return DoubleData(H, D, conv, st, eH, eL)


def verify_double(DD: DoubleData) -> AxiomReport:
    H, D = DD.base, DD.hopf
    r = verify_hopf(D)
    dmul, _ = dual_structure(H, DD.convention)
    for name, E, m in (("H", DD.embed_H, H.mul), ("H*", DD.embed_dual, dmul)):
        r.add(f"{name} embedding injective", rank(E) == H.dim)
        r.compare(
            f"{name} embedding multiplicative",
            einsum("ip,jq,pqy->ijy", E, E, D.mul),
            einsum("ijx,xy->ijy", m, E),
            2,
        )
    # l h computed in D(H) against the straightening rule
    n = H.dim
    r.compare(
        "straightening relation",
        einsum("jp,kq,pqy->jky", DD.embed_dual, DD.embed_H, D.mul),
        DD.straightening.reshape(n, n, n * n),
        2,
    )
    return r


def dual_action(M: YDModuleData) -> np.ndarray:
    """l_x . m = l_x(m_(-1)) m_(0), as act[x, m, m']."""
    return M.coaction.transpose(1, 0, 2).copy()


def double_representation(DD: DoubleData, M: YDModuleData) -> np.ndarray:
    """(h l) . m = h . (l . m) in row convention."""
    n = DD.base.dim
    return einsum("jmu,iuw->ijmw", dual_action(M), M.action).reshape(n * n, M.dim, M.dim)


def recover_coaction(DD: DoubleData, rep: np.ndarray, basis_change=None) -> np.ndarray:
    """m -> sum_i b_i (x) phi_i . m for a basis b of H with dual basis phi.

    ``basis_change`` is the matrix P with b_i = sum_a P[i, a] h_a (identity if None).
    """
    H = DD.base
    n = H.dim
    P = H.field.identity(n) if basis_change is None else basis_change
    Pinv = inverse(P, H.field)
    lact = einsum("jp,pmw->jmw", DD.embed_dual, rep)
    phi_act = einsum("ai,amw->imw", Pinv, lact)
    return einsum("imw,ic->mcw", phi_act, P)


def yd_double_roundtrip(DD: DoubleData, M: YDModuleData, basis_changes=()) -> AxiomReport:
    """Check M is a D(H)-module and that restricting back recovers its action and coaction."""
    rep = double_representation(DD, M)
    r = verify_module(DD.hopf, rep, prefix="D(H) ")
    n = DD.base.dim
    r.compare("H part recovered", einsum("ip,pmw->imw", DD.embed_H, rep), M.action, 2)
    for k, P in enumerate((None, *basis_changes)):
        r.compare(f"coaction recovered (dual basis {k})", recover_coaction(DD, rep, P), M.coaction, 2)
    r.add("D(H) dimension", DD.dim == n * n)
    return r


def convention_search(hopfs, yd_fixtures=()) -> dict[DoubleConvention, AxiomReport]:
    """Score every convention: D(H) must be Hopf for each H, and YD verdicts must match module verdicts."""
    results = {}
    for conv in CONVENTIONS:
        r = AxiomReport()
        doubles = {}
        for label, H in hopfs:
            try:
                doubles[label] = drinfeld_double(H, conv)
                r.add(f"D({label}) Hopf", True)
            except ArithmeticError as exc:
                r.add(f"D({label}) Hopf", False, note=str(exc))
        for label, hlabel, M in yd_fixtures:
            if hlabel not in doubles:
                continue
            rt = yd_double_roundtrip(doubles[hlabel], M)
            r.add(f"{label}: D(H)-module iff YD", rt.ok == verify_yd(M).ok)
        results[conv] = r
    return results
