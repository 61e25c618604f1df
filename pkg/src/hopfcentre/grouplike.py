"""Group algebras and their duals: the category Z(G) and full centres of G-algebras and G-graded algebras.

A YD module over k[G] is a G-graded space (the coaction by grouplikes) with a
compatible G-action.  Over k(G) the roles swap: p_g projects onto the degree-g
part and the coaction delta(m) = sum_w p_w (x) rho_w(m) carries the G-action

    g . m = rho_{g^-1}(m),

which is the choice that makes the braiding read z (x) u -> u (x) g^-1(z)
for u of degree g.  On the function model of a graded centre this becomes
(g . z)(f) = z(f g).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .centre import FullCentreData, full_centre, projection_to_A, smash_action
from .exact_linalg import (
    NotInSpan,
    coordinates,
    einsum,
    inverse,
    is_zero,
    kron,
    null_space_rows,
    row_space,
    same_row_space,
)
from .modalg import GroupData, ModuleAlgebraData
from .report import AxiomReport
from .yd import YDAlgebraData, YDModuleData, braiding_matrix


class GradingError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class ZGObjectData:
    """An object of Z(G) written in a homogeneous basis.

    ``basis`` rows express the homogeneous vectors in the coordinates of the
    module it came from; ``action[g]`` is the row-convention matrix of g.
    """

    group: GroupData
    basis: np.ndarray
    degrees: tuple[int, ...]
    action: np.ndarray

    @property
    def dim(self) -> int:
        return len(self.degrees)

    def projector(self, g: int) -> np.ndarray:
        P = np.zeros((self.dim, self.dim), dtype=object)
        for i, d in enumerate(self.degrees):
            if d == g:
                P[i, i] = 1
        return P


def check_compatible(Z: ZGObjectData) -> AxiomReport:
    """f(V_g) lies in V_{f g f^-1}, and the action is a G-action."""
    G = Z.group
    r = AxiomReport()
    bad = None
    for f in range(G.order):
        for i, g in enumerate(Z.degrees):
            target = G.conj(f, g)
            row = Z.action[f, i]
            if any(row[j] != 0 and Z.degrees[j] != target for j in range(Z.dim)):
                bad = bad or (f, i)
    r.add("f(V_g) = V_{fgf^-1}", bad is None, bad)
    r.compare(
        "G-action",
        np.array([[Z.action[h] @ Z.action[g] for h in range(G.order)] for g in range(G.order)], dtype=object),
        np.array([[Z.action[G.mul(g, h)] for h in range(G.order)] for g in range(G.order)], dtype=object),
        2,
    )
    return r


def _homogeneous_basis(field, projectors) -> tuple[np.ndarray, tuple[int, ...]]:
    """Stack bases of the images of ``projectors[g]`` and check they split the space."""
    rows, degrees = [], []
    for g, P in enumerate(projectors):
        R = row_space(P, field)
        for v in R:
            for f, Q in enumerate(projectors):
                expected = v if f == g else 0 * v
                if not is_zero(v @ Q - expected):
                    raise GradingError(f"degree {g} vector is not an eigenvector of projector {f}")
            rows.append(v)
            degrees.append(g)
    d = projectors[0].shape[0]
    B = np.array(rows, dtype=object).reshape(len(rows), d)
    if len(rows) != d:
        raise GradingError(f"homogeneous pieces have total dimension {len(rows)}, expected {d}")
    return B, tuple(degrees)


def _transport_action(B, mats, field) -> np.ndarray:
    Binv = inverse(B, field)
    return np.array([B @ M @ Binv for M in mats], dtype=object).reshape(len(mats), B.shape[0], B.shape[0])


def zg_convert(G: GroupData, M: YDModuleData) -> ZGObjectData:
    """YD module over k[G] -> object of Z(G) (degree from the coaction, action unchanged)."""
    fld = M.field
    try:
        B, degrees = _homogeneous_basis(fld, [M.coaction[:, g, :] for g in range(G.order)])
    except GradingError as exc:
        raise GradingError(f"coaction is not by grouplikes: {exc}") from None
    act = _transport_action(B, [M.action[g] for g in range(G.order)], fld)
    return ZGObjectData(G, B, degrees, act)


def zg_to_yd(Z: ZGObjectData, hopf) -> YDModuleData:
    """Inverse of zg_convert, in the original coordinates of Z.basis."""
    fld = hopf.field
    B = Z.basis
    Binv = inverse(B, fld)
    act = np.array([Binv @ Z.action[g] @ B for g in range(Z.group.order)], dtype=object)
    co = np.array([Binv @ Z.projector(g) @ B for g in range(Z.group.order)], dtype=object)
    return YDModuleData(hopf, act.reshape(Z.group.order, Z.dim, Z.dim), co.transpose(1, 0, 2).copy())


def graded_yd_convert(G: GroupData, M: YDModuleData) -> ZGObjectData:
    """YD module over k(G) -> object of Z(G): degree from p_g, g acts by rho_{g^-1}."""
    fld = M.field
    B, degrees = _homogeneous_basis(fld, [M.action[g] for g in range(G.order)])
    act = _transport_action(B, [M.coaction[:, G.inv(g), :] for g in range(G.order)], fld)
    return ZGObjectData(G, B, degrees, act)


def graded_yd_from_zg(Z: ZGObjectData, hopf) -> YDModuleData:
    fld = hopf.field
    B = Z.basis
    Binv = inverse(B, fld)
    G = Z.group
    act = np.array([Binv @ Z.projector(g) @ B for g in range(G.order)], dtype=object)
    co = np.array([Binv @ Z.action[G.inv(w)] @ B for w in range(G.order)], dtype=object)
    return YDModuleData(hopf, act.reshape(G.order, Z.dim, Z.dim), co.transpose(1, 0, 2).copy())


def _in_homogeneous_basis(C, B1, B2, fld):
    """Matrix of a map V1 (x) V2 -> W1 (x) W2 after changing both sides to homogeneous bases."""
    return kron(B1, B2) @ C @ inverse(kron(B2, B1), fld)


def check_br(Z: ZGObjectData, M: YDModuleData) -> AxiomReport:
    """Braiding of M with itself against c(x (x) y) = f(y) (x) x for x of degree f."""
    fld = M.field
    C = _in_homogeneous_basis(braiding_matrix(M, M), Z.basis, Z.basis, fld)
    d = Z.dim
    expected = fld.zeros(d * d, d * d)
    for x in range(d):
        f = Z.degrees[x]
        for y in range(d):
            for y2 in range(d):
                if Z.action[f, y, y2] != 0:
                    expected[x * d + y, y2 * d + x] = Z.action[f, y, y2]
    r = AxiomReport()
    r.compare("braiding (br)", C, expected, 1)
    return r


def check_hb(Z: ZGObjectData, M: YDModuleData, U_degrees) -> AxiomReport:
    """Half-braiding of M (over k(G)) with a graded space U against z (x) u -> u (x) g^-1(z), u in U_g."""
    G = Z.group
    fld = M.field
    du = len(U_degrees)
    U_act = fld.zeros(G.order, du, du)
    for i, g in enumerate(U_degrees):
        U_act[g, i, i] = fld(1)
    U = YDModuleData(M.hopf, U_act, fld.zeros(du, G.order, du))
    C = kron(Z.basis, fld.identity(du)) @ braiding_matrix(M, U) @ inverse(kron(fld.identity(du), Z.basis), fld)
    d = Z.dim
    expected = fld.zeros(d * du, du * d)
    for z in range(d):
        for u, g in enumerate(U_degrees):
            for z2 in range(d):
                c = Z.action[G.inv(g), z, z2]
                if c != 0:
                    expected[z * du + u, u * d + z2] = c
    r = AxiomReport()
    r.compare("half-braiding (hb)", C, expected, 1)
    return r


def zg_algebra_checks(Z: ZGObjectData, A: YDAlgebraData) -> AxiomReport:
    """(ah) f(ab) = f(a) f(b) and (co) ab = f(b) a for a of degree f, in the homogeneous basis."""
    fld = A.field
    B = Z.basis
    Binv = inverse(B, fld)
    mul = einsum("ia,jb,abz,zk->ijk", B, B, A.mul, Binv)
    G = Z.group
    r = AxiomReport()
    r.compare(
        "(ah) action multiplicative",
        einsum("ijx,fxy->fijy", mul, Z.action),
        einsum("fia,fjb,aby->fijy", Z.action, Z.action, mul),
        3,
    )
    rhs = fld.zeros(*mul.shape)
    for i, f in enumerate(Z.degrees):
        rhs[i] = einsum("jb,by->jy", Z.action[f], mul[:, i, :])
    r.compare("(co) commutativity", mul, rhs, 2)
    return r


@dataclass(frozen=True, eq=False)
class GCentreData:
    """Z(A) = sum_g Z_g(A) for a G-algebra A; pieces[g] has rows in A-coordinates."""

    group: GroupData
    pieces: tuple[np.ndarray, ...]
    action: np.ndarray  # G-action on A, row convention
    report: AxiomReport

    @property
    def dim(self) -> int:
        return sum(p.shape[0] for p in self.pieces)

    def graded_dims(self) -> tuple[int, ...]:
        return tuple(p.shape[0] for p in self.pieces)


def centre_piece(M: ModuleAlgebraData, g: int) -> np.ndarray:
    """Z_g(A) = {x : x a = g(a) x for all a}."""
    A = M.alg
    m = A.dim
    # x -> x a_j - g(a_j) x, stacked over j
    left = einsum("xjz->jxz", A.mul)
    right = einsum("jb,bxz->jxz", M.action[g], A.mul)
    F = np.concatenate(list(left - right), axis=1)
    return row_space(null_space_rows(F, A.field), A.field) if m else A.field.zeros(0, 0)


def g_full_centre(G: GroupData, M: ModuleAlgebraData, Z: FullCentreData | None = None) -> GCentreData:
    """Graded pieces Z_g(A) and their cross-check against the centraliser in A#k[G].

    x in Z_g(A) corresponds to x # g^-1, which has coaction degree g.
    """
    fld = M.field
    n, m = G.order, M.alg.dim
    pieces = tuple(centre_piece(M, g) for g in range(n))
    r = AxiomReport()
    Z = Z or full_centre(M)
    r.add("dim agrees with centraliser", sum(p.shape[0] for p in pieces) == Z.dim)
    # x in Z_g -> x # g^-1 in A#k[G]
    rows, degs = [], []
    for g, P in enumerate(pieces):
        for x in P:
            v = fld.zeros(m * n)
            v[np.arange(m) * n + G.inv(g)] = x
            rows.append(v)
            degs.append(g)
    J = np.array(rows, dtype=object).reshape(len(rows), m * n)
    r.add("pieces span the centraliser", same_row_space(J, Z.basis) if len(rows) else Z.dim == 0)
    if not r.ok:
        return GCentreData(G, pieces, M.action, r)
    # coaction degree of x # g^-1 is g
    Q = coordinates(Z.basis, J)
    co = einsum("ik,kgl->igl", Q, Z.yd.coaction)
    deg_ok = all(
        is_zero(co[i, h] - (Q[i] if h == g else 0 * Q[i])) for i, g in enumerate(degs) for h in range(n)
    )
    r.add("degree of x # g^-1 is g", deg_ok, note="pieces indexed by coaction degree")
    # induced action: f(x # g^-1) = f(x) # f g^-1 f^-1
    act = smash_action(Z.source)
    expected = []
    for f in range(n):
        rowsf = []
        for i, g in enumerate(degs):
            x = J[i].reshape(m, n)[:, G.inv(g)]
            v = fld.zeros(m * n)
            v[np.arange(m) * n + G.conj(f, G.inv(g))] = x @ M.action[f]
            rowsf.append(v)
        expected.append(rowsf)
    lhs = einsum("ip,fpq->fiq", J, act)
    r.compare("G-action induced from A", lhs, np.array(expected, dtype=object), 2)
    return GCentreData(G, pieces, M.action, r)


@dataclass(frozen=True, eq=False)
class GradedCentreFunctionData:
    """Functions z: G -> A, stored as rows of length |G| dim A with z(f) at block f."""

    group: GroupData
    degrees: tuple[int, ...]  # of the basis of A
    functions: np.ndarray
    function_degrees: tuple[int, ...]
    report: AxiomReport
    left_action_agrees: bool

    @property
    def dim(self) -> int:
        return self.functions.shape[0]

    def evaluation(self, f: int) -> np.ndarray:
        m = len(self.degrees)
        return self.functions[:, f * m : (f + 1) * m]


def function_action(G: GroupData, m: int, g: int, rule: str = "right") -> np.ndarray:
    """Row-convention matrix on functions: (g.z)(f) = z(f g) (``right``) or z(g^-1 f) (``left``)."""
    n = G.order
    P = np.zeros((n * m, n * m), dtype=object)
    for f in range(n):
        src = G.mul(f, g) if rule == "right" else G.mul(G.inv(g), f)
        for a in range(m):
            P[src * m + a, f * m + a] = 1
    return P


def graded_full_centre(
    G: GroupData, M: ModuleAlgebraData, degrees, Z: FullCentreData | None = None
) -> GradedCentreFunctionData:
    """Solve a z(g) = z(hg) a for homogeneous a of degree h, one centre degree d at a time."""
    A, fld = M.alg, M.field
    n, m = G.order, A.dim
    degrees = tuple(degrees)
    blocks, fdeg = [], []
    for d in range(n):
        # allowed coordinates: z(f) in A_{f d f^-1}
        allowed = [f * m + a for f in range(n) for a in range(m) if degrees[a] == G.conj(f, d)]
        if not allowed:
            continue
        eqs = []
        for i in range(m):
            h = degrees[i]
            for g in range(n):
                # a_i z(g) - z(hg) a_i, as a linear map of z
                E = fld.zeros(n * m, m)
                E[g * m : (g + 1) * m] += A.mul[i]
                hg = G.mul(h, g)
                E[hg * m : (hg + 1) * m] -= A.mul[:, i, :]
                eqs.append(E)
        F = np.concatenate(eqs, axis=1)[allowed]
        K = null_space_rows(F, fld)
        for k in K:
            z = fld.zeros(n * m)
            z[allowed] = k
            blocks.append(z)
            fdeg.append(d)
    funcs = np.array(blocks, dtype=object).reshape(len(blocks), n * m)
    r = AxiomReport()
    Z = Z or full_centre(M)
    r.add("dim agrees with centraliser", funcs.shape[0] == Z.dim, note=f"{funcs.shape[0]} vs {Z.dim}")
    # z -> sum_f z(f) # p_f
    J = einsum("xfa->xaf", funcs.reshape(-1, n, m)).reshape(-1, m * n) if len(blocks) else fld.zeros(0, m * n)
    r.add("functions span the centraliser", same_row_space(J, Z.basis) if len(blocks) else Z.dim == 0)
    left_agrees = False
    if r.ok and len(blocks):
        Q = coordinates(Z.basis, J)
        Qinv = inverse(Q, fld)
        grade = einsum("ik,gkl->gil", Q, Z.yd.action)
        ok = all(
            is_zero(grade[d, i] - (Q[i] if d == fdeg[i] else 0 * Q[i])) for i in range(len(fdeg)) for d in range(n)
        )
        r.add("grading |z(f)| = f d f^-1 matches p_d action", ok)
        # G-action from the coaction: g . z = rho_{g^-1}(z)
        rho = [Q @ Z.yd.coaction[:, G.inv(g), :] @ Qinv for g in range(n)]
        model = [funcs @ function_action(G, m, g) for g in range(n)]
        r.compare(
            "G-action (g.z)(f) = z(fg)",
            np.array([rho[g] @ funcs for g in range(n)], dtype=object),
            np.array(model, dtype=object),
            2,
        )
        left = [funcs @ function_action(G, m, g, "left") for g in range(n)]
        left_agrees = all(is_zero(rho[g] @ funcs - left[g]) for g in range(n))
        r.compare("evaluation at e = canonical projection", Q @ Z.canonical_to_A, funcs[:, G.identity * m : (G.identity + 1) * m], 1)
    return GradedCentreFunctionData(G, degrees, funcs, tuple(fdeg), r, left_agrees)
