"""Algebras with a Hopf action, and the standard builders (including groups).

An H-action on A is the tensor ``act[h, j, k]``: e_h(a_j) = sum_k act[h, j, k] a_k.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .exact_linalg import einsum, Field, is_zero, nonzero_indices, rank
from .hopf import HopfAlgebraData, make_hopf
from .report import AxiomReport


class BuilderError(ValueError):
    def __init__(self, message: str, witness: tuple | None = None):
        super().__init__(message if witness is None else f"{message} (witness {witness})")
        self.witness = witness


@dataclass(frozen=True, eq=False)
class AlgebraData:
    field: Field
    mul: np.ndarray
    unit: np.ndarray

    @property
    def dim(self) -> int:
        return len(self.unit)

    def product(self, x, y) -> np.ndarray:
        return einsum("i,j,ijk->k", x, y, self.mul)

    def left_mult(self, x) -> np.ndarray:
        """Row-convention matrix of v -> x v."""
        return einsum("i,ijk->jk", x, self.mul)

    def right_mult(self, x) -> np.ndarray:
        return einsum("j,ijk->ik", x, self.mul)


@dataclass(frozen=True, eq=False)
class ModuleAlgebraData:
    hopf: HopfAlgebraData
    alg: AlgebraData
    action: np.ndarray

    @property
    def field(self) -> Field:
        return self.hopf.field


@dataclass(frozen=True, eq=False)
class GroupData:
    table: tuple[tuple[int, ...], ...]
    identity: int
    inverse: tuple[int, ...]
    names: tuple[str, ...] | None = None

    @property
    def order(self) -> int:
        return len(self.table)

    def mul(self, g: int, h: int) -> int:
        return self.table[g][h]

    def inv(self, g: int) -> int:
        return self.inverse[g]

    def conj(self, f: int, g: int) -> int:
        """f g f^-1"""
        return self.mul(self.mul(f, g), self.inv(f))

    def name(self, g: int) -> str:
        return self.names[g] if self.names else str(g)

    @classmethod
    def from_table(cls, table, names=None) -> "GroupData":
        table = tuple(tuple(int(x) for x in row) for row in table)
        n = len(table)
        if n == 0 or any(len(row) != n for row in table):
            raise BuilderError("Cayley table must be a non-empty square")
        for row in table:
            for x in row:
                if not 0 <= x < n:
                    raise BuilderError("Cayley table entry out of range", (x,))
        for a in range(n):
            for b in range(n):
                for c in range(n):
                    if table[table[a][b]][c] != table[a][table[b][c]]:
                        raise BuilderError("Cayley table is not associative", (a, b, c))
        ids = [e for e in range(n) if all(table[e][g] == g and table[g][e] == g for g in range(n))]
        if not ids:
            raise BuilderError("Cayley table has no identity")
        e = ids[0]
        inverse = []
        for g in range(n):
            inv = [h for h in range(n) if table[g][h] == e and table[h][g] == e]
            if not inv:
                raise BuilderError("element has no inverse", (g,))
            inverse.append(inv[0])
        return cls(table, e, tuple(inverse), tuple(names) if names else None)


def cyclic_group(n: int) -> GroupData:
    return GroupData.from_table([[(a + b) % n for b in range(n)] for a in range(n)])


def symmetric_group_s3() -> GroupData:
    """S3 as permutations of (0, 1, 2), composed as (a*b)(x) = a(b(x))."""
    perms = [(0, 1, 2), (1, 2, 0), (2, 0, 1), (1, 0, 2), (0, 2, 1), (2, 1, 0)]
    idx = {p: i for i, p in enumerate(perms)}
    table = [[idx[tuple(a[b[x]] for x in range(3))] for b in perms] for a in perms]
    names = ["e", "r", "r2", "s01", "s12", "s02"]
    return GroupData.from_table(table, names)


def verify_algebra(A: AlgebraData) -> AxiomReport:
    m, u = A.mul, A.unit
    I = A.field.identity(A.dim)
    r = AxiomReport()
    r.compare("algebra associativity", einsum("ijx,xky->ijky", m, m), einsum("jkx,ixy->ijky", m, m), 3)
    r.compare("algebra left unit", einsum("u,uiy->iy", u, m), I, 1)
    r.compare("algebra right unit", einsum("u,iuy->iy", u, m), I, 1)
    return r


def verify_module(H: HopfAlgebraData, act: np.ndarray, prefix: str = "") -> AxiomReport:
    """(gh)(a) = g(h(a)) and 1(a) = a."""
    n = act.shape[1]
    r = AxiomReport()
    r.compare(
        prefix + "module associativity",
        einsum("ghx,xay->ghay", H.mul, act),
        einsum("hab,gby->ghay", act, act),
        3,
    )
    r.compare(prefix + "module unit", einsum("u,uay->ay", H.unit, act), H.field.identity(n), 1)
    return r


def verify_module_algebra(M: ModuleAlgebraData) -> AxiomReport:
    H, A, act = M.hopf, M.alg, M.action
    if act.shape != (H.dim, A.dim, A.dim):
        raise ValueError(f"action shape {act.shape} does not match ({H.dim}, {A.dim}, {A.dim})")
    r = verify_algebra(A)
    r.extend(verify_module(H, act))
    r.compare(
        "module algebra law",
        einsum("abx,hxy->haby", A.mul, act),
        einsum("hpq,pas,qbt,sty->haby", H.comul, act, act, A.mul, optimize=True),
        3,
    )
    r.compare(
        "action on unit",
        einsum("u,huy->hy", A.unit, act),
        np.multiply.outer(H.counit, A.unit),
        1,
    )
    return r


def trivial_algebra(field: Field) -> AlgebraData:
    return AlgebraData(field, field.array([[[1]]]), field.array([1]))


def trivial_module_algebra(H: HopfAlgebraData) -> ModuleAlgebraData:
    act = H.field.zeros(H.dim, 1, 1)
    act[:, 0, 0] = H.counit
    return ModuleAlgebraData(H, trivial_algebra(H.field), act)


def dual_regular_module_algebra(H: HopfAlgebraData) -> ModuleAlgebraData:
    """H* with (h.l)(g) = l(gh); the algebra H* multiplies by transposed comultiplication."""
    A = AlgebraData(H.field, np.transpose(H.comul, (1, 2, 0)).copy(), H.counit.copy())
    # (e_h . e^j)(e_g) = sum_k mul[g, h, k] e^j(e_k) = mul[g, h, j]
    act = np.transpose(H.mul, (1, 2, 0)).copy()
    return ModuleAlgebraData(H, A, act)


def matrix_algebra(field: Field, r: int) -> AlgebraData:
    """Mat_r(k) on matrix units E_pq, index p*r + q."""
    n = r * r
    mul = field.zeros(n, n, n)
    unit = field.zeros(n)
    for p in range(r):
        unit[p * r + p] = field(1)
        for q in range(r):
            for t in range(r):
                mul[p * r + q, q * r + t, p * r + t] = field(1)
    return AlgebraData(field, mul, unit)


def tensor_algebra(A: AlgebraData, B: AlgebraData) -> AlgebraData:
    """A (x) B with index i*dim B + j."""
    n = A.dim * B.dim
    mul = einsum("ikx,jly->ijklxy", A.mul, B.mul).reshape(n, n, n)
    unit = np.multiply.outer(A.unit, B.unit).reshape(n)
    return AlgebraData(A.field, mul, unit)


def matrix_amplify(M: ModuleAlgebraData, r: int) -> ModuleAlgebraData:
    """Mat_r(A) = Mat_r(k) (x) A with H acting on the A leg only."""
    if r < 1:
        raise ValueError("size must be >= 1")
    fld = M.field
    Mat = matrix_algebra(fld, r)
    alg = tensor_algebra(Mat, M.alg)
    n = alg.dim
    act = einsum("pq,hab->hpaqb", fld.identity(r * r), M.action).reshape(M.hopf.dim, n, n)
    return ModuleAlgebraData(M.hopf, alg, act)


def group_hopf(G: GroupData, field: Field) -> HopfAlgebraData:
    n = G.order
    mul = field.zeros(n, n, n)
    comul = field.zeros(n, n, n)
    S = field.zeros(n, n)
    unit = field.zeros(n)
    unit[G.identity] = field(1)
    for g in range(n):
        comul[g, g, g] = field(1)
        S[g, G.inv(g)] = field(1)
        for h in range(n):
            mul[g, h, G.mul(g, h)] = field(1)
    counit = field.array([1] * n)
    return make_hopf(field, mul, unit, comul, counit, S)


def dual_group_hopf(G: GroupData, field: Field) -> HopfAlgebraData:
    """k(G) on the delta functions p_g."""
    n = G.order
    mul = field.zeros(n, n, n)
    comul = field.zeros(n, n, n)
    S = field.zeros(n, n)
    counit = field.zeros(n)
    counit[G.identity] = field(1)
    for g in range(n):
        mul[g, g, g] = field(1)
        S[g, G.inv(g)] = field(1)
        for u in range(n):
            for v in range(n):
                if G.mul(u, v) == g:
                    comul[g, u, v] = field(1)
    unit = field.array([1] * n)
    return make_hopf(field, mul, unit, comul, counit, S)


def g_action_algebra(G: GroupData, A: AlgebraData, automorphisms) -> ModuleAlgebraData:
    """k[G]-module algebra with g acting by ``automorphisms[g]`` (row convention)."""
    fld = A.field
    mats = [fld.array(np.asarray(m, dtype=object).tolist()) for m in automorphisms]
    if len(mats) != G.order:
        raise BuilderError(f"need one matrix per group element, got {len(mats)}")
    for g, M in enumerate(mats):
        if M.shape != (A.dim, A.dim):
            raise BuilderError("automorphism has wrong shape", (g,))
        # g(a_i a_j) == g(a_i) g(a_j)
        lhs = einsum("ijx,xy->ijy", A.mul, M)
        rhs = einsum("ia,jb,aby->ijy", M, M, A.mul)
        bad = nonzero_indices(lhs - rhs)
        if bad:
            raise BuilderError("matrix is not multiplicative", (g,) + bad[0][:2])
        if not is_zero(A.unit @ M - A.unit):
            raise BuilderError("matrix does not fix the unit", (g,))
        if rank(M) != A.dim:
            raise BuilderError("matrix is not invertible", (g,))
    if not is_zero(mats[G.identity] - fld.identity(A.dim)):
        raise BuilderError("identity element does not act trivially", (G.identity,))
    for g in range(G.order):
        for h in range(G.order):
            # g(h(a)) = a @ M_h @ M_g
            if not is_zero(mats[h] @ mats[g] - mats[G.mul(g, h)]):
                raise BuilderError("action violates the Cayley table", (g, h))
    act = np.array(mats, dtype=object).reshape(G.order, A.dim, A.dim)
    return ModuleAlgebraData(group_hopf(G, fld), A, act)


def graded_algebra(G: GroupData, A: AlgebraData, degrees) -> ModuleAlgebraData:
    """k(G)-module algebra in which p_g projects onto the span of degree-g basis vectors."""
    degrees = tuple(int(d) for d in degrees)
    if len(degrees) != A.dim:
        raise BuilderError("one degree per basis vector is required")
    for d in degrees:
        if not 0 <= d < G.order:
            raise BuilderError("degree is not a group element", (d,))
    for i, j, k in nonzero_indices(A.mul):
        if degrees[k] != G.mul(degrees[i], degrees[j]):
            raise BuilderError("multiplication does not preserve the grading", (i, j, k))
    for (i,) in nonzero_indices(A.unit):
        if degrees[i] != G.identity:
            raise BuilderError("unit is not of degree e", (i,))
    fld = A.field
    act = fld.zeros(G.order, A.dim, A.dim)
    for i, d in enumerate(degrees):
        act[d, i, i] = fld(1)
    return ModuleAlgebraData(dual_group_hopf(G, fld), A, act)
