"""Small named Hopf algebras and module algebras shared by the tests and the CLI."""

from __future__ import annotations

from .exact_linalg import QQ, Field
from .hopf import HopfAlgebraData, make_hopf
from .modalg import (
    AlgebraData,
    ModuleAlgebraData,
    cyclic_group,
    dual_group_hopf,
    g_action_algebra,
    graded_algebra,
    group_hopf,
    matrix_algebra,
    symmetric_group_s3,
)

C2 = cyclic_group(2)
C3 = cyclic_group(3)
S3 = symmetric_group_s3()


def kc2(field: Field = QQ) -> HopfAlgebraData:
    """F1: the group algebra of C2 on (e, g)."""
    return group_hopf(C2, field)


def sweedler(field: Field = QQ, with_antipode: bool = True) -> HopfAlgebraData:
    """F3: Sweedler's 4-dim algebra on (1, g, x, gx); g^a x^b has index a + 2b."""
    n = 4
    mul = field.zeros(n, n, n)
    for a in range(2):
        for b in range(2):
            for c in range(2):
                for d in range(2):
                    if b + d >= 2:
                        continue
                    sign = -1 if b * c else 1
                    mul[a + 2 * b, c + 2 * d, (a + c) % 2 + 2 * (b + d)] = field(sign)
    comul = field.zeros(n, n, n)
    comul[0, 0, 0] = field(1)
    comul[1, 1, 1] = field(1)
    comul[2, 2, 0] = field(1)  # x (x) 1
    comul[2, 1, 2] = field(1)  # g (x) x
    comul[3, 3, 1] = field(1)  # gx (x) g
    comul[3, 0, 3] = field(1)  # 1 (x) gx
    unit = field.array([1, 0, 0, 0])
    counit = field.array([1, 1, 0, 0])
    S = None
    if with_antipode:
        S = field.zeros(n, n)
        S[0, 0] = field(1)
        S[1, 1] = field(1)
        S[2, 3] = field(-1)  # S(x) = -gx
        S[3, 2] = field(1)  # S(gx) = x
    return make_hopf(field, mul, unit, comul, counit, S)


def ks3(field: Field = QQ) -> HopfAlgebraData:
    return group_hopf(S3, field)


def fun_s3(field: Field = QQ) -> HopfAlgebraData:
    return dual_group_hopf(S3, field)


def kc3(field: Field = QQ) -> HopfAlgebraData:
    return group_hopf(C3, field)


def x_squared_one(field: Field = QQ) -> AlgebraData:
    """k[x]/(x^2 - 1) on (1, x)."""
    mul = field.zeros(2, 2, 2)
    mul[0, 0, 0] = mul[0, 1, 1] = mul[1, 0, 1] = mul[1, 1, 0] = field(1)
    return AlgebraData(field, mul, field.array([1, 0]))


def f4(field: Field = QQ) -> ModuleAlgebraData:
    """C2 acting on k[x]/(x^2 - 1) by x -> -x."""
    A = x_squared_one(field)
    return g_action_algebra(C2, A, [field.identity(2), field.array([[1, 0], [0, -1]])])


def f5(field: Field = QQ) -> ModuleAlgebraData:
    """C2 acting on Mat_2(k) by conjugation with diag(1, -1)."""
    A = matrix_algebra(field, 2)
    # E_pq -> d_p d_q E_pq
    conj = field.array([[1, 0, 0, 0], [0, -1, 0, 0], [0, 0, -1, 0], [0, 0, 0, 1]])
    return g_action_algebra(C2, A, [field.identity(4), conj])


def graded_kc2(field: Field = QQ) -> ModuleAlgebraData:
    """k[C2] graded by C2 (e in degree e, g in degree g), as a k(C2)-module algebra."""
    H = kc2(field)
    return graded_algebra(C2, AlgebraData(field, H.mul, H.unit), [0, 1])


def graded_x_squared_one(field: Field = QQ) -> ModuleAlgebraData:
    """k[x]/(x^2 - 1) with x of degree g."""
    return graded_algebra(C2, x_squared_one(field), [0, 1])


def graded_trivial_mat2(field: Field = QQ) -> ModuleAlgebraData:
    """Mat_2(k) concentrated in degree e over C2."""
    return graded_algebra(C2, matrix_algebra(field, 2), [0, 0, 0, 0])


def graded_mat2_c2(field: Field = QQ) -> ModuleAlgebraData:
    """Mat_2(k) with diagonal units in degree e and off-diagonal units in degree g."""
    return graded_algebra(C2, matrix_algebra(field, 2), [0, 1, 1, 0])


def graded_s3_group_algebra(field: Field = QQ) -> ModuleAlgebraData:
    """k[S3] graded by S3 through its group basis."""
    H = ks3(field)
    return graded_algebra(S3, AlgebraData(field, H.mul, H.unit), list(range(6)))


HOPF_FIXTURES = {
    "kc2": kc2,
    "kc3": kc3,
    "ks3": ks3,
    "fun_s3": fun_s3,
    "sweedler": sweedler,
}
