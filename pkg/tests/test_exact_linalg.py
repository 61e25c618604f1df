import numpy as np
import pytest
from fractions import Fraction
from gmpy2 import mpq
from hypothesis import given, strategies as st

from hopfcentre.exact_linalg import (
    QQ,
    Field,
    FieldMismatch,
    Mod,
    NotInSpan,
    StructureTensor,
    contract,
    coordinates,
    einsum,
    field_of,
    inverse,
    is_prime,
    kernel_basis,
    kron,
    null_space_rows,
    rank,
    rref,
    row_space,
    same_row_space,
    solve,
)
from hopfcentre.fixtures import kc2

GF7 = Field(7)
FIELDS = st.sampled_from([QQ, GF7, Field(2)])


def matrices(fld, max_rows=5, max_cols=5):
    @st.composite
    def build(draw):
        r = draw(st.integers(1, max_rows))
        c = draw(st.integers(1, max_cols))
        vals = draw(st.lists(st.integers(-3, 3), min_size=r * c, max_size=r * c))
        return fld.array(np.array(vals, dtype=object).reshape(r, c).tolist())

    return build()


@st.composite
def field_and_matrix(draw):
    fld = draw(FIELDS)
    return fld, draw(matrices(fld))


def test_prime_test():
    assert [p for p in range(20) if is_prime(p)] == [2, 3, 5, 7, 11, 13, 17, 19]


def test_mod_arithmetic():
    a, b = Mod(3, 7), Mod(5, 7)
    assert a + b == Mod(1, 7)
    assert a * b == 1
    assert a / b * b == a
    assert -a == 4
    assert 1 - a == Mod(5, 7)
    with pytest.raises(ZeroDivisionError):
        Mod(0, 7).inverse()


def test_mod_refuses_other_fields():
    with pytest.raises(FieldMismatch):
        Mod(1, 7) + Mod(1, 5)
    with pytest.raises(FieldMismatch):
        Mod(1, 7) + mpq(1, 2)


def test_field_descriptor():
    with pytest.raises(ValueError, match="not prime"):
        Field(4)
    assert QQ(Fraction(1, 2)) == mpq(1, 2)
    assert GF7(mpq(1, 2)) == Mod(4, 7)
    assert GF7.format(GF7(-1)) == "6"
    assert QQ.format(QQ.parse("6/4")) == "3/2"
    with pytest.raises(FieldMismatch):
        QQ(Mod(1, 7))


def test_mixed_fields_detected():
    with pytest.raises(FieldMismatch):
        field_of(QQ.array([1]), GF7.array([1]))


def test_rational_rref_lowest_terms():
    R, piv = rref(QQ.array([[2, 4], [3, 6]]))
    assert piv == (0,)
    assert R[0, 1] == 2 and R[0, 0] == 1


@given(field_and_matrix())
def test_kernel_is_kernel_and_rank_nullity(data):
    fld, M = data
    K = kernel_basis(M, fld)
    for v in K:
        assert all(x == 0 for x in M @ v)
    assert rank(M) + len(K) == M.shape[1]


@given(field_and_matrix())
def test_null_space_rows(data):
    fld, M = data
    N = null_space_rows(M, fld)
    assert all(x == 0 for x in (N @ M).ravel())
    assert N.shape[0] == M.shape[0] - rank(M)


@given(field_and_matrix())
def test_row_space_is_canonical(data):
    fld, M = data
    R = row_space(M, fld)
    # scaling and swapping rows does not change the canonical basis
    M2 = M[::-1] * fld(3 if fld.p != 3 else 2)
    assert same_row_space(M, M2)
    assert R.shape[0] == rank(M)


@st.composite
def invertible(draw):
    fld = draw(FIELDS)
    n = draw(st.integers(1, 4))
    vals = draw(st.lists(st.integers(-3, 3), min_size=n * n, max_size=n * n))
    U, L = fld.identity(n), fld.identity(n)
    for k, (i, j) in enumerate((i, j) for i in range(n) for j in range(n)):
        if i < j:
            U[i, j] = fld(vals[k])
        elif i > j:
            L[i, j] = fld(vals[k])
    return fld, U @ L


@given(invertible())
def test_inverse_roundtrip(data):
    fld, M = data
    n = M.shape[0]
    assert (M @ inverse(M, fld) == fld.identity(n)).all()
    assert (inverse(M, fld) @ M == fld.identity(n)).all()


def test_inverse_singular():
    with pytest.raises(np.linalg.LinAlgError):
        inverse(QQ.array([[1, 2], [2, 4]]))


def test_solve_consistent_and_inconsistent():
    A = QQ.array([[1, 1], [1, -1]])
    x = solve(A, QQ.array([3, 1]))
    assert list(x) == [2, 1]
    assert solve(QQ.array([[1, 1], [2, 2]]), QQ.array([1, 3])) is None


def test_coordinates_and_not_in_span():
    B = QQ.array([[1, 0, 1], [0, 1, 1]])
    V = QQ.array([[2, 3, 5]])
    assert list(coordinates(B, V)[0]) == [2, 3]
    with pytest.raises(NotInSpan):
        coordinates(B, QQ.array([[0, 0, 1]]))


def test_structure_tensor_sparse_roundtrip():
    H = kc2()
    t = StructureTensor.from_dense(H.mul)
    assert all(v != 0 for v in t.entries.values()) if isinstance(t.entries, dict) else True
    assert (t.dense(QQ) == H.mul).all()
    assert t == StructureTensor.from_dense(H.mul)


def test_contract_left_multiplication_by_e_plus_g():
    H = kc2()
    L = contract(H.mul, 0, QQ.array([1, 1]))
    # (e+g) e = e+g, (e+g) g = g+e
    assert (L == QQ.array([[1, 1], [1, 1]])).all()


def test_contract_rejects_bad_vector():
    with pytest.raises(ValueError):
        contract(kc2().mul, 0, QQ.array([1, 1, 1]))


def test_kron_matches_numpy():
    a = QQ.array([[1, 2], [0, 1]])
    b = QQ.array([[0, 1], [1, 0]])
    assert (kron(a, b) == np.kron(a, b)).all()


SPECS = [
    ("ijk,kl->ijl", [(2, 3, 4), (4, 2)]),
    ("hpqr,qab,rx,xgy,ps,ysz->hagbz", [(2, 2, 2, 2), (2, 3, 3), (2, 2), (2, 2, 2), (2, 2), (2, 2, 2)]),
    ("ij,kl->ikjl", [(2, 3), (3, 2)]),
    ("ijk->i", [(2, 3, 3)]),
    ("u,uyk->yk", [(3,), (3, 2, 2)]),
    ("ab,ab->", [(2, 2), (2, 2)]),
    ("xyz->zyx", [(2, 3, 4)]),
]


@given(st.sampled_from(SPECS), st.randoms(use_true_random=False), FIELDS)
def test_sparse_einsum_matches_numpy(spec_shapes, rnd, fld):
    spec, shapes = spec_shapes
    ops = []
    for s in shapes:
        a = fld.zeros(*s)
        for idx in np.ndindex(*s):
            if rnd.random() < 0.4:
                a[idx] = fld(rnd.randint(-3, 3))
        ops.append(a)
    got = einsum(spec, *ops)
    want = np.einsum(spec, *ops)
    assert np.all(np.asarray(got - want, dtype=object) == 0)


def test_einsum_rejects_bad_subscripts():
    with pytest.raises(ValueError):
        einsum("ij,jk->ik", QQ.zeros(2, 3), QQ.zeros(2, 2))
