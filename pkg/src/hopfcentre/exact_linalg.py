"""Exact scalars with dense elimination, plus sparse structure tensors.

Everything downstream stores linear data as numpy object arrays whose entries
are either Python ints (neutral constants), ``gmpy2.mpq`` (rational field) or
:class:`Mod` (prime field).  Linear maps use the row convention:
a map f: V -> W is an array ``F`` with ``f(e_i) = sum_j F[i, j] w_j``, so a
coefficient vector ``v`` maps to ``v @ F`` and "f then g" is ``F @ G``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

import numpy as np
from gmpy2 import mpq

_RATIONAL_TYPES = (Fraction, type(mpq(0)))


class FieldMismatch(ValueError):
    pass


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


class Mod:
    """Residue class modulo a prime."""

    __slots__ = ("r", "p")

    def __init__(self, r: int, p: int):
        self.r = r % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, Mod):
            if other.p != self.p:
                raise FieldMismatch(f"GF({self.p}) vs GF({other.p})")
            return other.r
        if isinstance(other, int):
            return other
        if isinstance(other, _RATIONAL_TYPES):
            raise FieldMismatch(f"GF({self.p}) vs rationals")
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Mod(self.r + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Mod(self.r - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Mod(o - self.r, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Mod(self.r * o, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return Mod(-self.r, self.p)

    def __pos__(self):
        return self

    def inverse(self) -> "Mod":
        if self.r == 0:
            raise ZeroDivisionError("division by zero in GF(%d)" % self.p)
        return Mod(pow(self.r, -1, self.p), self.p)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * Mod(o, self.p).inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Mod(o, self.p) * self.inverse()

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self.r - o) % self.p == 0

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __hash__(self):
        return hash((self.r, self.p))

    def __bool__(self):
        return self.r != 0

    def __repr__(self):
        return f"Mod({self.r}, {self.p})"

    def __str__(self):
        return str(self.r)


@dataclass(frozen=True)
class Field:
    """Field descriptor: ``Field()`` is Q, ``Field(p)`` is GF(p)."""

    p: int = 0

    def __post_init__(self):
        if self.p and not is_prime(self.p):
            raise ValueError(f"modulus not prime: {self.p}")

    @property
    def is_rational(self) -> bool:
        return self.p == 0

    def __call__(self, x):
        if self.p:
            if isinstance(x, Mod):
                if x.p != self.p:
                    raise FieldMismatch(f"GF({x.p}) element in GF({self.p})")
                return x
            if isinstance(x, _RATIONAL_TYPES):
                x = mpq(x)
                return Mod(int(x.numerator), self.p) / Mod(int(x.denominator), self.p)
            return Mod(int(x), self.p)
        if isinstance(x, Mod):
            raise FieldMismatch("GF element in rational computation")
        return mpq(x)

    def parse(self, text: str):
        return self(mpq(text))

    def format(self, x) -> str:
        if self.p:
            return str(self(x).r)
        return str(mpq(x))

    def zeros(self, *shape) -> np.ndarray:
        # plain int zeros keep sparse einsum contractions cheap; every nonzero is a field element
        a = np.empty(shape, dtype=object)
        a.fill(0)
        return a

    def identity(self, n: int) -> np.ndarray:
        a = self.zeros(n, n)
        for i in range(n):
            a[i, i] = self(1)
        return a

    def array(self, rows) -> np.ndarray:
        a = np.array(rows, dtype=object)
        flat = a.reshape(-1)
        for i, x in enumerate(flat):
            flat[i] = self(x) if x != 0 else 0
        return a

    def __str__(self):
        return "rational" if self.p == 0 else f"gf {self.p}"


QQ = Field()


def field_of(*arrays) -> Field | None:
    """Infer the common field of the entries; ints are neutral. Raises on mixing."""
    found: Field | None = None
    for arr in arrays:
        for x in np.asarray(arr, dtype=object).reshape(-1):
            if isinstance(x, Mod):
                f = Field(x.p)
            elif isinstance(x, _RATIONAL_TYPES):
                f = QQ
            else:
                continue
            if found is None:
                found = f
            elif found != f:
                raise FieldMismatch(f"mixed field descriptors: {found} and {f}")
    return found


def is_zero(a) -> bool:
    return not np.any(np.asarray(a, dtype=object) != 0)


def nonzero_indices(a) -> list[tuple[int, ...]]:
    a = np.asarray(a, dtype=object)
    return [tuple(int(i) for i in idx) for idx in np.argwhere(a != 0)]


def rref(M, field: Field | None = None) -> tuple[np.ndarray, tuple[int, ...]]:
    """Reduced row-echelon form and pivot columns (first nonzero column wins)."""
    A = np.array(M, dtype=object)
    if A.ndim != 2:
        raise ValueError("rref expects a matrix")
    fld = field or field_of(A) or QQ
    rows, cols = A.shape
    A = np.array([[fld(x) if x != 0 else 0 for x in row] for row in A], dtype=object).reshape(rows, cols)
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        piv = None
        for i in range(r, rows):
            if A[i, c] != 0:
                piv = i
                break
        if piv is None:
            continue
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        inv = 1 / A[r, c]
        A[r] = A[r] * inv
        for i in range(rows):
            if i != r and A[i, c] != 0:
                A[i] = A[i] - A[i, c] * A[r]
        pivots.append(c)
        r += 1
    return A, tuple(pivots)


def rank(M) -> int:
    M = np.asarray(M, dtype=object)
    if M.size == 0:
        return 0
    return len(rref(M)[1])


def kernel_basis(M, field: Field | None = None) -> list[np.ndarray]:
    """Right null space {v : M v = 0}, one vector per free column (increasing)."""
    M = np.asarray(M, dtype=object)
    fld = field or field_of(M) or QQ
    cols = M.shape[1]
    if M.shape[0] == 0:
        R, pivots = fld.zeros(0, cols), ()
    else:
        R, pivots = rref(M, fld)
    free = [c for c in range(cols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = fld.zeros(cols)
        v[f] = fld(1)
        for r, pc in enumerate(pivots):
            v[pc] = -R[r, f]
        basis.append(v)
    return basis


def null_space_rows(F, field: Field | None = None) -> np.ndarray:
    """Basis (as rows) of {v : v @ F = 0} for a row-convention map F."""
    F = np.asarray(F, dtype=object)
    fld = field or field_of(F) or QQ
    vecs = kernel_basis(F.T, fld)
    if not vecs:
        return fld.zeros(0, F.shape[0])
    return np.array(vecs, dtype=object).reshape(len(vecs), F.shape[0])


def inverse(M, field: Field | None = None) -> np.ndarray:
    M = np.asarray(M, dtype=object)
    n = M.shape[0]
    if M.shape != (n, n):
        raise ValueError("inverse of a non-square matrix")
    fld = field or field_of(M) or QQ
    aug = np.concatenate([M, fld.identity(n)], axis=1)
    R, pivots = rref(aug, fld)
    if pivots[:n] != tuple(range(n)):
        raise np.linalg.LinAlgError("singular matrix")
    return R[:, n:]


def solve(A, b, field: Field | None = None) -> np.ndarray | None:
    """One solution x of A x = b (free variables set to zero), or None."""
    A = np.asarray(A, dtype=object)
    b = np.asarray(b, dtype=object).reshape(-1, 1)
    fld = field or field_of(A, b) or QQ
    n = A.shape[1]
    R, pivots = rref(np.concatenate([A, b], axis=1), fld)
    if n in pivots:
        return None
    x = fld.zeros(n)
    for r, pc in enumerate(pivots):
        x[pc] = R[r, n]
    return x


def row_space(B, field: Field | None = None) -> np.ndarray:
    """Canonical basis (nonzero RREF rows) of the row space of B."""
    B = np.asarray(B, dtype=object)
    fld = field or field_of(B) or QQ
    if B.shape[0] == 0:
        return fld.zeros(0, B.shape[1])
    R, pivots = rref(B, fld)
    return R[: len(pivots)]


def same_row_space(B1, B2) -> bool:
    R1, R2 = row_space(B1), row_space(B2)
    return R1.shape == R2.shape and is_zero(R1 - R2)


class NotInSpan(ValueError):
    pass


def coordinates(B, V, field: Field | None = None) -> np.ndarray:
    """Coefficients C with C @ B = V for the rows of V; B has independent rows.

    Raises NotInSpan with the first offending row index otherwise.
    """
    B = np.asarray(B, dtype=object)
    V = np.asarray(V, dtype=object)
    fld = field or field_of(B, V) or QQ
    k, n = B.shape
    if V.ndim == 1:
        V = V.reshape(1, -1)
    if k == 0:
        if not is_zero(V):
            raise NotInSpan(int(nonzero_indices(V)[0][0]))
        return fld.zeros(V.shape[0], 0)
    # B = T^{-1} R with R in RREF; pivots of R read off coordinates.
    aug = np.concatenate([B, fld.identity(k)], axis=1)
    R, pivots = rref(aug, fld)
    pivots = [p for p in pivots if p < n]
    if len(pivots) != k:
        raise ValueError("basis rows are linearly dependent")
    Rb, T = R[:, :n], R[:, n:]
    C = fld.zeros(V.shape[0], k)
    for row in range(V.shape[0]):
        coeff_r = np.array([V[row, pc] for pc in pivots], dtype=object)
        c = coeff_r @ T
        if not is_zero(c @ B - V[row]):
            raise NotInSpan(row)
        C[row] = c
    return C


@dataclass(frozen=True)
class StructureTensor:
    """Sparse rank-3 coefficient tensor; only nonzero entries are stored."""

    dims: tuple[int, int, int]
    entries: Mapping[tuple[int, int, int], object] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for idx, c in self.entries.items():
            if len(idx) != 3 or any(not 0 <= i < d for i, d in zip(idx, self.dims)):
                raise IndexError(f"index {idx} outside dims {self.dims}")
            if c != 0:
                clean[tuple(int(i) for i in idx)] = c
        object.__setattr__(self, "entries", dict(sorted(clean.items())))

    @classmethod
    def from_dense(cls, a) -> "StructureTensor":
        a = np.asarray(a, dtype=object)
        return cls(tuple(a.shape), {idx: a[idx] for idx in nonzero_indices(a)})

    def dense(self, field: Field = QQ) -> np.ndarray:
        a = field.zeros(*self.dims)
        for idx, c in self.entries.items():
            a[idx] = field(c)
        return a

    def __eq__(self, other):
        if not isinstance(other, StructureTensor):
            return NotImplemented
        return self.dims == other.dims and self.entries.keys() == other.entries.keys() and all(
            self.entries[k] == other.entries[k] for k in self.entries
        )

    def __hash__(self):
        return hash((self.dims, tuple(self.entries)))


def contract(t: StructureTensor | np.ndarray, slot: int, v, field: Field | None = None) -> np.ndarray:
    """Sum the tensor against ``v`` over index ``slot``; the other two indices remain in order."""
    dense = t.dense(field or QQ) if isinstance(t, StructureTensor) else np.asarray(t, dtype=object)
    v = np.asarray(v, dtype=object)
    if dense.ndim != 3:
        raise ValueError("contract expects a rank-3 tensor")
    if not 0 <= slot < 3:
        raise ValueError(f"bad slot {slot}")
    if v.shape != (dense.shape[slot],):
        raise ValueError(f"vector length {v.shape} does not match slot dimension {dense.shape[slot]}")
    field_of(dense, v)
    return np.tensordot(v, dense, axes=([0], [slot]))


def kron(a, b) -> np.ndarray:
    """Kronecker product of two maps in row convention (index (i, j) -> i*len(b)+j)."""
    a = np.asarray(a, dtype=object)
    b = np.asarray(b, dtype=object)
    out = einsum("ij,kl->ikjl", a, b)
    return out.reshape(a.shape[0] * b.shape[0], a.shape[1] * b.shape[1])


def basis_vector(field: Field, n: int, i: int) -> np.ndarray:
    v = field.zeros(n)
    v[i] = field(1)
    return v


def as_fields(rows: Iterable[Sequence], field: Field) -> np.ndarray:
    return field.array(list(rows))


def _sparse(a: np.ndarray) -> dict[tuple[int, ...], object]:
    return {tuple(int(i) for i in idx): a[tuple(idx)] for idx in np.argwhere(a != 0)}


def einsum(spec: str, *operands, optimize=None) -> np.ndarray:
    """Exact ``np.einsum`` for object arrays that only touches nonzero entries.

    Operands are joined pairwise on shared indices, greedily starting from the
    sparsest one, and indices are summed out as soon as no later operand or the
    output needs them.  ``optimize`` is accepted for signature compatibility.
    """
    inputs, out = spec.replace(" ", "").split("->")
    terms = inputs.split(",")
    arrays = [np.asarray(a, dtype=object) for a in operands]
    if len(terms) != len(arrays):
        raise ValueError("operand count does not match the subscripts")
    sizes: dict[str, int] = {}
    for t, a in zip(terms, arrays):
        if len(t) != a.ndim or len(set(t)) != len(t):
            raise ValueError(f"bad subscripts {t!r} for shape {a.shape}")
        for c, n in zip(t, a.shape):
            if sizes.setdefault(c, n) != n:
                raise ValueError(f"size mismatch on index {c!r}")
    pending = [(t, _sparse(a)) for t, a in zip(terms, arrays)]
    start = min(range(len(pending)), key=lambda i: len(pending[i][1]))
    acc_t, acc = pending.pop(start)

    def reduce(t, entries, keep):
        pos = [t.index(c) for c in keep]
        if len(pos) == len(t):
            return t, entries
        res: dict = {}
        for k, v in entries.items():
            kk = tuple(k[p] for p in pos)
            res[kk] = res[kk] + v if kk in res else v
        return "".join(keep), res

    def needed(t, rest):
        later = set(out).union(*[set(r[0]) for r in rest]) if rest else set(out)
        return [c for c in t if c in later]

    acc_t, acc = reduce(acc_t, acc, needed(acc_t, pending))
    while pending:
        linked = [i for i, (t, _) in enumerate(pending) if set(t) & set(acc_t)]
        pool = linked or range(len(pending))
        j = min(pool, key=lambda i: len(pending[i][1]))
        t, entries = pending.pop(j)
        t, entries = reduce(t, entries, needed(t, pending + [(acc_t, None)]))
        shared = [c for c in acc_t if c in t]
        extra = [c for c in t if c not in shared]
        sa = [acc_t.index(c) for c in shared]
        sb = [t.index(c) for c in shared]
        eb = [t.index(c) for c in extra]
        index: dict = {}
        for k, v in entries.items():
            index.setdefault(tuple(k[p] for p in sb), []).append((tuple(k[p] for p in eb), v))
        joined_t = acc_t + "".join(extra)
        keep = needed(joined_t, pending)
        kpos = [joined_t.index(c) for c in keep]
        res: dict = {}
        for k, v in acc.items():
            for ek, w in index.get(tuple(k[p] for p in sa), ()):
                full = k + ek
                kk = tuple(full[p] for p in kpos)
                x = v * w
                res[kk] = res[kk] + x if kk in res else x
        acc_t, acc = "".join(keep), res
    acc_t, acc = reduce(acc_t, acc, [c for c in acc_t if c in out])
    result = np.empty(tuple(sizes[c] for c in out), dtype=object)
    result.fill(0)
    perm = [acc_t.index(c) for c in out]
    for k, v in acc.items():
        if v != 0:
            result[tuple(k[p] for p in perm)] = v
    return result
