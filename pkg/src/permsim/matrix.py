"""Dense square matrices over Z_p or the integers.

Residues mod primes below 2**62 are stored as int64 and go through the limb
kernels in :mod:`permsim._kernels`; larger primes and exact integers use
object arrays of Python ints.
"""

from __future__ import annotations

from collections.abc import Sequence

import numpy as np

from . import _kernels
from .ring import EXACT, RingConfig


# Below these sizes Python-int arithmetic beats the limb kernels.
_SMALL_MATMUL = 10
_SMALL_DET = 24


class DimensionMismatch(ValueError):
    pass


class RingMismatch(ValueError):
    pass


def _native(ring: RingConfig) -> bool:
    return ring.p is not None and _kernels.fits_int64(ring.p)


class Matrix:
    """Immutable n-by-n matrix tagged with its ring."""

    __slots__ = ("_a", "ring")

    def __init__(self, entries, ring: RingConfig = EXACT):
        if isinstance(entries, Matrix):
            entries = entries._a
        if (isinstance(entries, np.ndarray) and entries.dtype.kind == "i"
                and _native(ring)):
            arr = np.mod(entries.astype(np.int64), ring.p)
        else:
            arr = np.array(entries, dtype=object)
            if arr.ndim == 2:
                arr = np.vectorize(_as_int, otypes=[object])(arr) if arr.size else arr
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise DimensionMismatch(f"expected a square matrix, got shape {arr.shape}")
        if arr.shape[0] < 1:
            raise DimensionMismatch("matrix dimension must be at least 1")
        if ring.p is not None and arr.dtype == object:
            arr = arr % ring.p
            if _native(ring):
                arr = arr.astype(np.int64)
        self._set(arr, ring)

    def _set(self, arr: np.ndarray, ring: RingConfig) -> None:
        arr.flags.writeable = False
        object.__setattr__(self, "_a", arr)
        object.__setattr__(self, "ring", ring)

    @classmethod
    def _wrap(cls, arr: np.ndarray, ring: RingConfig) -> "Matrix":
        m = cls.__new__(cls)
        m._set(arr, ring)
        return m

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @classmethod
    def identity(cls, n: int, ring: RingConfig = EXACT) -> "Matrix":
        return cls(np.eye(n, dtype=np.int64), ring)

    @classmethod
    def zeros(cls, n: int, ring: RingConfig = EXACT) -> "Matrix":
        return cls(np.zeros((n, n), dtype=np.int64), ring)

    @classmethod
    def ones(cls, n: int, ring: RingConfig = EXACT) -> "Matrix":
        return cls(np.ones((n, n), dtype=np.int64), ring)

    @property
    def n(self) -> int:
        return self._a.shape[0]

    @property
    def entries(self) -> np.ndarray:
        """Read-only view of the underlying array."""
        return self._a

    def tolist(self) -> list[list[int]]:
        return [[int(x) for x in row] for row in self._a]

    def diagonal(self) -> list[int]:
        return [int(x) for x in self._a.diagonal()]

    def to_ring(self, ring: RingConfig) -> "Matrix":
        """Reduce an exact matrix mod p, or lift residues to integers."""
        if ring == self.ring:
            return self
        if self.ring.is_exact or ring.is_exact:
            return Matrix(self.tolist(), ring)
        raise RingMismatch(f"cannot move {self.ring} matrix to {ring}")

    def __getitem__(self, ij: tuple[int, int]) -> int:
        return int(self._a[ij])

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.ring == other.ring and self._a.shape == other._a.shape
                and bool(np.all(self._a == other._a)))

    __hash__ = None

    def __repr__(self):
        return f"Matrix({self.tolist()}, ring={self.ring})"


def _as_int(x) -> int:
    if isinstance(x, (bool, np.bool_)):
        return int(x)
    if isinstance(x, (int, np.integer)):
        return int(x)
    raise TypeError(f"matrix entries must be integers, got {x!r}")


def _check_pair(A: Matrix, B: Matrix) -> None:
    if A.n != B.n:
        raise DimensionMismatch(f"dimensions differ: {A.n} vs {B.n}")
    if A.ring != B.ring:
        raise RingMismatch(f"rings differ: {A.ring} vs {B.ring}")


def _mulmod(a, b, p: int | None):
    if p is None:
        return a * b
    if a.dtype == np.int64:
        return _kernels.mulmod(a, np.asarray(b, dtype=np.int64), p)
    return (a * b) % p


def _reduce(arr: np.ndarray, p: int | None) -> np.ndarray:
    return arr if p is None else arr % p


def mat_add(A: Matrix, B: Matrix) -> Matrix:
    _check_pair(A, B)
    return Matrix._wrap(_reduce(A._a + B._a, A.ring.p), A.ring)


def mat_sub(A: Matrix, B: Matrix) -> Matrix:
    _check_pair(A, B)
    return Matrix._wrap(_reduce(A._a - B._a, A.ring.p), A.ring)


def mat_mul(A: Matrix, B: Matrix) -> Matrix:
    """Classical cubic product in the common ring."""
    _check_pair(A, B)
    p = A.ring.p
    if A._a.dtype == np.int64 and A.n > _SMALL_MATMUL:
        out = _kernels.matmul_mod(A._a, B._a, p)
    elif A._a.dtype == np.int64:
        out = (A._a.astype(object).dot(B._a.astype(object)) % p).astype(np.int64)
    else:
        out = _reduce(A._a.dot(B._a), p)
    return Matrix._wrap(out, A.ring)


def scalar_mul(A: Matrix, s: int) -> Matrix:
    s = A.ring.reduce(s)
    if A._a.dtype == np.int64:
        return Matrix._wrap(_mulmod(A._a, s, A.ring.p), A.ring)
    return Matrix._wrap(_reduce(A._a * s, A.ring.p), A.ring)


def add_scaled_identity(A: Matrix, c: int) -> Matrix:
    c = A.ring.reduce(c)
    out = A._a.copy()
    idx = np.arange(A.n)
    out[idx, idx] = _reduce(out[idx, idx] + c, A.ring.p)
    return Matrix._wrap(out, A.ring)


def add_scaled_all_ones(A: Matrix, c: int) -> Matrix:
    """Return ``A + cJ`` with J the all-ones matrix."""
    c = A.ring.reduce(c)
    return Matrix._wrap(_reduce(A._a + c, A.ring.p), A.ring)


def horner_poly_eval(M: Matrix, coeffs: Sequence[int]) -> Matrix:
    """Evaluate ``c_1 M + c_2 M^2 + ... + c_n M^n`` (no constant term).

    Horner form ``((c_n M + c_{n-1} I) M + ... + c_1 I) M``: the innermost
    ``c_n M`` is a scalar scaling, leaving n - 1 matrix products.
    """
    if len(coeffs) != M.n:
        raise ValueError(f"expected {M.n} coefficients, got {len(coeffs)}")
    acc = scalar_mul(M, coeffs[-1])
    for c in reversed(coeffs[:-1]):
        acc = mat_mul(add_scaled_identity(acc, c), M)
    return acc


def zero_diagonal(M: Matrix) -> Matrix:
    """``M - diag(M)``."""
    out = M._a.copy()
    np.fill_diagonal(out, 0)
    return Matrix._wrap(out, M.ring)


def diag(M: Matrix) -> Matrix:
    """Diagonal matrix carrying the main diagonal of M."""
    out = np.zeros_like(M._a)
    np.fill_diagonal(out, M._a.diagonal())
    return Matrix._wrap(out, M.ring)


def det_mod_p(M: Matrix) -> int:
    """Determinant in Z_p by Gaussian elimination.

    Pivot is the first nonzero entry in the column; each row swap multiplies
    the running product by p - 1. Singular input gives 0.
    """
    p = M.ring.p
    if p is None:
        raise RingMismatch("det_mod_p needs a mod-p matrix")
    if M.n <= _SMALL_DET:
        return _det_mod_p_rows(M.tolist(), p)
    a = M._a.copy()
    n = M.n
    det = 1
    for col in range(n):
        nz = np.flatnonzero(a[col:, col])
        if nz.size == 0:
            return 0
        piv = col + int(nz[0])
        if piv != col:
            a[[col, piv]] = a[[piv, col]]
            det = det * (p - 1) % p
        pivot = int(a[col, col])
        det = det * pivot % p
        if col + 1 == n:
            break
        factors = _mulmod(a[col + 1:, col], pow(pivot, -1, p), p)
        update = _mulmod(factors[:, None], a[col, col + 1:][None, :], p)
        a[col + 1:, col + 1:] = (a[col + 1:, col + 1:] - update) % p
    return det


def _det_mod_p_rows(a: list[list[int]], p: int) -> int:
    n = len(a)
    det = 1
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col]), None)
        if piv is None:
            return 0
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = det * (p - 1) % p
        pivot = a[col][col]
        det = det * pivot % p
        inv = pow(pivot, -1, p)
        rc = a[col]
        for r in range(col + 1, n):
            f = a[r][col] * inv % p
            if f:
                rr = a[r]
                for j in range(col + 1, n):
                    rr[j] = (rr[j] - f * rc[j]) % p
    return det


def det_exact(M: Matrix) -> int:
    """Integer determinant by Bareiss fraction-free elimination."""
    if not M.ring.is_exact:
        raise RingMismatch("det_exact needs an exact-integer matrix")
    a = M.tolist()
    n = M.n
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = a[k][k]
        rk = a[k]
        for i in range(k + 1, n):
            ri = a[i]
            aik = ri[k]
            for j in range(k + 1, n):
                # exact division is guaranteed by Sylvester's identity
                ri[j] = (ri[j] * akk - aik * rk[j]) // prev
        prev = akk
    return sign * a[n - 1][n - 1]


def det(M: Matrix) -> int:
    return det_exact(M) if M.ring.is_exact else det_mod_p(M)
