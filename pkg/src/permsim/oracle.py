"""Ground truth by exhaustive search over permutations."""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from .matrix import DimensionMismatch, Matrix, RingMismatch, mat_mul, diag
from .ring import RingConfig

ORACLE_GUARD = 10


class OracleGuardError(RuntimeError):
    """Raised when brute force is requested above the size guard."""


@dataclass(frozen=True)
class Permutation:
    """Bijection of {0..n-1}; ``mapping[i]`` is the image of ``i``."""

    mapping: tuple[int, ...]

    def __post_init__(self):
        m = tuple(int(x) for x in self.mapping)
        if sorted(m) != list(range(len(m))):
            raise ValueError(f"not a permutation: {m}")
        object.__setattr__(self, "mapping", m)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(n)))

    @classmethod
    def transposition(cls, n: int, i: int, j: int) -> "Permutation":
        m = list(range(n))
        m[i], m[j] = m[j], m[i]
        return cls(tuple(m))

    @property
    def n(self) -> int:
        return len(self.mapping)

    def __call__(self, i: int) -> int:
        return self.mapping[i]

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, image in enumerate(self.mapping):
            inv[image] = i
        return Permutation(tuple(inv))

    def matrix(self, ring: RingConfig) -> Matrix:
        """Permutation matrix with ``P e_i = e_{P(i)}``."""
        a = np.zeros((self.n, self.n), dtype=np.int64)
        a[list(self.mapping), list(range(self.n))] = 1
        return Matrix(a, ring)

    def __str__(self) -> str:
        return " ".join(map(str, self.mapping))


def apply_permutation(P: Permutation, B: Matrix) -> Matrix:
    """``P B P^t`` by relabeling: ``out[P(i)][P(j)] = B[i][j]``."""
    if P.n != B.n:
        raise DimensionMismatch(f"permutation size {P.n} vs matrix size {B.n}")
    out = np.empty_like(B.entries)
    idx = np.asarray(P.mapping)
    out[np.ix_(idx, idx)] = B.entries
    return Matrix._wrap(out, B.ring)


def brute_force_similar(A: Matrix, B: Matrix, *, force: bool = False,
                        guard: int = ORACLE_GUARD) -> Permutation | None:
    """Lexicographically smallest P with ``A == P B P^t``, or None.

    Mappings are enumerated in lexicographic order as a depth-first search;
    a prefix is abandoned as soon as one of its already-fixed entries
    disagrees, which skips its completions without reordering the search.
    """
    if A.n != B.n:
        raise DimensionMismatch(f"dimensions differ: {A.n} vs {B.n}")
    if A.ring != B.ring:
        raise RingMismatch(f"rings differ: {A.ring} vs {B.ring}")
    n = A.n
    if n > guard:
        if not force:
            raise OracleGuardError(f"n={n} exceeds brute-force guard {guard}")
        warnings.warn(f"brute force over {n}! permutations", stacklevel=2)
    a, b = A.tolist(), B.tolist()
    mapping = [0] * n
    used = [False] * n

    def extend(k: int) -> bool:
        if k == n:
            return True
        bk = b[k]
        for image in range(n):
            if used[image]:
                continue
            ai = a[image]
            if ai[image] != bk[k]:
                continue
            ok = True
            for j in range(k):
                pj = mapping[j]
                if ai[pj] != bk[j] or a[pj][image] != b[j][k]:
                    ok = False
                    break
            if not ok:
                continue
            mapping[k] = image
            used[image] = True
            if extend(k + 1):
                return True
            used[image] = False
        return False

    return Permutation(tuple(mapping)) if extend(0) else None


def random_conjugate(A: Matrix, rng: np.random.Generator) -> tuple[Matrix, Permutation]:
    """Return ``(P A P^t, P)`` for a uniformly random P."""
    P = Permutation(tuple(rng.permutation(A.n)))
    return apply_permutation(P, A), P


def check_diag_conjugation_identity(A: Matrix, P: Permutation) -> bool:
    """Check ``diag(P A P^t) == P diag(A) P^t`` and ``P J P^t == J``.

    The left sides use relabeling, the right sides explicit products with
    the permutation matrix, so the two routes are independent.
    """
    Pm = P.matrix(A.ring)
    Pt = P.inverse().matrix(A.ring)
    lhs = diag(apply_permutation(P, A))
    rhs = mat_mul(mat_mul(Pm, diag(A)), Pt)
    J = Matrix.ones(A.n, A.ring)
    return lhs == rhs and mat_mul(mat_mul(Pm, J), Pt) == J
