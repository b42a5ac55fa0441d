"""Randomized determinant test for permutation similarity.

For a draw ``(c, c_1..c_n)`` let ``f(A) = q(A + cJ) - diag(q(A + cJ))`` with
``q(x) = c_1 x + ... + c_n x^n``. Conjugating A by a permutation conjugates
f(A) by the same permutation, so ``det f(A) == det f(B)`` whenever A and B
are permutation similar, in any commutative ring. Unequal determinants are
therefore a proof of non-similarity; equal determinants over several draws
are evidence of similarity, up to the Schwartz-Zippel bound below.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field, replace
from fractions import Fraction

import numpy as np

from .matrix import (Matrix, RingMismatch, add_scaled_all_ones, det, horner_poly_eval,
                     mat_add, zero_diagonal)
from .ring import EXACT, MERSENNE_61, RingConfig

# Separates the coefficient stream from the equality-test stream.
_COEFF_STREAM = 0
_MATRIX_STREAM = 1


@dataclass(frozen=True)
class TestParams:
    """Sampling context: modulus, number of draws, seed, and (once bound) n."""

    __test__ = False  # not a pytest class

    p: int = MERSENNE_61
    trials: int = 3
    seed: int = 0
    n: int | None = None

    def __post_init__(self):
        RingConfig(self.p)  # primality check
        if self.trials < 1:
            raise ValueError("trials must be at least 1")
        if not 0 <= self.seed < 1 << 64:
            raise ValueError("seed must be a 64-bit unsigned integer")
        if self.n is not None and self.p <= self.n * (self.n + 1):
            raise ValueError(f"p={self.p} must exceed n(n+1)={self.n * (self.n + 1)}")

    def bind(self, n: int) -> "TestParams":
        return replace(self, n=n)

    @property
    def ring(self) -> RingConfig:
        return RingConfig(self.p)


@dataclass(frozen=True)
class CoefficientDraw:
    """Shift ``c`` and polynomial coefficients ``c_1..c_n`` in ``[0, p)``."""

    p: int
    c: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        values = (self.c, *self.coeffs)
        if not all(0 <= v < self.p for v in values):
            raise ValueError("draw values must lie in [0, p)")

    @property
    def n(self) -> int:
        return len(self.coeffs)


class Kind(enum.Enum):
    DISTINCT = "Distinct"
    INDISTINGUISHABLE = "Indistinguishable"


@dataclass
class Verdict:
    """Outcome of a one-sided randomized test.

    ``error_bound`` bounds the probability of an Indistinguishable answer for
    a pair that is neither equal/similar nor strongly co-det. Verdicts
    decided without random trials (size mismatch, n == 1) carry a bound of 0.
    """

    kind: Kind
    trials_run: int
    error_bound: Fraction
    per_trial_dets: list[tuple[int, int]] = field(default_factory=list)
    distinguishing_trial: int | None = None
    witness: CoefficientDraw | Matrix | None = None

    @property
    def distinct(self) -> bool:
        return self.kind is Kind.DISTINCT


def _rng(seed: int, trial: int, stream: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence([seed, trial, stream]))


def _uniform(rng: np.random.Generator, p: int, size) -> np.ndarray:
    return rng.integers(0, p, size=size, dtype=np.uint64)


def sample_coefficients(n: int, p: int, seed: int, trial: int) -> CoefficientDraw:
    """Draw for one trial; a pure function of ``(n, p, seed, trial)``."""
    values = [int(v) for v in _uniform(_rng(seed, trial, _COEFF_STREAM), p, n + 1)]
    return CoefficientDraw(p, values[0], tuple(values[1:]))


def randomized_f(A: Matrix, draw: CoefficientDraw) -> Matrix:
    """``q(A + cJ)`` with its diagonal zeroed."""
    if draw.n != A.n:
        raise ValueError(f"draw has {draw.n} coefficients for an {A.n}x{A.n} matrix")
    if not A.ring.is_exact and A.ring.p != draw.p:
        raise RingMismatch(f"draw is over GF({draw.p}), matrix over {A.ring}")
    return zero_diagonal(horner_poly_eval(add_scaled_all_ones(A, draw.c), draw.coeffs))


def similarity_trial(A: Matrix, B: Matrix, draw: CoefficientDraw) -> tuple[int, int]:
    """Determinants of f(A) and f(B) under one shared draw."""
    if A.n != B.n:
        raise ValueError(f"dimensions differ: {A.n} vs {B.n}")
    return det(randomized_f(A, draw)), det(randomized_f(B, draw))


def failure_bound(n: int, p: int, t: int) -> Fraction:
    """Upper bound ``(n(n+1)/p)^t`` on missing a non-similar pair in t trials.

    Entry (i, j) of ``c_k (A + cJ)^k`` is a polynomial of total degree at
    most k + 1 <= n + 1 in (c, c_1..c_n), so every entry of f(A) has degree
    at most n + 1 and det f(A), a sum of n-fold products of entries, has
    degree at most n(n+1). A nonzero difference ``det f(A) - det f(B)``
    vanishes at a uniform point of Z_p^(n+1) with probability at most
    n(n+1)/p; independent trials multiply.
    """
    per_trial = Fraction(n * (n + 1), p)
    if per_trial >= 1:
        raise ValueError(f"p={p} too small for n={n}: bound n(n+1)/p >= 1")
    return per_trial ** t


def _working_ring(params: TestParams, exact: bool) -> RingConfig:
    return EXACT if exact else params.ring


def _prepare(A: Matrix, B: Matrix, ring: RingConfig) -> tuple[Matrix, Matrix]:
    return A.to_ring(ring), B.to_ring(ring)


def permutation_similarity_test(A: Matrix, B: Matrix, params: TestParams = TestParams(),
                                *, exact: bool = False) -> Verdict:
    """Decide "Distinct" (proved non-similar) or "Indistinguishable".

    With ``exact=True`` the same draws are applied over the integers and
    determinants are computed exactly; the bound is unchanged because the
    draws are still uniform on a set of size p.
    """
    if A.n != B.n:
        return Verdict(Kind.DISTINCT, 0, Fraction(0))
    n = A.n
    params = params.bind(n)
    A, B = _prepare(A, B, _working_ring(params, exact))
    if n == 1:
        # f is identically [[0]] on 1x1 matrices; compare entries instead
        kind = Kind.INDISTINGUISHABLE if A == B else Kind.DISTINCT
        return Verdict(kind, 0, Fraction(0))
    dets = []
    for t in range(params.trials):
        draw = sample_coefficients(n, params.p, params.seed, t)
        pair = similarity_trial(A, B, draw)
        dets.append(pair)
        if pair[0] != pair[1]:
            return Verdict(Kind.DISTINCT, t + 1, failure_bound(n, params.p, t + 1),
                           dets, t, draw)
    return Verdict(Kind.INDISTINGUISHABLE, params.trials,
                   failure_bound(n, params.p, params.trials), dets)


def sample_matrix(n: int, p: int, seed: int, trial: int) -> Matrix:
    values = _uniform(_rng(seed, trial, _MATRIX_STREAM), p, (n, n))
    return Matrix([[int(v) for v in row] for row in values], RingConfig(p))


def equality_test(A: Matrix, B: Matrix, params: TestParams = TestParams(),
                  *, exact: bool = False) -> Verdict:
    """Compare ``det(A + X)`` with ``det(B + X)`` for random full matrices X.

    ``det(A + X) - det(B + X)`` has degree at most n in the entries of X,
    so the shared ``failure_bound`` (degree n(n+1)) is a valid, looser bound.
    """
    if A.n != B.n:
        return Verdict(Kind.DISTINCT, 0, Fraction(0))
    n = A.n
    params = params.bind(n)
    ring = _working_ring(params, exact)
    A, B = _prepare(A, B, ring)
    dets = []
    for t in range(params.trials):
        X = sample_matrix(n, params.p, params.seed, t).to_ring(ring)
        pair = det(mat_add(A, X)), det(mat_add(B, X))
        dets.append(pair)
        if pair[0] != pair[1]:
            return Verdict(Kind.DISTINCT, t + 1, failure_bound(n, params.p, t + 1),
                           dets, t, X)
    return Verdict(Kind.INDISTINGUISHABLE, params.trials,
                   failure_bound(n, params.p, params.trials), dets)
