from itertools import permutations

import numpy as np
import pytest
from hypothesis import given, strategies as st

from conftest import exact, int_matrices, permutations_of
from permsim.matrix import Matrix, add_scaled_all_ones, det_exact, mat_mul
from permsim.oracle import (OracleGuardError, Permutation, apply_permutation,
                            brute_force_similar, check_diag_conjugation_identity,
                            random_conjugate)
from permsim.ring import MERSENNE_61, RingConfig


def naive_search(A, B):
    a, b = A.tolist(), B.tolist()
    n = len(a)
    for perm in permutations(range(n)):
        if all(a[perm[i]][perm[j]] == b[i][j] for i in range(n) for j in range(n)):
            return perm
    return None


def test_permutation_basics():
    P = Permutation((2, 0, 1))
    assert P.inverse() == Permutation((1, 2, 0))
    assert str(P) == "2 0 1"
    with pytest.raises(ValueError):
        Permutation((0, 0, 1))


def test_apply_permutation_examples():
    B = exact([[0, 1], [0, 0]])
    assert apply_permutation(Permutation.identity(2), B) == B
    assert apply_permutation(Permutation((1, 0)), B) == exact([[0, 0], [1, 0]])
    with pytest.raises(ValueError):
        apply_permutation(Permutation.identity(3), B)


@given(int_matrices(min_n=6, max_n=6), permutations_of(6))
def test_apply_matches_matrix_product(rows, perm):
    P = Permutation(perm)
    B = exact(rows)
    Pm = P.matrix(B.ring)
    assert apply_permutation(P, B) == mat_mul(mat_mul(Pm, B), P.inverse().matrix(B.ring))
    assert apply_permutation(P, apply_permutation(P.inverse(), B)) == B
    assert det_exact(apply_permutation(P, B)) == det_exact(B)


def test_brute_force_examples():
    K2 = exact([[0, 1], [1, 0]])
    A = exact([[1, 2, 3], [4, 5, 6], [7, 8, 9]])
    assert brute_force_similar(A, A) == Permutation.identity(3)
    assert brute_force_similar(K2, Matrix.zeros(2)) is None
    path = exact([[0, 1, 0], [1, 0, 1], [0, 1, 0]])        # 0-1-2
    relabeled = exact([[0, 1, 1], [1, 0, 0], [1, 0, 0]])   # 1-0-2
    assert naive_search(path, relabeled) == (1, 0, 2)
    assert brute_force_similar(path, relabeled) == Permutation((1, 0, 2))


@given(int_matrices(min_n=1, max_n=5, lo=0, hi=1), st.data())
def test_brute_force_matches_naive_search(rows, data):
    A = exact(rows)
    if data.draw(st.booleans()):
        B = apply_permutation(Permutation(data.draw(permutations_of(A.n))), A)
    else:
        B = exact(data.draw(int_matrices(min_n=A.n, max_n=A.n, lo=0, hi=1)))
    found = brute_force_similar(A, B)
    expected = naive_search(A, B)
    assert (found.mapping if found else None) == expected
    back = brute_force_similar(B, A)
    assert (found is None) == (back is None)
    if found:
        assert apply_permutation(found, B) == A
        assert apply_permutation(back, A) == B


def test_guard():
    A = Matrix.zeros(12)
    with pytest.raises(OracleGuardError):
        brute_force_similar(A, A)
    with pytest.warns(UserWarning):
        assert brute_force_similar(A, A, force=True) == Permutation.identity(12)


def test_random_conjugate(rng):
    A = exact([[0, 1], [0, 0]])
    B, P = random_conjugate(A, rng)
    assert B == apply_permutation(P, A)
    for _ in range(5):
        C, Q = random_conjugate(exact(rng.integers(0, 2, (6, 6)).tolist()), rng)
        assert brute_force_similar(apply_permutation(Q.inverse(), C), C) is not None


def test_diag_identity_examples(rng):
    ring = RingConfig(MERSENNE_61)
    assert check_diag_conjugation_identity(exact([[1, 2], [3, 4]]), Permutation.identity(2))
    assert check_diag_conjugation_identity(Matrix.ones(4), Permutation((3, 1, 0, 2)))
    for _ in range(100):
        n = int(rng.integers(1, 9))
        A = Matrix(rng.integers(0, MERSENNE_61, (n, n), dtype=np.int64), ring)
        assert check_diag_conjugation_identity(A, Permutation(tuple(rng.permutation(n))))


@given(int_matrices(min_n=1, max_n=4, lo=0, hi=1), int_matrices(min_n=1, max_n=4, lo=0, hi=1),
       st.integers(0, MERSENNE_61 - 1))
def test_proposition_shift_preserves_similarity(a, b, c):
    ring = RingConfig(MERSENNE_61)
    A, B = exact(a).to_ring(ring), exact(b).to_ring(ring)
    if A.n != B.n:
        return
    before = brute_force_similar(A, B) is not None
    after = brute_force_similar(add_scaled_all_ones(A, c), add_scaled_all_ones(B, c)) is not None
    assert before == after
