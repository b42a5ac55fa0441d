from itertools import permutations

import numpy as np
import pytest
from hypothesis import settings, strategies as st

from permsim.matrix import Matrix
from permsim.ring import EXACT, MERSENNE_61, RingConfig

settings.register_profile("default", deadline=None, max_examples=100)
settings.load_profile("default")

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def parity(perm) -> int:
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def leibniz_det(rows) -> int:
    """Determinant by summing over all n! permutations."""
    n = len(rows)
    total = 0
    for perm in permutations(range(n)):
        prod = parity(perm)
        for i in range(n):
            prod *= rows[i][perm[i]]
            if prod == 0:
                break
        total += prod
    return total


def naive_matmul(a, b, p=None):
    n = len(a)
    out = [[sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
    return out if p is None else [[x % p for x in row] for row in out]


@st.composite
def int_matrices(draw, min_n=1, max_n=8, lo=-100, hi=100):
    n = draw(st.integers(min_n, max_n))
    rows = draw(st.lists(st.lists(st.integers(lo, hi), min_size=n, max_size=n),
                         min_size=n, max_size=n))
    return rows


@st.composite
def permutations_of(draw, n):
    return tuple(draw(st.permutations(list(range(n)))))


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


@pytest.fixture
def field():
    return RingConfig(MERSENNE_61)


def random_field_matrix(rng, n, p=MERSENNE_61) -> Matrix:
    vals = rng.integers(0, p, (n, n), dtype=np.uint64)
    return Matrix([[int(v) for v in row] for row in vals], RingConfig(p))


def exact(rows) -> Matrix:
    return Matrix(rows, EXACT)
