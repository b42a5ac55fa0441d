"""Show a non-symmetric pair the determinant test can never separate.

f(A^t) = f(A)^t for every draw, so det f(A) == det f(A^t) always. A matrix
that is not permutation similar to its transpose (a digraph that is not
isomorphic to its converse) therefore behaves like a strongly co-det pair.
"""

from permsim.hunter import stress_pair
from permsim.matrix import Matrix
from permsim.oracle import brute_force_similar

DIGRAPH = [[0, 1, 1, 1], [0, 0, 1, 0], [0, 0, 0, 0], [0, 0, 0, 0]]


def main():
    A = Matrix(DIGRAPH)
    At = Matrix([list(r) for r in zip(*DIGRAPH)])
    print("oracle witness:", brute_force_similar(A, At))
    rec = stress_pair(A, At, 200)
    print(f"distinguished {rec.distinguished}/{rec.attempted} draws -> {rec.classification.value}")
    print(f"after A[0][0] += 1 on both: {rec.perturbed_distinguished}/{rec.attempted}")


if __name__ == "__main__":
    main()
