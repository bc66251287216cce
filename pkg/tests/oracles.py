"""Independent brute-force oracles the fast paths are checked against."""

from itertools import combinations, permutations
from math import gcd


def det_permutation_expansion(matrix):
    """Determinant by signed permutation expansion; independent of the
    fraction-free elimination used in the package."""
    n = len(matrix)
    if n == 0:
        return 1
    total = 0
    for perm in permutations(range(n)):
        sign = 1
        seen = [False] * n
        for start in range(n):
            if seen[start]:
                continue
            length, j = 0, start
            while not seen[j]:
                seen[j] = True
                j = perm[j]
                length += 1
            if length % 2 == 0:
                sign = -sign
        term = sign
        for i in range(n):
            term *= matrix[i][perm[i]]
        total += term
    return total


def minor_gcd(matrix, size):
    """gcd of all size x size minors; 0 when every minor vanishes."""
    rows, cols = len(matrix), len(matrix[0]) if matrix else 0
    g = 0
    for rsel in combinations(range(rows), size):
        for csel in combinations(range(cols), size):
            minor = [[matrix[i][j] for j in csel] for i in rsel]
            g = gcd(g, det_permutation_expansion(minor))
    return g


def random_matrix(rng, max_dim=6, lo=-9, hi=9):
    rows = rng.randint(1, max_dim)
    cols = rng.randint(1, max_dim)
    return [[rng.randint(lo, hi) for _ in range(cols)] for _ in range(rows)]
