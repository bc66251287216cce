import random

from hypothesis import given, settings, strategies as st

from spingeo.snf import determinant, diagonal, is_unimodular, mat_mul, smith_normal_form

from oracles import det_permutation_expansion, minor_gcd, random_matrix


def snf_checks(m):
    u, d, v = smith_normal_form(m)
    assert mat_mul(mat_mul(u, m), v) == d
    assert is_unimodular(u)
    assert is_unimodular(v)
    diag = diagonal(d)
    rows, cols = len(d), len(d[0])
    for i in range(rows):
        for j in range(cols):
            if i != j:
                assert d[i][j] == 0
    nonzero = [x for x in diag if x]
    assert all(x > 0 for x in nonzero)
    for a, b in zip(nonzero, nonzero[1:]):
        assert b % a == 0
    # trailing zeros only
    assert diag == nonzero + [0] * (len(diag) - len(nonzero))
    return diag


def test_diag_two_zero():
    assert snf_checks([[2, 0], [0, 0]]) == [2, 0]


def test_identity():
    assert snf_checks([[1, 0], [0, 1]]) == [1, 1]


def test_two_by_two():
    # det = -2, gcd of entries 1, so the form is diag(1, 2)
    assert snf_checks([[1, 2], [3, 4]]) == [1, 2]


def test_zero_matrix():
    assert snf_checks([[0, 0, 0]]) == [0]


def test_minor_gcd_products_small():
    rng = random.Random(2024)
    for _ in range(60):
        m = random_matrix(rng, max_dim=4, lo=-6, hi=6)
        diag = snf_checks(m)
        prod = 1
        for i, dd in enumerate([x for x in diag if x], start=1):
            prod *= dd
            assert prod == abs(minor_gcd(m, i))


def test_determinant_matches_permutation_expansion():
    rng = random.Random(99)
    for _ in range(40):
        n = rng.randint(1, 5)
        m = [[rng.randint(-7, 7) for _ in range(n)] for _ in range(n)]
        assert determinant(m) == det_permutation_expansion(m)


@settings(max_examples=60, deadline=None)
@given(
    st.lists(
        st.lists(st.integers(-9, 9), min_size=1, max_size=5),
        min_size=1,
        max_size=5,
    ).filter(lambda rows: len({len(r) for r in rows}) == 1)
)
def test_snf_properties_hypothesis(m):
    snf_checks(m)
