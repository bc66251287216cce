import random

import pytest
from hypothesis import given, strategies as st

from spingeo.abelian import AbelianType, abelianize_matrix, identify_abelian, parse_group
from spingeo.presentations import Presentation, parse_presentation
from spingeo.words import commutator, gen


def test_canonicalization_merges_coprime():
    assert AbelianType.cyclic_pair(2, 3) == AbelianType.cyclic(6)
    assert AbelianType.from_factors([12, 60]).invariant_factors == (12, 60)
    assert AbelianType.from_factors([2, 4]).invariant_factors == (2, 4)
    assert AbelianType.from_factors([6, 4]).invariant_factors == (2, 12)
    assert AbelianType.from_factors([1, 1, 5]).invariant_factors == (5,)


def test_zeros_trail():
    t = AbelianType.from_factors([0, 3, 0])
    assert t.invariant_factors == (3, 0, 0)
    assert t.free_rank == 2


def test_tags():
    assert AbelianType.trivial().tag == "Trivial"
    assert AbelianType.Z().tag == "Z"
    assert AbelianType.cyclic(5).tag == "Cyclic(5)"
    assert AbelianType.Z_plus_Z().tag == "Z+Z"
    assert AbelianType.Z_plus_cyclic(3).tag == "Z+Cyclic(3)"
    assert AbelianType.cyclic_pair(3, 3).tag == "Cyclic(3)+Cyclic(3)"
    assert AbelianType.from_factors([2, 2, 2]).tag == "Other"


def test_parse_group():
    assert parse_group("trivial") == AbelianType.trivial()
    assert parse_group("1") == AbelianType.trivial()
    assert parse_group("Z") == AbelianType.Z()
    assert parse_group("Z_3") == parse_group("Z3") == AbelianType.cyclic(3)
    assert parse_group("Z+Z3") == AbelianType.Z_plus_cyclic(3)
    assert parse_group("Z3+Z5") == AbelianType.cyclic(15)
    assert parse_group("Z+Z") == AbelianType.Z_plus_Z()
    with pytest.raises(ValueError):
        parse_group("D8")


def test_abelianize_matrix_rows():
    p = Presentation(("a",), (gen("a", 3),))
    assert abelianize_matrix(p) == [[3]]
    p = Presentation(("a", "b"), (commutator(gen("a"), gen("b")),))
    assert abelianize_matrix(p) == [[0, 0]]
    # a relation expressing a generator as a commutator leaves only the -1
    p = Presentation(
        ("a1", "b1", "d1"),
        (commutator(~gen("b1"), ~gen("d1")) * ~gen("a1"),),
    )
    assert abelianize_matrix(p) == [[-1, 0, 0]]


def test_identify_examples():
    assert identify_abelian(Presentation(("a",), (gen("a", 3),))) == AbelianType.cyclic(3)
    p = parse_presentation("generators: y, b\ny^3\n")
    t = identify_abelian(p)
    assert t == AbelianType.Z_plus_cyclic(3)
    assert t.invariant_factors == (3, 0)
    assert identify_abelian(Presentation(("a", "b"))) == AbelianType.Z_plus_Z()
    assert identify_abelian(
        Presentation(("a", "b"), (commutator(gen("a"), gen("b")),))
    ) == AbelianType.Z_plus_Z()


def _shuffled(p, rng):
    relators = list(p.relators)
    rng.shuffle(relators)
    return Presentation(p.generators, tuple(relators))


def _renamed(p):
    table = {g: f"g{i}" for i, g in enumerate(p.generators)}
    relators = tuple(
        type(r)(tuple((table[name], exp) for name, exp in r.syllables))
        for r in p.relators
    )
    return Presentation(tuple(table[g] for g in p.generators), relators)


def test_invariance_under_permutation_and_renaming():
    from spingeo.blocks import akhmedov_park_block, four_torus, luttinger_block

    rng = random.Random(5)
    samples = [
        four_torus().pi1,
        luttinger_block(3).complement,
        akhmedov_park_block(2).pi1,
        parse_presentation("generators: y, b\ny^6\n"),
    ]
    for p in samples:
        base = identify_abelian(p)
        assert identify_abelian(_shuffled(p, rng)) == base
        assert identify_abelian(_renamed(p)) == base


@given(st.lists(st.integers(0, 24), max_size=6))
def test_canonical_form_is_stable(divisors):
    t = AbelianType.from_factors(divisors)
    assert AbelianType.from_factors(t.invariant_factors) == t
    nonzero = [d for d in t.invariant_factors if d]
    assert all(d > 1 for d in nonzero)
    for a, b in zip(nonzero, nonzero[1:]):
        assert b % a == 0
    assert t.invariant_factors == tuple(nonzero) + (0,) * t.free_rank
