import pytest

from spingeo.abelian import AbelianType, identify_abelian
from spingeo.blocks import (
    akhmedov_park_block,
    elliptic,
    four_torus,
    horikawa,
    luttinger_block,
    park_block,
    park_sigma_formula,
    ppx_surface,
    surgered_product_relations,
)
from spingeo.errors import PreconditionError
from spingeo.invariants import CharNumbers, check_consistency
from spingeo.words import commutator, gen


def test_elliptic_invariants():
    e2 = elliptic(1)
    assert e2.chars.chern_pair() == (0, 2)
    assert (e2.chars.e, e2.chars.sigma) == (24, -16)
    assert e2.pi1.is_trivial
    e4 = elliptic(2)
    assert e4.chars.chern_pair() == (0, 4)
    assert e4.chars.sigma == -32
    knotted = elliptic(1, knotted=True)
    assert knotted.chars == e2.chars
    assert knotted.variant == "knot_surgery"
    assert knotted.provenance_root != e2.provenance_root
    with pytest.raises(PreconditionError):
        elliptic(0)


def test_elliptic_fiber_certificates():
    e2 = elliptic(1)
    fiber = e2.surface("F1")
    assert fiber.genus == 1 and fiber.kind == "symplectic"
    assert fiber.meridian_trivial
    comp = e2.complement_pi1("F1")
    assert comp is not None and comp.is_trivial


def test_four_torus_words():
    t4 = four_torus()
    assert (t4.chars.e, t4.chars.sigma, t4.chars.b1) == (0, 0, 4)
    assert t4.chars.chern_pair() == (0, 0)
    t2 = t4.surface("T2")
    assert t2.meridian == commutator(~gen("x"), gen("b"))
    assert t2.pushoffs == (gen("y"), gen("b") * gen("a") * ~gen("b"))
    t1 = t4.surface("T1")
    assert t1.meridian == commutator(~gen("b"), ~gen("y"))
    assert t1.pushoffs == (gen("x"), gen("a"))
    assert t1.kind == "symplectic" and t2.kind == "lagrangian"


def test_four_torus_complement_abelianization():
    t4 = four_torus()
    assert identify_abelian(t4.complement).invariant_factors == (0, 0, 0, 0)
    assert identify_abelian(t4.pi1).invariant_factors == (0, 0, 0, 0)


def test_relation_counts():
    assert len(surgered_product_relations(2)) == 18
    # each extra handle adds two surgery and two commuting relations,
    # plus the single product relation
    assert len(surgered_product_relations(3)) == 18 + 4 + 1
    assert len(surgered_product_relations(5)) == 18 + 12 + 1


def test_relations_include_higher_handles():
    rels = surgered_product_relations(3)
    expected = commutator(~gen("a1"), ~gen("d3")) * ~gen("c3")
    assert expected in rels


def test_akhmedov_park_trivial_h1():
    for n in range(2, 9):
        block = akhmedov_park_block(n)
        assert block.abelianization() == AbelianType.trivial()
        assert (block.chars.e, block.chars.sigma) == (4 * n - 4, 0)
        assert block.chars.chern_pair() == (8 * n - 8, n - 1)


def test_akhmedov_park_core_is_dialable():
    block = akhmedov_park_block(2)
    core = block.surface("Lam")
    assert core.nullhomologous and core.surgery is not None
    assert core.surgery.relator(1) == core.meridian


def test_luttinger_block_data():
    s = luttinger_block(2)
    assert (s.chars.e, s.chars.sigma) == (4, 0)
    assert s.chars.chern_pair() == (8, 1)
    t1, t2, t3 = s.surface("T1"), s.surface("T2"), s.surface("T3")
    assert t1.meridian == commutator(~gen("b1"), ~gen("d1"))
    assert t1.pushoffs == (gen("a1"), gen("c1"))
    assert t2.meridian == commutator(~gen("b2"), ~gen("d2"))
    assert t3.meridian == commutator(~gen("c1"), gen("b2"))
    assert t3.pushoffs[0] == gen("d1")
    assert t1.dual_genus == 1
    # the three withheld relations are absent from the complement
    assert len(s.complement.relators) == 15
    for withheld in (
        commutator(~gen("b1"), ~gen("d1")) * ~gen("a1"),
        commutator(~gen("b2"), ~gen("d2")) * ~gen("a2"),
        commutator(~gen("c1"), gen("b2")) * ~gen("d1"),
    ):
        assert withheld not in s.complement.relators


@pytest.mark.parametrize("n,count", [(5, 12), (7, 20)])
def test_spare_lagrangian_tori_counts(n, count):
    block = luttinger_block(n)
    spares = [s for s in block.surfaces if s.id.startswith("L")]
    assert len(spares) == count
    assert all(s.kind == "lagrangian" for s in spares)


def test_blocks_chern_match_between_partial_and_full():
    for n in range(2, 7):
        a, b = luttinger_block(n).chars, akhmedov_park_block(n).chars
        assert (a.e, a.sigma) == (b.e, b.sigma)
        assert a.chern_pair() == b.chern_pair()


def test_horikawa_values_and_line():
    h1 = horikawa(1)
    assert h1.chars.chern_pair() == (8, 7)
    assert h1.chars.sigma == -48
    assert horikawa(2).chars.chern_pair() == (24, 15)
    for kp in range(1, 8):
        c, chi = horikawa(kp).chars.chern_pair()
        assert c == 2 * chi - 6
    torus = h1.surface("F1")
    assert torus.kind == "lagrangian" and torus.meridian_trivial


def test_ppx_values():
    y = ppx_surface(1, 3)
    assert y.chars.chern_pair() == (60068, 6857)
    assert y.chars.sigma == 60068 - 8 * 6857 == 5212
    assert y.chars.sigma > 0
    assert y.nominal
    assert ppx_surface(2, 3).chars.chi_h == 27428
    assert y.surface("S1").genus == 3
    with pytest.raises(PreconditionError):
        ppx_surface(1, 1)


def test_park_block_flagged_inconsistency():
    for g in (2, 3, 4):
        z = park_block(g)
        assert len(z.warnings) == 1
        c, chi = z.chars.chern_pair()
        stated = CharNumbers(
            e=12 * chi - c, sigma=park_sigma_formula(g), b1=0, spin=True,
            symplectic=True, sw_nontrivial=True, w2_type="spin",
        )
        report = check_consistency(stated, (c, chi))
        assert len(report.violations) == 1
    assert park_block(2).chars.chern_pair() == (8, 7)
    assert park_block(3).chars.chern_pair() == (32, 16)
    assert park_block(2).chars.sigma == -48 != park_sigma_formula(2)


def test_catalog_consistency():
    entries = [
        elliptic(1), elliptic(2), four_torus(), luttinger_block(2),
        luttinger_block(4), akhmedov_park_block(3), horikawa(1), horikawa(3),
        ppx_surface(1, 2), ppx_surface(2, 2), park_block(2), park_block(3),
    ]
    for model in entries:
        report = model.consistency(model.chars.chern_pair())
        assert report.passed, (model.provenance_root, report)
        for s in model.surfaces:
            assert s.self_intersection == 0


def test_park_entries_carry_exactly_one_flag():
    flagged = [m for m in (park_block(2), park_block(3), park_block(4))
               if m.warnings]
    assert len(flagged) == 3
    assert all(len(m.warnings) == 1 for m in flagged)


def test_akhmedov_park_family_dial():
    from spingeo.surgery import family_from_null_torus

    block = akhmedov_park_block(3)
    fam = family_from_null_torus(block, "Lam", range(1, 5))
    for m in fam.members():
        assert m.abelianization() == AbelianType.trivial()
        assert (m.chars.e, m.chars.sigma) == (block.chars.e, block.chars.sigma)
    assert sum(1 for m in fam.members() if m.chars.symplectic) == 1
    assert fam.member(1).pi1 == block.pi1
