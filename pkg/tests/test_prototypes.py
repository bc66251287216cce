from spingeo.abelian import AbelianType
from spingeo.invariants import CharNumbers
from spingeo.prototypes import (
    FREEDMAN,
    HAMBLETON_KRECK,
    HAMBLETON_TEICHNER,
    UNSUPPORTED,
    HorikawaStripFamily,
    NegativeStripFamily,
    ZeroSignatureFamily,
    botany_family_report,
    classification_criterion,
    family_for_model,
    prototype_name,
)
from spingeo.surgery import family_from_null_torus, prop9_construct


def test_classification_criteria():
    assert classification_criterion(AbelianType.trivial()).tag == FREEDMAN
    assert classification_criterion(AbelianType.Z()).tag == HAMBLETON_TEICHNER
    assert classification_criterion(AbelianType.cyclic(4)).tag == HAMBLETON_KRECK
    crit = classification_criterion(AbelianType.cyclic_pair(3, 3))
    assert crit.tag == HAMBLETON_KRECK
    assert any("w2" in p for p in crit.preconditions)
    assert classification_criterion(AbelianType.cyclic_pair(9, 9)).tag == UNSUPPORTED
    assert classification_criterion(AbelianType.Z_plus_Z()).tag == UNSUPPORTED
    assert classification_criterion(AbelianType.Z_plus_cyclic(3)).tag == UNSUPPORTED
    assert classification_criterion(AbelianType.from_factors([2, 2, 2])).tag == UNSUPPORTED


def _chars(c, chi, b1):
    sigma = c - 8 * chi
    return CharNumbers(e=4 * chi - sigma, sigma=sigma, b1=b1, spin=True,
                       w2_type="spin")


def test_negative_strip_names():
    fam = NegativeStripFamily(s=1, n=2)
    name = prototype_name(_chars(8, 3, 0), AbelianType.trivial(), fam)
    assert name.display == "E(2)#2(S²×S²)"
    name = prototype_name(_chars(8, 3, 0), AbelianType.cyclic(3), fam)
    assert name.display == "E(2)#2(S²×S²)#L̃(3,1)×S¹"
    name = prototype_name(_chars(8, 3, 1), AbelianType.Z(), fam)
    assert name.display == "E(2)#3(S²×S²)#S³×S¹"
    name = prototype_name(_chars(8, 3, 0), AbelianType.cyclic_pair(3, 3), fam)
    assert "L̃̃(3,1)" in name.display
    assert prototype_name(_chars(8, 3, 1), AbelianType.Z_plus_cyclic(3), fam) is None
    assert prototype_name(_chars(8, 3, 2), AbelianType.Z_plus_Z(), fam) is None


def test_horikawa_strip_names():
    fam = HorikawaStripFamily(kp=1, n=2)
    name = prototype_name(_chars(16, 8, 0), AbelianType.cyclic(5), fam)
    assert name.display == "H(7)#2(S²×S²)#L̃(5,1)×S¹"


def test_round_trip_reproduces_chars():
    cases = [
        (NegativeStripFamily(s=2, n=3), _chars(16, 6, 0), AbelianType.trivial()),
        (NegativeStripFamily(s=1, n=2), _chars(8, 3, 1), AbelianType.Z()),
        (NegativeStripFamily(s=1, n=4), _chars(24, 5, 0), AbelianType.cyclic(7)),
        (HorikawaStripFamily(kp=1, n=2), _chars(16, 8, 0), AbelianType.trivial()),
        (HorikawaStripFamily(kp=2, n=3), _chars(40, 17, 0),
         AbelianType.cyclic_pair(3, 3)),
    ]
    for fam, chars, group in cases:
        name = prototype_name(chars, group, fam)
        rebuilt = name.char_numbers()
        assert (rebuilt.e, rebuilt.sigma, rebuilt.b1) == (
            chars.e, chars.sigma, chars.b1)


def test_zero_signature_tables_differ():
    # same point, both tables: multiplicities differ by the indexing shift
    chars_z = _chars(8 * 10, 10, 1)  # sigma = 0, e = 40
    cor4 = prototype_name(chars_z, AbelianType.Z(), ZeroSignatureFamily(n=10))
    cor14 = prototype_name(chars_z, AbelianType.Z(),
                           ZeroSignatureFamily(n=9, table="cor14"))
    assert cor4.display == "20(S²×S²)#S¹×S³"
    assert cor14.display == "20(S²×S²)#S¹×S³"
    assert cor4.char_numbers() == cor14.char_numbers()
    triv = prototype_name(_chars(8 * 10, 10, 0), AbelianType.trivial(),
                          ZeroSignatureFamily(n=9))
    assert triv.display == "19(S²×S²)"
    assert triv.char_numbers().e == 40


def test_mismatched_family_unclassified():
    fam = NegativeStripFamily(s=1, n=2)
    assert prototype_name(_chars(16, 3, 0), AbelianType.trivial(), fam) is None


def test_family_for_model_negative_strip():
    m = prop9_construct(1, 2, AbelianType.trivial())
    fam = family_for_model(m, AbelianType.trivial())
    assert fam == NegativeStripFamily(s=1, n=2)
    name = prototype_name(m.chars, AbelianType.trivial(), fam)
    assert name.display.startswith("E(2)")


def test_botany_report():
    base = prop9_construct(1, 2, AbelianType.cyclic_pair(3, 3))
    core = next(s.id for s in base.surfaces if s.nullhomologous)
    fam = family_from_null_torus(base, core, range(1, 5))
    report = botany_family_report(fam)
    assert report.consistent
    assert report.size == 4
    assert report.symplectic_members == 1
    assert report.criterion.tag == HAMBLETON_KRECK
    assert report.sw_distinct and report.citation


def test_single_member_family():
    base = prop9_construct(1, 2, AbelianType.trivial())
    core = next(s.id for s in base.surfaces if s.nullhomologous)
    fam = family_from_null_torus(base, core, (1,))
    assert botany_family_report(fam).consistent
