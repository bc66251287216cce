import random

import pytest

from spingeo.abelian import identify_abelian
from spingeo.errors import ParseError, UnknownGeneratorError
from spingeo.presentations import (
    Presentation,
    add_relator,
    format_presentation,
    parse_presentation,
    parse_word,
    tietze_simplify,
)
from spingeo.words import Word, commutator, gen, word


def test_parse_word_basics():
    assert parse_word("a b^-1") == word(("a", 1), ("b", -1))
    assert parse_word("[a, b]") == commutator(gen("a"), gen("b"))
    assert parse_word("(a b)^2") == word(("a", 1), ("b", 1), ("a", 1), ("b", 1))
    assert parse_word("1").is_empty
    assert parse_word("[b^-1, y^-1]") == commutator(~gen("b"), ~gen("y"))
    # multi-character names are one token; juxtaposition needs a boundary
    assert parse_word("a1 b1") == word(("a1", 1), ("b1", 1))
    assert parse_word("ab") == gen("ab")


def test_parse_equation_form():
    w = parse_word("[b1^-1, d1^-1] = a1")
    assert w == commutator(~gen("b1"), ~gen("d1")) * ~gen("a1")


def test_parse_errors_carry_location():
    with pytest.raises(ParseError):
        parse_word("a^")
    with pytest.raises(ParseError):
        parse_word("[a, b")
    with pytest.raises(ParseError) as err:
        parse_presentation("generators: a\na$\n")
    assert "line 2" in str(err.value)
    with pytest.raises(ParseError):
        parse_presentation("a^2\n")  # relator before generators


def test_presentation_round_trip():
    text = "generators: x, y, a, b\n[x, a]\n[y, a]\n[b^-1, y^-1]\n"
    p = parse_presentation(text)
    assert p.generators == ("x", "y", "a", "b")
    assert len(p.relators) == 3
    assert parse_presentation(format_presentation(p)) == p


def test_undeclared_generator_rejected():
    with pytest.raises(UnknownGeneratorError):
        parse_presentation("generators: a\nb^2\n")
    p = Presentation(("a",))
    with pytest.raises(UnknownGeneratorError):
        add_relator(p, gen("z"))


def test_add_relator_empty_is_identity():
    p = Presentation(("y", "b"))
    assert add_relator(p, Word()) == p
    q = add_relator(p, gen("y", 3))
    assert q.relators == (gen("y", 3),)


def test_tietze_generator_kill():
    p = Presentation(("a", "b"), (gen("a"),))
    q = tietze_simplify(p)
    assert q.generators == ("b",)
    assert q.relators == ()


def test_tietze_duplicate_removal():
    p = Presentation(("y", "b"), (gen("y"), gen("y")))
    q = tietze_simplify(p)
    assert q.generators == ("b",)
    assert q.relators == ()


def test_tietze_inverse_duplicate_removal():
    p = Presentation(("a", "b"), (commutator(gen("a"), gen("b")),
                                  commutator(gen("b"), gen("a"))))
    q = tietze_simplify(p)
    # [b,a] is the inverse of [a,b] as a reduced word; one copy survives
    assert len(q.relators) == 1


def test_tietze_meridian_kill_chain():
    # complement of the torus pair, meridian and both push-offs killed
    x, y, a, b = gen("x"), gen("y"), gen("a"), gen("b")
    p = Presentation(
        ("x", "y", "a", "b"),
        (commutator(x, a), commutator(y, a), commutator(~b, ~y), x, a),
    )
    q = tietze_simplify(p)
    assert set(q.generators) == {"y", "b"}
    assert len(q.relators) == 1
    rel = q.relators[0]
    assert rel.is_commutator_shape()
    assert rel.generators() == {"y", "b"}
    assert identify_abelian(q).invariant_factors == (0, 0)


def test_tietze_idempotent_and_budgeted():
    p = Presentation(("a", "b"), (commutator(gen("a"), gen("b")),))
    assert tietze_simplify(p) == p
    big = Presentation(("a", "b"), (gen("a"), gen("b", 2)))
    assert tietze_simplify(big, budget=0) == big
    with pytest.raises(ValueError):
        tietze_simplify(p, budget=-1)


def _corpus():
    from spingeo.abelian import AbelianType
    from spingeo.blocks import akhmedov_park_block, four_torus, luttinger_block
    from spingeo.surgery import lemma7_construct, lemma8_construct
    from spingeo.blocks import elliptic

    samples = [four_torus().pi1, four_torus().complement]
    for n in range(2, 6):
        samples.append(luttinger_block(n).complement)
        samples.append(akhmedov_park_block(n).pi1)
    x = elliptic(1, knotted=True)
    for target in (AbelianType.Z_plus_Z(), AbelianType.Z(),
                   AbelianType.Z_plus_cyclic(3)):
        samples.append(lemma7_construct(x, target).pi1)
    for target in (AbelianType.trivial(), AbelianType.cyclic(5),
                   AbelianType.cyclic_pair(3, 3)):
        samples.append(lemma8_construct(x, 2, target).pi1)
    rng = random.Random(11)
    names = ("a", "b", "c", "d")
    for _ in range(36):
        gens = names[: rng.randint(1, 4)]
        rels = []
        for _ in range(rng.randint(0, 4)):
            letters = [
                (rng.choice(gens), rng.choice((-2, -1, 1, 2)))
                for _ in range(rng.randint(1, 6))
            ]
            w = Word(())
            for name, exp in letters:
                w = w * Word(((name, exp),))
            if not w.is_empty:
                rels.append(w)
        samples.append(Presentation(tuple(gens), tuple(rels)))
    return samples


def test_identify_abelian_invariant_under_tietze():
    corpus = _corpus()
    assert len(corpus) >= 50
    for p in corpus:
        assert identify_abelian(tietze_simplify(p)) == identify_abelian(p)
