import json

import pytest

from spingeo.abelian import AbelianType
from spingeo.errors import ParseError, RecipeError
from spingeo.models import RecipeStep
from spingeo.recipes import (
    Expected,
    RecipeFile,
    check_expected,
    evaluate,
    load_recipe,
    save_recipe,
    step_from_json,
    step_to_json,
)


def test_step_json_round_trip():
    step = RecipeStep.make(
        "sum",
        children=(
            RecipeStep.make("luttinger_block", n=2),
            RecipeStep.make("elliptic", s=1, knotted=True),
        ),
        surface_a="T1",
        surface_b="F1",
        perturb_a=True,
    )
    assert step_from_json(step_to_json(step)) == step
    assert step.kind == "sum"
    assert step.children[0].kind == "block"


def test_evaluate_blocks_and_composites():
    model = evaluate(RecipeStep.make("prop9", s=1, n=2, target="trivial"))
    assert model.chars.chern_pair() == (8, 3)
    model = evaluate(
        RecipeStep.make(
            "lemma7",
            children=(RecipeStep.make("elliptic", s=1),),
            target="Z+Z3",
        )
    )
    assert model.abelianization() == AbelianType.Z_plus_cyclic(3)
    assert model.chars.chern_pair() == (0, 2)


def test_evaluate_operation_chain():
    step = RecipeStep.make(
        "luttinger",
        children=(
            RecipeStep.make(
                "sum",
                children=(
                    RecipeStep.make("four_torus"),
                    RecipeStep.make("elliptic", s=1, knotted=True),
                ),
                surface_a="T1",
                surface_b="F1",
            ),
        ),
        surface="T2",
        curve=0,
        p=3,
    )
    model = evaluate(step)
    assert model.abelianization() == AbelianType.Z_plus_cyclic(3)


def test_evaluate_family_member():
    base = RecipeStep.make("prop9", s=1, n=2, target="Z")
    member = RecipeStep.make("family_member", children=(base,), core="T3_core", dial=4)
    model = evaluate(member)
    assert model.abelianization() == AbelianType.Z()
    assert not model.chars.symplectic


def test_evaluate_error_paths():
    with pytest.raises(RecipeError, match="unknown op"):
        evaluate(RecipeStep.make("mystery_block"))
    with pytest.raises(RecipeError, match="missing parameter"):
        evaluate(RecipeStep.make("elliptic"))
    # a genus-mismatched sum names the failing step path
    bad = RecipeStep.make(
        "sum",
        children=(
            RecipeStep.make("ppx_surface", x=1, genus=2),
            RecipeStep.make("elliptic", s=1),
        ),
        surface_a="S1",
        surface_b="F1",
    )
    with pytest.raises(RecipeError, match="recipe"):
        evaluate(bad)


def test_recipe_file_round_trip(tmp_path):
    recipe = RecipeFile(
        version=1,
        root=RecipeStep.make("prop9", s=1, n=2, target="trivial"),
        expected=Expected(c=8, chi=3, group=AbelianType.trivial()),
    )
    path = tmp_path / "r.json"
    save_recipe(recipe, str(path))
    loaded = load_recipe(str(path))
    assert loaded.root == recipe.root
    assert loaded.expected.c == 8
    assert loaded.expected.group == AbelianType.trivial()


def test_load_recipe_parse_errors(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{not json")
    with pytest.raises(ParseError):
        load_recipe(str(path))
    path.write_text(json.dumps({"version": 1}))
    with pytest.raises(ParseError):
        load_recipe(str(path))


def test_check_expected():
    model = evaluate(RecipeStep.make("prop9", s=1, n=2, target="trivial"))
    assert check_expected(model, Expected(c=8, chi=3, group=AbelianType.trivial())) == []
    failures = check_expected(model, Expected(c=16, group=AbelianType.Z()))
    assert len(failures) == 2
    ok = check_expected(
        model, Expected(prototype="E(2)#2(S²×S²)")
    )
    assert ok == []


def test_provenance_replays_to_same_model():
    model = evaluate(RecipeStep.make("prop9", s=2, n=3, target="Z5+Z5"))
    replay = evaluate(model.provenance_root)
    assert replay.chars == model.chars
    assert replay.pi1 == model.pi1
