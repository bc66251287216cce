"""Recipe files: the serializable construction-step trees the CLI runs.

A recipe file is JSON:

    {
      "version": 1,
      "recipe": {"op": "prop9", "params": {"s": 1, "n": 2, "target": "trivial"}},
      "expected": {"c": 8, "chi": 3, "group": "trivial"}
    }

Steps with operands nest them under "children".  Block and composite
constructors are addressed by name and parameters; the operation steps are
sum, luttinger, torus_surgery and family_member.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any

from . import blocks, surgery
from .abelian import AbelianType, parse_group
from .errors import CatalogError, ParseError, RecipeError, SpingeoError
from .geography import compose_w, park_X_compose, v_block, CompositionParams
from .models import ManifoldModel, RecipeStep

RECIPE_VERSION = 1


@dataclass(frozen=True)
class Expected:
    c: int | None = None
    chi: int | None = None
    group: AbelianType | None = None
    prototype: str | None = None


@dataclass(frozen=True)
class RecipeFile:
    version: int
    root: RecipeStep
    expected: Expected = Expected()


def step_to_json(step: RecipeStep) -> dict[str, Any]:
    out: dict[str, Any] = {"op": step.op}
    params = step.param_dict()
    if params:
        out["params"] = params
    if step.children:
        out["children"] = [step_to_json(ch) for ch in step.children if ch is not None]
    return out


def step_from_json(data: dict[str, Any]) -> RecipeStep:
    if not isinstance(data, dict) or "op" not in data:
        raise ParseError("recipe step must be an object with an 'op' key")
    children = tuple(step_from_json(ch) for ch in data.get("children", []))
    params = data.get("params", {})
    if not isinstance(params, dict):
        raise ParseError("'params' must be an object")
    return RecipeStep(data["op"], tuple(sorted(params.items())), children)


def load_recipe(path: str) -> RecipeFile:
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except json.JSONDecodeError as exc:
        raise ParseError(f"recipe is not valid JSON: {exc}", line=exc.lineno)
    if "recipe" not in data:
        raise ParseError("recipe file needs a 'recipe' key")
    exp = data.get("expected", {})
    expected = Expected(
        c=exp.get("c"),
        chi=exp.get("chi"),
        group=parse_group(exp["group"]) if "group" in exp else None,
        prototype=exp.get("prototype"),
    )
    return RecipeFile(
        version=data.get("version", RECIPE_VERSION),
        root=step_from_json(data["recipe"]),
        expected=expected,
    )


def save_recipe(recipe: RecipeFile, path: str) -> None:
    data: dict[str, Any] = {
        "version": recipe.version,
        "recipe": step_to_json(recipe.root),
    }
    exp = {}
    if recipe.expected.c is not None:
        exp["c"] = recipe.expected.c
    if recipe.expected.chi is not None:
        exp["chi"] = recipe.expected.chi
    if recipe.expected.group is not None:
        exp["group"] = str(recipe.expected.group)
    if recipe.expected.prototype is not None:
        exp["prototype"] = recipe.expected.prototype
    if exp:
        data["expected"] = exp
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(data, fh, indent=2, sort_keys=True)
        fh.write("\n")


def _target(params: dict[str, Any]) -> AbelianType:
    return parse_group(str(params["target"]))


def _child(step: RecipeStep, idx: int, path: str) -> RecipeStep:
    if len(step.children) <= idx:
        raise RecipeError(path, CatalogError(f"step {step.op!r} needs operand {idx + 1}"))
    return step.children[idx]


def evaluate(step: RecipeStep, path: str = "recipe") -> ManifoldModel:
    """Evaluate a step tree to a manifold model; errors carry the step path."""
    p = step.param_dict()
    op = step.op
    try:
        if op == "elliptic":
            return blocks.elliptic(int(p["s"]), bool(p.get("knotted", False)))
        if op == "four_torus":
            return blocks.four_torus()
        if op == "luttinger_block":
            return blocks.luttinger_block(int(p["n"]))
        if op in ("akhmedov_park_block", "akhmedov_park"):
            return blocks.akhmedov_park_block(int(p["n"]))
        if op == "horikawa":
            return blocks.horikawa(int(p["kp"]))
        if op == "ppx_surface":
            return blocks.ppx_surface(int(p["x"]), int(p["genus"]))
        if op == "park_block":
            return blocks.park_block(int(p["g"]))

        if op == "lemma7":
            x = evaluate(_child(step, 0, path), path + ".x")
            return surgery.lemma7_construct(x, _target(p), p.get("torus"))
        if op == "lemma8":
            x = evaluate(_child(step, 0, path), path + ".x")
            return surgery.lemma8_construct(x, int(p["n"]), _target(p), p.get("torus"))
        if op == "prop9":
            return surgery.prop9_construct(int(p["s"]), int(p["n"]), _target(p))
        if op == "prop11":
            return surgery.prop11_construct(
                int(p["kp"]), int(p["n"]), _target(p), str(p.get("variant", "plain"))
            )
        if op == "park_x":
            return park_X_compose(int(p["k"]), int(p["x"]), int(p["g"]))
        if op == "v_block":
            return v_block(str(p["kind"]), int(p["a"]), int(p["b"]))
        if op == "park_w":
            xs = _child(step, 0, path).param_dict()
            vs = _child(step, 1, path).param_dict()
            params = CompositionParams(
                k=int(xs["k"]), x=int(xs["x"]), g=int(xs["g"]),
                m=int(p["m"]),
                v_kind=str(vs["kind"]), v_a=int(vs["a"]), v_b=int(vs["b"]),
            )
            return compose_w(params)

        if op == "sum":
            a = evaluate(_child(step, 0, path), path + ".a")
            b = evaluate(_child(step, 1, path), path + ".b")
            return surgery.symplectic_sum(
                a, str(p["surface_a"]), b, str(p["surface_b"]),
                perturb_a=bool(p.get("perturb_a", False)),
                perturb_b=bool(p.get("perturb_b", False)),
            )
        if op == "luttinger":
            m = evaluate(_child(step, 0, path), path + ".of")
            return surgery.luttinger(
                m, str(p["surface"]), p.get("curve", 0), int(p["p"]),
                sign=int(p.get("sign", 1)),
            )
        if op == "torus_surgery":
            m = evaluate(_child(step, 0, path), path + ".of")
            return surgery.torus_surgery(
                m, str(p["surface"]), p.get("curve", 0), int(p["p"]), int(p["q"]),
            )
        if op == "family_member":
            m = evaluate(_child(step, 0, path), path + ".of")
            dial = int(p["dial"])
            fam = surgery.family_from_null_torus(m, str(p["core"]), (dial,))
            return fam.member(dial)
    except RecipeError:
        raise
    except (SpingeoError, KeyError, ValueError) as exc:
        if isinstance(exc, KeyError):
            exc = CatalogError(f"step {op!r} is missing parameter {exc}")
        raise RecipeError(path, exc) from exc
    raise RecipeError(path, CatalogError(f"unknown op {op!r}"))


def check_expected(model: ManifoldModel, expected: Expected) -> list[str]:
    """Failed-assertion descriptions for a run; empty means all pass."""
    failures = []
    c, chi = model.chars.chern_pair()
    if expected.c is not None and c != expected.c:
        failures.append(f"expected c = {expected.c}, got {c}")
    if expected.chi is not None and chi != expected.chi:
        failures.append(f"expected chi = {expected.chi}, got {chi}")
    if expected.group is not None:
        got = model.abelianization()
        if got != expected.group:
            failures.append(f"expected group {expected.group}, got {got}")
    if expected.prototype is not None:
        from .prototypes import family_for_model, prototype_name

        group = model.abelianization()
        family = family_for_model(model, group)
        name = prototype_name(model.chars, group, family) if family else None
        got = name.display if name else "unclassified"
        if got != expected.prototype:
            failures.append(f"expected prototype {expected.prototype!r}, got {got!r}")
    return failures
