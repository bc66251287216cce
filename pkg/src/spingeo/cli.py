"""Command-line front end.

Exit codes: 0 pass, 1 assertion failure, 2 input error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .abelian import identify_abelian, parse_group
from .config import load_config
from .errors import CatalogError, ParseError, RecipeError, SpingeoError
from .geography import region_report
from .models import ManifoldModel, RecipeStep
from .prototypes import UNSUPPORTED, classification_criterion, family_for_model, prototype_name
from .recipes import check_expected, evaluate, load_recipe
from .reports import write_coverage_csv
from .verify import FAIL, verify_claim

EXIT_OK, EXIT_ASSERT, EXIT_INPUT = 0, 1, 2


def _render_step(step: RecipeStep, indent: int = 0) -> list[str]:
    params = ", ".join(f"{k}={v}" for k, v in step.params)
    lines = ["  " * indent + f"- {step.op}({params})"]
    for child in step.children:
        if child is not None:
            lines.extend(_render_step(child, indent + 1))
    return lines


def format_model_report(model: ManifoldModel) -> str:
    chars = model.chars
    c, chi = chars.chern_pair()
    group = identify_abelian(model.pi1)
    lines = [
        f"(c, chi)      = ({c}, {chi})",
        f"(e, sigma)    = ({chars.e}, {chars.sigma})",
        f"b1, b2+, b2-  = {chars.b1}, {chars.b2_plus}, {chars.b2_minus}",
        "flags         = "
        + ", ".join(
            name
            for name, val in (
                ("spin", chars.spin),
                ("symplectic", chars.symplectic),
                ("irreducible", chars.irreducible),
                ("sw-nontrivial", chars.sw_nontrivial),
            )
            if val
        ),
        f"H1            = {group}"
        + ("  (pi1 certified abelian)" if model.pi1_abelian_certified else ""),
    ]
    family = family_for_model(model, group)
    name = prototype_name(chars, group, family) if family else None
    lines.append(f"prototype     = {name.display if name else 'unclassified'}")
    if model.nominal:
        lines.append("note          = invariants conditional on nominal block values")
    for w in model.warnings:
        lines.append(f"warning       = {w}")
    if model.provenance_root is not None:
        lines.append("construction:")
        lines.extend(_render_step(model.provenance_root, 1))
    return "\n".join(lines)


def cmd_construct(args) -> int:
    try:
        recipe = load_recipe(args.file)
        model = evaluate(recipe.root)
    except (ParseError, RecipeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    print(format_model_report(model))
    failures = check_expected(model, recipe.expected)
    for msg in failures:
        print(f"ASSERTION FAILED: {msg}", file=sys.stderr)
    return EXIT_ASSERT if failures else EXIT_OK


def cmd_verify(args) -> int:
    try:
        cfg = load_config(args.config)
        results = verify_claim(args.claim, cfg)
    except (CatalogError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    for res in results:
        print(res.line())
    n_fail = sum(1 for r in results if r.status == FAIL)
    n_warn = sum(1 for r in results if r.status == "WARN")
    print(f"{args.claim}: {len(results)} cases, {n_fail} failed, {n_warn} warnings")
    return EXIT_ASSERT if n_fail else EXIT_OK


def cmd_map(args) -> int:
    try:
        group = parse_group(args.group)
        cfg = load_config(args.config)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if classification_criterion(group).tag == UNSUPPORTED:
        print(
            f"warning: group {group} has no supported classification criterion; "
            "mapping proceeds without prototype names",
            file=sys.stderr,
        )
    try:
        rows = region_report(args.cmax, args.chimax, group, cfg.search,
                             run_solver=args.solve)
        out = Path(args.out)
        if args.format == "csv":
            write_coverage_csv(rows, str(out))
            print(f"wrote {out}")
        else:
            from .plotting import write_geography_svg

            write_geography_svg(rows, args.chimax, args.cmax, group, str(out))
            csv_path = out.with_suffix(".csv")
            write_coverage_csv(rows, str(csv_path))
            print(f"wrote {out} and {csv_path}")
    except (OSError, SpingeoError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    return EXIT_OK


def cmd_abelianize(args) -> int:
    from .presentations import parse_presentation

    try:
        text = Path(args.file).read_text(encoding="utf-8")
        presentation = parse_presentation(text)
    except (ParseError, OSError, SpingeoError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    group = identify_abelian(presentation)
    factors = ", ".join(str(d) for d in group.invariant_factors) or "none"
    print(f"invariant factors: ({factors})")
    print(f"group: {group}  [{group.tag}]")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spingeo",
        description="exact calculus for the geography of spin symplectic 4-manifolds",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="evaluate a recipe file and report")
    p.add_argument("file")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="run a claim's verification suite")
    p.add_argument("claim")
    p.add_argument("--config", default=None)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("map", help="coverage map of a geography window")
    p.add_argument("--cmax", type=int, required=True)
    p.add_argument("--chimax", type=int, required=True)
    p.add_argument("--group", default="trivial")
    p.add_argument("--format", choices=("csv", "svg"), default="csv")
    p.add_argument("--out", required=True)
    p.add_argument("--solve", action="store_true",
                   help="run the bounded search on region points")
    p.add_argument("--config", default=None)
    p.set_defaults(func=cmd_map)

    p = sub.add_parser("abelianize", help="abelianize a presentation file")
    p.add_argument("file")
    p.set_defaults(func=cmd_abelianize)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
