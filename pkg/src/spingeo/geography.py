"""Lattice-point realization: enumeration, composition, and exact search.

All boundary comparisons are exact rational arithmetic: the region slope
8.76 is the rational 219/25 and the positive-signature block ratio is
60068/6857.  Floating point would misclassify boundary lattice points.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .abelian import AbelianType, identify_abelian
from .blocks import elliptic, horikawa, park_block, ppx_surface
from .errors import InvariantError, PreconditionError
from .invariants import GeoPoint
from .models import ManifoldModel, RecipeStep
from .surgery import lemma8_construct, prop9_construct, symplectic_sum

RATIO_BOUND = Fraction(219, 25)  # the region slope 8.76
PPX_RATIO = Fraction(60068, 6857)
RATIO_UPPER = Fraction(87601, 10000)


def group_n_lower_bound(group: AbelianType) -> int:
    """Groups without a Z factor need n >= 2; the others allow n >= 1."""
    return 1 if group.free_rank > 0 else 2


@dataclass(frozen=True)
class RealizationCertificate:
    point: GeoPoint
    group: AbelianType
    recipe: RecipeStep
    verified: bool = False

    def reverify(self) -> bool:
        from .recipes import evaluate

        model = evaluate(self.recipe)
        return (
            model.chars.chern_pair() == (self.point.c, self.point.chi)
            and identify_abelian(model.pi1) == self.group
            and model.chars.spin
        )


def _certify(point: GeoPoint, group: AbelianType, recipe: RecipeStep,
             model: ManifoldModel) -> RealizationCertificate:
    ok = (
        model.chars.chern_pair() == (point.c, point.chi)
        and identify_abelian(model.pi1) == group
        and model.chars.spin
    )
    return RealizationCertificate(point, group, recipe, verified=ok)


def theorem1_enumerate(
    group: AbelianType, n_max: int, s_max: int
) -> list[RealizationCertificate]:
    """One verified certificate per grid point (8n-8, 2s+n-1), sigma = -16s."""
    if n_max < 1 or s_max < 1:
        raise PreconditionError("bounds must be >= 1")
    if group.tag == "Other":
        raise PreconditionError(f"group {group} is outside the six-group range")
    certs = []
    for n in range(group_n_lower_bound(group), n_max + 1):
        for s in range(1, s_max + 1):
            point = GeoPoint(8 * n - 8, 2 * s + n - 1)
            recipe = RecipeStep.make("prop9", s=s, n=n, target=str(group))
            model = prop9_construct(s, n, group)
            certs.append(_certify(point, group, recipe, model))
    return certs


# --- the positive-signature composition -------------------------------------

def park_chern(k: int, x: int, g: int) -> tuple[int, int]:
    """(c, chi) of the k-fold genus-g composition, by the displayed formulas."""
    cy, chiy = 60068 * x * x, 6857 * x * x
    cz, chiz = 8 * g * g - 16 * g + 8, 2 * g * g - g + 1
    return k * cy + cz + 8 * k * (g - 1), k * chiy + chiz + k * (g - 1)


def _pick_surface(model: ManifoldModel, genus: int) -> tuple[str, bool]:
    """A square-zero surface to sum along, and whether it needs perturbing.

    Symplectic surfaces with trivial meridian win; a certified Lagrangian
    one (trivial meridian or geometric dual) is perturbed at the sum.
    """
    candidates = [
        s for s in model.surfaces if s.genus == genus and s.self_intersection == 0
    ]
    for s in candidates:
        if s.kind == "symplectic" and s.meridian_trivial:
            return s.id, False
    for s in candidates:
        if s.kind == "symplectic":
            return s.id, False
    for s in candidates:
        if s.meridian_trivial or s.dual_genus is not None:
            return s.id, True
    raise PreconditionError(f"no usable genus-{genus} surface of square zero")


def park_X_compose(k: int, x: int, g: int) -> ManifoldModel:
    """k copies of the positive-signature surface summed with the cusp block.

    Simply connected; a non-positive total signature is reported as a
    warning since the composition is meant to sit above the c = 8*chi line.
    """
    if k < 1:
        raise PreconditionError("need k >= 1 copies")
    if g < 2:
        raise PreconditionError("need genus g >= 2")
    y = ppx_surface(x, g)
    result = y
    for _ in range(k - 1):
        sid, perturb = _pick_surface(result, g)
        result = symplectic_sum(result, sid, y, "S1", perturb_a=perturb)
    z = park_block(g)
    sid, perturb = _pick_surface(result, g)
    result = symplectic_sum(result, sid, z, "Sg", perturb_a=perturb)
    expected = park_chern(k, x, g)
    if result.chars.chern_pair() != expected:
        raise InvariantError(
            f"composition arithmetic drifted: {result.chars.chern_pair()} != {expected}"
        )
    if result.chars.sigma <= 0:
        from dataclasses import replace

        result = replace(
            result,
            warnings=result.warnings
            + (f"composed signature {result.chars.sigma} is not positive",),
        )
    return result


def line_f(chi: int, x_model: ManifoldModel) -> Fraction:
    """The line through (c/2 + 6, c) with slope c/chi of the composed block."""
    c, chi_x = x_model.chars.chern_pair()
    if chi_x <= 0:
        raise PreconditionError("composed block needs positive chi")
    slope = Fraction(c, chi_x)
    return slope * (Fraction(chi) - Fraction(c, 2) - 6) + c


def composition_slope(k: int, x: int, g: int) -> Fraction:
    c, chi = park_chern(k, x, g)
    return Fraction(c, chi)


def composition_sigma(k: int, x: int, g: int) -> int:
    c, chi = park_chern(k, x, g)
    return c - 8 * chi


def find_steep_composition(
    k_max: int = 40, x_max: int = 16, g_set: tuple[int, ...] = (2, 3)
) -> tuple[int, int, int]:
    """Smallest (k, x, g), ordered lexicographically, with positive signature
    and slope exceeding 219/25.  The sources fix such values without naming
    them; this reports the least ones found in bounds."""
    for k in range(1, k_max + 1):
        for x in range(1, x_max + 1):
            for g in g_set:
                if composition_sigma(k, x, g) > 0 and composition_slope(k, x, g) > RATIO_BOUND:
                    return k, x, g
    raise PreconditionError("no composition in bounds exceeds the region slope")


# --- the V blocks and the W assembly ----------------------------------------

def v_chern(kind: str, a: int, b: int) -> tuple[int, int]:
    """(c, chi) of a V block. Kinds: h_e(kp, s), hh_e(kp, s), prop9(s, nv)."""
    if kind == "h_e":
        kp, s = a, b
        return 16 * kp - 8, 8 * kp - 1 + 2 * s
    if kind == "hh_e":
        kp, s = a, b
        return 16 * kp, 8 * kp + 6 + 2 * s
    if kind == "prop9":
        s, nv = a, b
        return 8 * nv - 8, 2 * s + nv - 1
    raise PreconditionError(f"unknown V kind {kind!r}")


def v_block(kind: str, a: int, b: int) -> ManifoldModel:
    if kind == "h_e":
        kp, s = a, b
        return symplectic_sum(horikawa(kp), "F1", elliptic(s), "F1", perturb_a=True)
    if kind == "hh_e":
        kp, s = a, b
        base = symplectic_sum(
            horikawa(1), "F1", horikawa(kp), "F1", perturb_a=True, perturb_b=True
        )
        sid, perturb = _pick_surface(base, 1)
        return symplectic_sum(base, sid, elliptic(s), "F1", perturb_a=perturb)
    if kind == "prop9":
        s, nv = a, b
        return prop9_construct(s, nv, AbelianType.trivial())
    raise PreconditionError(f"unknown V kind {kind!r}")


@dataclass(frozen=True)
class CompositionParams:
    k: int
    x: int
    g: int
    m: int
    v_kind: str
    v_a: int
    v_b: int

    def w_chern(self) -> tuple[int, int]:
        cx, chix = park_chern(self.k, self.x, self.g)
        cv, chiv = v_chern(self.v_kind, self.v_a, self.v_b)
        return self.m * cx + cv, self.m * chix + chiv


def compose_w(params: CompositionParams) -> ManifoldModel:
    """W = m copies of the composed block summed with V along tori."""
    v = v_block(params.v_kind, params.v_a, params.v_b)
    if params.m == 0:
        return v
    x = park_X_compose(params.k, params.x, params.g)
    w = x
    for _ in range(params.m - 1):
        wid, wperturb = _pick_surface(w, 1)
        xid, xperturb = _pick_surface(x, 1)
        w = symplectic_sum(w, wid, x, xid, perturb_a=wperturb, perturb_b=xperturb)
    wid, wperturb = _pick_surface(w, 1)
    vid, vperturb = _pick_surface(v, 1)
    return symplectic_sum(w, wid, v, vid, perturb_a=wperturb, perturb_b=vperturb)


def w_recipe(params: CompositionParams, group: AbelianType, tail_n: int) -> RecipeStep:
    x_step = RecipeStep.make("park_x", k=params.k, x=params.x, g=params.g)
    v_step = RecipeStep.make(
        "v_block", kind=params.v_kind, a=params.v_a, b=params.v_b
    )
    w_step = RecipeStep.make("park_w", children=(x_step, v_step), m=params.m)
    if group == AbelianType.trivial():
        return w_step
    return RecipeStep.make(
        "lemma8", children=(w_step,), n=tail_n, target=str(group)
    )


@dataclass(frozen=True)
class SearchBounds:
    m_max: int = 5
    k_max: int = 4
    x_max: int = 12
    g_set: tuple[int, ...] = (2, 3)
    kp_max: int = 40
    s_max: int = 2000
    nv_max: int = 60


@dataclass(frozen=True)
class NotFound:
    reason: str
    bounds: SearchBounds


def _tail_deltas(group: AbelianType) -> tuple[int, int, int]:
    """(tail n, delta c, delta chi) of the group tail applied to W."""
    if group == AbelianType.trivial():
        return 0, 0, 0
    if group.free_rank > 0:
        return 1, 0, 0
    return 2, 8, 1


def _v_solutions(rc: int, rchi: int, bounds: SearchBounds):
    """Closed-form integer solves for each V family at the residual point."""
    if (rc + 8) % 16 == 0:
        kp = (rc + 8) // 16
        if 1 <= kp <= bounds.kp_max and (rchi - 8 * kp + 1) % 2 == 0:
            s = (rchi - 8 * kp + 1) // 2
            if 1 <= s <= bounds.s_max:
                yield "h_e", kp, s
    if rc % 16 == 0:
        kp = rc // 16
        if 1 <= kp <= bounds.kp_max and (rchi - 8 * kp - 6) % 2 == 0:
            s = (rchi - 8 * kp - 6) // 2
            if 1 <= s <= bounds.s_max:
                yield "hh_e", kp, s
    if (rc + 8) % 8 == 0:
        nv = (rc + 8) // 8
        if 2 <= nv <= bounds.nv_max and (rchi - nv + 1) % 2 == 0:
            s = (rchi - nv + 1) // 2
            if 1 <= s <= bounds.s_max:
                yield "prop9", s, nv


def theorem2_solve(
    c: int,
    chi: int,
    group: AbelianType,
    bounds: SearchBounds = SearchBounds(),
) -> RealizationCertificate | NotFound:
    """Exact Diophantine search for W = m*X + V realizing (c, chi).

    Torus sums are invariant-additive, so candidate (m, X, V) parameters
    solve two linear equations exactly; a hit is rebuilt end to end
    (including the group tail) and verified with zero tolerance.
    """
    point = GeoPoint(c, chi)
    ok, reason = point.spin_admissible()
    if not ok:
        raise PreconditionError(f"point ({c}, {chi}) is not spin-admissible: {reason}")
    if group.tag == "Other":
        raise PreconditionError(f"group {group} is outside the six-group range")

    tail_n, dc, dchi = _tail_deltas(group)
    c_w, chi_w = c - dc, chi - dchi

    def attempt(params: CompositionParams) -> RealizationCertificate | None:
        if params.w_chern() != (c_w, chi_w):
            return None
        model = compose_w(params)
        if tail_n:
            model = lemma8_construct(model, tail_n, group)
        recipe = w_recipe(params, group, tail_n)
        cert = _certify(point, group, recipe, model)
        return cert if cert.verified else None

    for kind, a, b in _v_solutions(c_w, chi_w, bounds):
        cert = attempt(CompositionParams(1, 1, 2, 0, kind, a, b))
        if cert:
            return cert
    for k in range(1, bounds.k_max + 1):
        for x in range(1, bounds.x_max + 1):
            for g in bounds.g_set:
                cx, chix = park_chern(k, x, g)
                for m in range(1, bounds.m_max + 1):
                    rc, rchi = c_w - m * cx, chi_w - m * chix
                    if rchi < 1 or rc < 0:
                        break
                    for kind, a, b in _v_solutions(rc, rchi, bounds):
                        cert = attempt(CompositionParams(k, x, g, m, kind, a, b))
                        if cert:
                            return cert
    return NotFound(
        f"no composition found for ({c}, {chi}) with group {group}", bounds
    )


# --- coverage reporting ------------------------------------------------------

@dataclass(frozen=True)
class CoverageRow:
    point: GeoPoint
    group: AbelianType
    status: str  # thm1 | thm2 | unresolved | outside
    recipe_id: str


def _recipe_id(step: RecipeStep) -> str:
    inner = ",".join(f"{k}={v}" for k, v in step.params)
    children = ";".join(_recipe_id(ch) for ch in step.children if ch)
    body = inner if not children else f"{children}|{inner}" if inner else children
    return f"{step.op}({body})"


def region_report(
    cmax: int,
    chimax: int,
    group: AbelianType,
    bounds: SearchBounds = SearchBounds(),
    run_solver: bool = False,
) -> list[CoverageRow]:
    """Classify every spin-admissible lattice point in the window.

    Negative-signature points are matched against the enumeration grid;
    points in 8*chi <= c <= (219/25)*chi go through the bounded search when
    `run_solver` is set (and are otherwise reported unresolved); admissible
    points above the upper line are outside the covered regions.
    """
    rows = []
    n_low = group_n_lower_bound(group)
    for chi in range(1, chimax + 1):
        for c in range(0, cmax + 1):
            point = GeoPoint(c, chi)
            if not point.spin_admissible()[0]:
                continue
            if point.sigma < 0:
                n = c // 8 + 1
                s = -point.sigma // 16
                if n >= n_low and s >= 1:
                    recipe = RecipeStep.make("prop9", s=s, n=n, target=str(group))
                    rows.append(CoverageRow(point, group, "thm1", _recipe_id(recipe)))
                else:
                    rows.append(CoverageRow(point, group, "unresolved", ""))
            elif Fraction(c) <= RATIO_BOUND * chi:
                if run_solver:
                    found = theorem2_solve(c, chi, group, bounds)
                    if isinstance(found, RealizationCertificate):
                        rows.append(
                            CoverageRow(point, group, "thm2", _recipe_id(found.recipe))
                        )
                    else:
                        rows.append(CoverageRow(point, group, "unresolved", ""))
                else:
                    rows.append(CoverageRow(point, group, "unresolved", ""))
            else:
                rows.append(CoverageRow(point, group, "outside", ""))
    return rows
