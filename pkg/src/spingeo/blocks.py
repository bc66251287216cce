"""Catalog of building blocks with exact invariants and marked surfaces.

Presentations for the product-of-surfaces blocks are generated from a
template indexed by the genus n of the second factor, never hard-coded
per n.  Surface certificates (trivial meridians, dual spheres, parallel
copies) are carried as asserted catalog data; the calculus consumes them
but does not re-derive them.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import PreconditionError
from .invariants import CharNumbers, spin_char_numbers
from .models import (
    LAGRANGIAN,
    SYMPLECTIC,
    ManifoldModel,
    MarkedSurface,
    RecipeStep,
    SurgeryData,
)
from .presentations import Presentation
from .words import Word, commutator, gen


def _eq(lhs: Word, rhs: Word) -> Word:
    """Relator for the relation lhs = rhs."""
    return lhs * ~rhs


def product_block_generators(n: int) -> tuple[str, ...]:
    """Generators of pi1 for (genus 2 surface) x (genus n surface)."""
    names = ["a1", "b1", "a2", "b2"]
    for j in range(1, n + 1):
        names += [f"c{j}", f"d{j}"]
    return tuple(names)


def surgered_product_relations(n: int) -> tuple[Word, ...]:
    """Relation list of the fully surgered genus-2 x genus-n product.

    The first block is the n = 2 core (eight surgery relations, eight
    commuting relations, two surface relations); for n >= 3 each extra
    handle contributes two surgery relations and two commuting relations,
    plus one product relation over j >= 2.
    """
    if n < 2:
        raise PreconditionError("the product block needs n >= 2")
    a1, b1, a2, b2 = gen("a1"), gen("b1"), gen("a2"), gen("b2")
    c = {j: gen(f"c{j}") for j in range(1, n + 1)}
    d = {j: gen(f"d{j}") for j in range(1, n + 1)}

    rels = [
        _eq(commutator(~b1, ~d[1]), a1),
        _eq(commutator(~a1, d[1]), b1),
        _eq(commutator(~b2, ~d[2]), a2),
        _eq(commutator(~a2, d[2]), b2),
        _eq(commutator(~d[1], ~b2), c[1]),
        _eq(commutator(~c[1], b2), d[1]),
        _eq(commutator(~d[2], ~b1), c[2]),
        _eq(commutator(~c[2], b1), d[2]),
        commutator(a1, c[1]),
        commutator(a1, c[2]),
        commutator(a1, d[2]),
        commutator(b1, c[1]),
        commutator(a2, c[1]),
        commutator(a2, c[2]),
        commutator(a2, d[1]),
        commutator(b2, c[2]),
        commutator(a1, b1) * commutator(a2, b2),
        commutator(c[1], d[1]) * commutator(c[2], d[2]),
    ]
    if n >= 3:
        for j in range(3, n + 1):
            rels.append(_eq(commutator(~a1, ~d[j]), c[j]))
            rels.append(_eq(commutator(~a2, ~c[j]), d[j]))
        for j in range(3, n + 1):
            rels.append(commutator(b1, c[j]))
            rels.append(commutator(b2, d[j]))
        product = Word()
        for j in range(2, n + 1):
            product = product * commutator(c[j], d[j])
        rels.append(product)
    return tuple(rels)


# Indices (into the first block) of the relations whose surgeries are
# withheld in the partially surgered block: the tori a1'xc1', a2'xc2' and
# a2''xd1' keep their meridian relations [b1^-1,d1^-1] = a1,
# [b2^-1,d2^-1] = a2 and [c1^-1,b2] = d1 unimposed.
_WITHHELD = (0, 2, 5)


@lru_cache(maxsize=None)
def four_torus() -> ManifoldModel:
    """The 4-torus with two disjoint Lagrangian tori cut out.

    Complement of the pair: generators x, y, a, b with [x, a] = [y, a] = 1
    (Baldridge-Kirk).  The first torus is made symplectic by a small
    perturbation of the symplectic form; the second stays Lagrangian.
    """
    x, y, a, b = gen("x"), gen("y"), gen("a"), gen("b")
    complement = Presentation(
        ("x", "y", "a", "b"),
        (commutator(x, a), commutator(y, a)),
    )
    t1 = MarkedSurface(
        "T1", genus=1, kind=SYMPLECTIC,
        meridian=commutator(~b, ~y), pushoffs=(x, a),
    )
    t2 = MarkedSurface(
        "T2", genus=1, kind=LAGRANGIAN,
        meridian=commutator(~x, b), pushoffs=(y, b * a * ~b),
    )
    chars = CharNumbers(
        e=0, sigma=0, b1=4, spin=True, symplectic=True,
        irreducible=True, sw_nontrivial=True, w2_type="spin",
    )
    return ManifoldModel(
        chars=chars,
        complement=complement,
        surfaces=(t1, t2),
        provenance=(RecipeStep.make("four_torus"),),
    )


def _fiber_pair(kind: str, dual_genus: int) -> tuple[MarkedSurface, MarkedSurface]:
    mk = lambda name: MarkedSurface(
        name, genus=1, kind=kind, meridian_trivial=True, dual_genus=dual_genus
    )
    return mk("F1"), mk("F2")


@lru_cache(maxsize=None)
def elliptic(s: int, knotted: bool = False) -> ManifoldModel:
    """E(2s), or its knot-surgery variant with identical invariants.

    Simply connected, spin, symplectic, with parallel fiber tori of square
    zero whose meridians die on a section sphere; the complement of a
    fiber is simply connected.
    """
    if s < 1:
        raise PreconditionError("elliptic block needs s >= 1")
    chars = spin_char_numbers(0, 2 * s)
    return ManifoldModel(
        chars=chars,
        complement=None,
        surfaces=_fiber_pair(SYMPLECTIC, dual_genus=0),
        provenance=(RecipeStep.make("elliptic", s=s, knotted=knotted),),
        variant="knot_surgery" if knotted else None,
    )


@lru_cache(maxsize=None)
def horikawa(kp: int) -> ManifoldModel:
    """The spin Horikawa surface H(8k'-1) on the line c = 2*chi - 6.

    Carries Lagrangian tori each meeting an embedded sphere once, so their
    meridians are trivial in the complement.
    """
    if kp < 1:
        raise PreconditionError("horikawa block needs k' >= 1")
    chars = spin_char_numbers(16 * kp - 8, 8 * kp - 1)
    return ManifoldModel(
        chars=chars,
        complement=None,
        surfaces=_fiber_pair(LAGRANGIAN, dual_genus=0),
        provenance=(RecipeStep.make("horikawa", kp=kp),),
    )


@lru_cache(maxsize=None)
def ppx_surface(x: int, genus: int) -> ManifoldModel:
    """The positive-signature spin surface with its genus-g curve.

    Invariants are stored as the exact leading terms chi = 6857*x^2,
    c = 60068*x^2 of the construction's asymptotics and the model is
    tagged nominal: every downstream claim through this block is
    conditional on these exact values.
    """
    if x < 1:
        raise PreconditionError("positive-signature block needs x >= 1")
    if genus < 2:
        raise PreconditionError("the carried curve needs genus >= 2")
    chars = spin_char_numbers(60068 * x * x, 6857 * x * x)
    mk = lambda name: MarkedSurface(
        name, genus=genus, kind=SYMPLECTIC, meridian_trivial=True, dual_genus=0
    )
    return ManifoldModel(
        chars=chars,
        complement=None,
        surfaces=(mk("S1"), mk("S2")),
        provenance=(RecipeStep.make("ppx_surface", x=x, genus=genus),),
        nominal=True,
    )


def park_sigma_formula(g: int) -> int:
    """The signature formula stated alongside the zero-signature block."""
    return -8 * g * g + 8 * g


@lru_cache(maxsize=None)
def park_block(g: int) -> ManifoldModel:
    """Simply connected spin block with a cusp torus and a genus-g surface.

    Its stated signature formula disagrees with the (c, chi) pair by a
    sign; the pair is primary data and the clash is carried as a warning,
    never silently corrected.
    """
    if g < 2:
        raise PreconditionError("park block needs g >= 2")
    c, chi = 8 * g * g - 16 * g + 8, 2 * g * g - g + 1
    chars = spin_char_numbers(c, chi)
    warning = (
        f"stated sigma formula gives {park_sigma_formula(g)} but the pair "
        f"(c, chi) = ({c}, {chi}) forces sigma = {chars.sigma}"
    )
    cusp = lambda name: MarkedSurface(
        name, genus=1, kind=SYMPLECTIC, meridian_trivial=True, dual_genus=0
    )
    sigma_g = MarkedSurface("Sg", genus=g, kind=SYMPLECTIC)
    return ManifoldModel(
        chars=chars,
        complement=None,
        surfaces=(cusp("T1"), cusp("T2"), sigma_g),
        provenance=(RecipeStep.make("park_block", g=g),),
        warnings=(warning,),
    )


def _spare_tori(n: int) -> tuple[MarkedSurface, ...]:
    # Four leftover Lagrangian tori per handle beyond the second; their
    # words are not tracked, and their meridians become trivial once the
    # block is summed into a simply connected piece.
    spares = []
    for j in range(3, n + 1):
        for tag in "pqrs":
            spares.append(
                MarkedSurface(
                    f"L{j}{tag}", genus=1, kind=LAGRANGIAN,
                    meridian_trivial_after_sum=True,
                )
            )
    return tuple(spares)


@lru_cache(maxsize=None)
def luttinger_block(n: int) -> ManifoldModel:
    """The partially surgered genus-2 x genus-n product.

    Three of the scheduled +-1 surgeries are withheld; their tori T1, T2,
    T3 stay Lagrangian with recorded meridians and push-offs, and the
    complement presentation is the full relation list minus the three
    withheld relations.
    """
    if n < 2:
        raise PreconditionError("luttinger block needs n >= 2")
    gens = product_block_generators(n)
    all_rels = surgered_product_relations(n)
    kept = tuple(r for i, r in enumerate(all_rels) if i not in _WITHHELD)
    complement = Presentation(gens, kept)

    a1, c1 = gen("a1"), gen("c1")
    a2, c2 = gen("a2"), gen("c2")
    b1, b2 = gen("b1"), gen("b2")
    d1, d2 = gen("d1"), gen("d2")
    t1 = MarkedSurface(
        "T1", genus=1, kind=LAGRANGIAN,
        meridian=commutator(~b1, ~d1), pushoffs=(a1, c1), dual_genus=1,
    )
    t2 = MarkedSurface(
        "T2", genus=1, kind=LAGRANGIAN,
        meridian=commutator(~b2, ~d2), pushoffs=(a2, c2),
    )
    t3 = MarkedSurface(
        "T3", genus=1, kind=LAGRANGIAN,
        meridian=commutator(~c1, b2), pushoffs=(d1, a2),
    )
    chars = CharNumbers(
        e=4 * n - 4, sigma=0, b1=3, spin=True, symplectic=True,
        irreducible=True, sw_nontrivial=True, w2_type="spin",
    )
    return ManifoldModel(
        chars=chars,
        complement=complement,
        surfaces=(t1, t2, t3) + _spare_tori(n),
        provenance=(RecipeStep.make("luttinger_block", n=n),),
    )


@lru_cache(maxsize=None)
def akhmedov_park_block(n: int) -> ManifoldModel:
    """The fully surgered product: integer cohomology of (2n-3)(S2xS2).

    All scheduled surgeries performed; the one plain torus surgery leaves
    a nullhomologous core torus that dials the infinite family, recorded
    with its surgery relator split.
    """
    if n < 2:
        raise PreconditionError("surgered product block needs n >= 2")
    gens = product_block_generators(n)
    all_rels = surgered_product_relations(n)
    # the dial surgery's relation does not hold in the complement of its core
    dial_index = 7  # [c2^-1, b1] = d2
    complement = Presentation(
        gens, tuple(r for i, r in enumerate(all_rels) if i != dial_index)
    )
    mu = commutator(~gen("c2"), gen("b1"))
    data = SurgeryData(beta=gen("d2"), mu=mu, p=-1, q=1)
    core = MarkedSurface(
        "Lam", genus=1, kind=LAGRANGIAN,
        meridian=data.relator(), nullhomologous=True, surgery=data,
    )
    chars = CharNumbers(
        e=4 * n - 4, sigma=0, b1=0, spin=True, symplectic=True,
        irreducible=True, sw_nontrivial=True, w2_type="spin",
    )
    return ManifoldModel(
        chars=chars,
        complement=complement,
        surfaces=(core,) + _spare_tori(n),
        provenance=(RecipeStep.make("akhmedov_park_block", n=n),),
    )
