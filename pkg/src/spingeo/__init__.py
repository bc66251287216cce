"""Exact calculus and verification engine for spin symplectic 4-manifold
geography: symplectic sums and torus surgeries with exact invariant and
fundamental-group bookkeeping, lattice-point realization, and prototype
classification."""

from .abelian import AbelianType, abelianize_matrix, identify_abelian, parse_group
from .blocks import (
    akhmedov_park_block,
    elliptic,
    four_torus,
    horikawa,
    luttinger_block,
    park_block,
    ppx_surface,
)
from .invariants import (
    CharNumbers,
    GeoPoint,
    check_consistency,
    chern_from_euler_sigma,
    euler_sigma_from_chern,
)
from .models import ManifoldModel, MarkedSurface, RecipeStep
from .presentations import Presentation, add_relator, parse_presentation, tietze_simplify
from .snf import smith_normal_form
from .surgery import (
    FamilyMarker,
    family_from_null_torus,
    lemma7_construct,
    lemma8_construct,
    luttinger,
    prop9_construct,
    prop11_construct,
    symplectic_sum,
    torus_surgery,
)
from .words import Word, commutator, free_reduce, gen

__version__ = "0.1.0"

__all__ = [
    "AbelianType",
    "CharNumbers",
    "FamilyMarker",
    "GeoPoint",
    "ManifoldModel",
    "MarkedSurface",
    "Presentation",
    "RecipeStep",
    "Word",
    "abelianize_matrix",
    "add_relator",
    "akhmedov_park_block",
    "check_consistency",
    "chern_from_euler_sigma",
    "commutator",
    "elliptic",
    "euler_sigma_from_chern",
    "family_from_null_torus",
    "four_torus",
    "free_reduce",
    "gen",
    "horikawa",
    "identify_abelian",
    "lemma7_construct",
    "lemma8_construct",
    "luttinger",
    "luttinger_block",
    "park_block",
    "parse_group",
    "parse_presentation",
    "ppx_surface",
    "prop9_construct",
    "prop11_construct",
    "smith_normal_form",
    "symplectic_sum",
    "tietze_simplify",
    "torus_surgery",
]
