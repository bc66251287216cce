"""Manifold models: marked surfaces, provenance steps, and the working data.

A model carries the complement presentation of all its word-tracked marked
surfaces; pi1 of the closed manifold is that presentation plus the tracked
meridian relators.  Surfaces without word data (meridian None) are carried
as certificates only; every such surface in the catalog either has a
commutator meridian (so H1 is unaffected) or a certified-trivial meridian.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Any

from .abelian import AbelianType, identify_abelian
from .errors import UnknownGeneratorError
from .invariants import CharNumbers, ConsistencyReport, check_consistency
from .presentations import TRIVIAL_PRESENTATION, Presentation, add_relators
from .words import Word

SYMPLECTIC = "symplectic"
LAGRANGIAN = "lagrangian"


@dataclass(frozen=True)
class SurgeryData:
    """How a core torus was produced: relator = beta^p * mu^q of the old torus."""

    beta: Word
    mu: Word
    p: int
    q: int

    def relator(self, dial: int = 1) -> Word:
        return (self.beta ** self.p) * (self.mu ** (self.q * dial))


@dataclass(frozen=True)
class MarkedSurface:
    id: str
    genus: int
    self_intersection: int = 0
    kind: str = LAGRANGIAN
    meridian: Word | None = None
    pushoffs: tuple[Word, Word] | None = None
    meridian_trivial: bool = False
    nullhomologous: bool = False
    dual_genus: int | None = None  # a geometric dual of this genus exists
    meridian_trivial_after_sum: bool = False
    surgery: SurgeryData | None = None  # set on core tori of torus surgeries

    @property
    def tracked(self) -> bool:
        return self.meridian is not None

    def pushoff(self, selector: int | str) -> Word:
        if self.pushoffs is None:
            raise ValueError(f"surface {self.id!r} has no push-off data")
        if isinstance(selector, int):
            return self.pushoffs[selector]
        for w in self.pushoffs:
            if len(w.syllables) == 1 and w.syllables[0] == (selector, 1):
                return w
        raise ValueError(f"surface {self.id!r} has no push-off named {selector!r}")


@dataclass(frozen=True)
class RecipeStep:
    """One node of a construction tree; serializable to the recipe format."""

    op: str
    params: tuple[tuple[str, Any], ...] = ()
    children: tuple["RecipeStep", ...] = ()

    KINDS = {
        "sum": "sum",
        "luttinger": "luttinger",
        "torus_surgery": "torus_surgery",
        "family_member": "family",
    }

    @property
    def kind(self) -> str:
        return self.KINDS.get(self.op, "block")

    @classmethod
    def make(cls, op: str, children: tuple["RecipeStep", ...] = (), **params) -> "RecipeStep":
        return cls(op, tuple(sorted(params.items())), children)

    def param_dict(self) -> dict[str, Any]:
        return dict(self.params)


@dataclass(frozen=True)
class ManifoldModel:
    chars: CharNumbers
    complement: Presentation | None
    surfaces: tuple[MarkedSurface, ...] = ()
    provenance: tuple[RecipeStep, ...] = ()
    nominal: bool = False
    warnings: tuple[str, ...] = ()
    pi1_abelian_certified: bool = False
    variant: str | None = None  # e.g. knot-surgery variant tag

    def __post_init__(self):
        if self.complement is not None:
            declared = set(self.complement.generators)
            for s in self.surfaces:
                words = []
                if s.meridian is not None:
                    words.append(s.meridian)
                if s.pushoffs is not None:
                    words.extend(s.pushoffs)
                for w in words:
                    missing = w.generators() - declared
                    if missing:
                        raise UnknownGeneratorError(
                            f"surface {s.id!r} word uses undeclared {sorted(missing)}"
                        )

    @property
    def pi1(self) -> Presentation:
        """Presentation of the closed manifold: complement + tracked meridians."""
        base = self.complement if self.complement is not None else TRIVIAL_PRESENTATION
        meridians = [s.meridian for s in self.surfaces if s.meridian is not None]
        return add_relators(base, meridians)

    @property
    def simply_connected_certified(self) -> bool:
        """True when pi1 = 1 is certified, not merely when H1 vanishes.

        Either the presentation is literally empty, or the construction
        proofs certified the group abelian and its abelianization is
        trivial.
        """
        if self.pi1.is_trivial:
            return True
        return self.pi1_abelian_certified and self.abelianization() == AbelianType.trivial()

    def complement_pi1(self, surface_id: str) -> Presentation | None:
        """Presentation of the complement of one surface, when certified.

        A trivial meridian in a certified simply connected manifold forces
        a simply connected complement; otherwise the tracked complement
        with every other tracked meridian filled back in is returned, and
        without either certificate the answer is None.
        """
        s = self.surface(surface_id)
        if self.simply_connected_certified and s.meridian_trivial:
            return TRIVIAL_PRESENTATION
        if s.tracked and self.complement is not None:
            others = [
                t.meridian
                for t in self.surfaces
                if t.id != surface_id and t.meridian is not None
            ]
            return add_relators(self.complement, others)
        return None

    def surface(self, surface_id: str) -> MarkedSurface:
        for s in self.surfaces:
            if s.id == surface_id:
                return s
        raise KeyError(f"no marked surface {surface_id!r}")

    def has_surface(self, surface_id: str) -> bool:
        return any(s.id == surface_id for s in self.surfaces)

    def abelianization(self) -> AbelianType:
        return identify_abelian(self.pi1)

    def pi1_group(self) -> AbelianType | None:
        """The fundamental group, available exactly when certified abelian."""
        return self.abelianization() if self.pi1_abelian_certified else None

    def consistency(self, claimed_pair: tuple[int, int] | None = None) -> ConsistencyReport:
        return check_consistency(self.chars, claimed_pair, nominal=self.nominal)

    def replace_surfaces(self, surfaces: tuple[MarkedSurface, ...]) -> "ManifoldModel":
        return replace(self, surfaces=surfaces)

    def with_step(self, step: RecipeStep) -> "ManifoldModel":
        return replace(self, provenance=(step,))

    @property
    def provenance_root(self) -> RecipeStep | None:
        return self.provenance[0] if self.provenance else None
