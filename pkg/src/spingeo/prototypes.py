"""Homeomorphism prototypes and classification-criterion lookups.

Prototype names are connected sums of standard pieces; feeding a name back
through the connected-sum invariant calculator must reproduce the input
characteristic numbers exactly, which closes the loop between construction
and classification.  The two zero-signature family tables use different
indexing conventions in their sources and are kept verbatim, without
reconciliation.
"""

from __future__ import annotations

from dataclasses import dataclass

from .abelian import AbelianType
from .invariants import CharNumbers
from .models import ManifoldModel
from .surgery import FamilyMarker

# Lens-space pieces: L(p,1) x S^1 surgered along {x} x alpha kills the circle
# generator (pi1 = Z_p); surgering along {x} x alpha^q instead leaves
# pi1 = Z_p + Z_q.  Either surgery trades S^1 x D^3 for D^2 x S^2, so the
# piece has e = 2 and sigma = 0.
LENS_TILDE = "̃"  # combining tilde


@dataclass(frozen=True)
class Piece:
    label: str
    e: int
    sigma: int
    b1: int


def e2s_piece(s: int) -> Piece:
    return Piece(f"E({2 * s})", e=24 * s, sigma=-16 * s, b1=0)


def horikawa_piece(kp: int) -> Piece:
    return Piece(f"H({8 * kp - 1})", e=80 * kp - 4, sigma=-48 * kp, b1=0)


S2XS2 = Piece("S²×S²", e=4, sigma=0, b1=0)
S3XS1 = Piece("S³×S¹", e=0, sigma=0, b1=1)
S1XS3 = Piece("S¹×S³", e=0, sigma=0, b1=1)


def lens_piece(p: int) -> Piece:
    return Piece(f"L{LENS_TILDE}({p},1)×S¹", e=2, sigma=0, b1=0)


def lens_twisted_piece(p: int) -> Piece:
    return Piece(f"L{LENS_TILDE}{LENS_TILDE}({p},1)×S¹", e=2, sigma=0, b1=0)


@dataclass(frozen=True)
class PrototypeName:
    summands: tuple[tuple[Piece, int], ...]

    @property
    def display(self) -> str:
        parts = []
        for piece, mult in self.summands:
            if mult <= 0:
                continue
            parts.append(piece.label if mult == 1 else f"{mult}({piece.label})")
        return "#".join(parts)

    def char_numbers(self) -> CharNumbers:
        total = sum(m for _, m in self.summands if m > 0)
        e = sum(m * p.e for p, m in self.summands if m > 0) - 2 * (total - 1)
        sigma = sum(m * p.sigma for p, m in self.summands if m > 0)
        b1 = sum(m * p.b1 for p, m in self.summands if m > 0)
        return CharNumbers(e=e, sigma=sigma, b1=b1, spin=True, w2_type="spin")

    def __str__(self) -> str:
        return self.display


# --- classification criteria ------------------------------------------------

FREEDMAN = "Freedman"
HAMBLETON_TEICHNER = "Hambleton-Teichner"
HAMBLETON_KRECK = "Hambleton-Kreck"
UNSUPPORTED = "unsupported"


def _is_odd_prime(q: int) -> bool:
    if q < 3 or q % 2 == 0:
        return False
    d = 3
    while d * d <= q:
        if q % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class Criterion:
    tag: str
    preconditions: tuple[str, ...] = ()


def classification_criterion(group: AbelianType) -> Criterion:
    """Which homeomorphism-classification result applies to this group."""
    t, r = group.torsion, group.free_rank
    if not t and r == 0:
        return Criterion(FREEDMAN)
    if not t and r == 1:
        return Criterion(
            HAMBLETON_TEICHNER, ("infinite cyclic fundamental group",)
        )
    if r == 0 and len(t) == 1:
        return Criterion(
            HAMBLETON_KRECK,
            ("finite cyclic fundamental group", "manifolds share the same w2-type"),
        )
    if r == 0 and len(t) == 2 and t[0] == t[1] and _is_odd_prime(t[0]):
        return Criterion(
            HAMBLETON_KRECK,
            (
                f"q = {t[0]} is an odd prime",
                "manifolds share the same w2-type",
            ),
        )
    return Criterion(UNSUPPORTED)


# --- family parameter records -----------------------------------------------

@dataclass(frozen=True)
class NegativeStripFamily:
    """Points (8n-8, 2s+n-1) with sigma = -16s, built on the elliptic block."""

    s: int
    n: int


@dataclass(frozen=True)
class HorikawaStripFamily:
    """Points (16k'+8n-16, 8k'+n-2) with sigma = -48k'."""

    kp: int
    n: int


@dataclass(frozen=True)
class ZeroSignatureFamily:
    """Points on c = 8*chi; `table` picks one of the two verbatim name tables."""

    n: int
    table: str = "cor4"  # or "cor14"


def _group_tail(group: AbelianType) -> tuple[tuple[Piece, int], ...] | None:
    """Extra summands for the torsion groups; None when no prototype exists."""
    t, r = group.torsion, group.free_rank
    if not t and r == 0:
        return ()
    if r == 0 and len(t) == 1:
        return ((lens_piece(t[0]), 1),)
    if r == 0 and len(t) == 2:
        p, q = t[1], t[0]
        return ((lens_twisted_piece(p), 1),)
    return None


def prototype_name(
    chars: CharNumbers, group: AbelianType, family
) -> PrototypeName | None:
    """The named topological prototype for a cataloged family, or None.

    Groups Z+Z_p and Z+Z have no cataloged prototype; a chars/family
    mismatch also returns None ("unclassified") rather than raising.
    """
    if isinstance(family, NegativeStripFamily):
        s, n = family.s, family.n
        if chars.sigma != -16 * s or chars.c1_sq != 8 * n - 8:
            return None
        lead: tuple[tuple[Piece, int], ...] = ((e2s_piece(s), 1),)
        sphere_mult = 2 * n - 2
    elif isinstance(family, HorikawaStripFamily):
        kp, n = family.kp, family.n
        if chars.sigma != -48 * kp or chars.c1_sq != 16 * kp + 8 * n - 16:
            return None
        lead = ((horikawa_piece(kp), 1),)
        sphere_mult = 2 * n - 2
    elif isinstance(family, ZeroSignatureFamily):
        return _zero_signature_name(chars, group, family)
    else:
        return None

    if group.free_rank == 1 and not group.torsion:
        return PrototypeName(lead + ((S2XS2, sphere_mult + 1), (S3XS1, 1)))
    tail = _group_tail(group)
    if tail is None:
        return None
    return PrototypeName(lead + ((S2XS2, sphere_mult),) + tail)


def _zero_signature_name(
    chars: CharNumbers, group: AbelianType, family: ZeroSignatureFamily
) -> PrototypeName | None:
    if chars.sigma != 0:
        return None
    n = family.n
    if group.free_rank == 1 and not group.torsion:
        if family.table == "cor14":
            return PrototypeName(((S2XS2, 2 * n + 2), (S1XS3, 1)))
        return PrototypeName(((S2XS2, 2 * n), (S1XS3, 1)))
    tail = _group_tail(group)
    if tail is None:
        return None
    return PrototypeName(((S2XS2, 2 * n + 1),) + tail)


def family_for_model(model: ManifoldModel, group: AbelianType):
    """Infer the family record matching a constructed model's invariants.

    The Horikawa strips overlap the negative strip (sigma = -48k' is a
    multiple of 16), so the negative strip wins here; callers wanting the
    Horikawa naming pass a HorikawaStripFamily explicitly.
    """
    sigma, c = model.chars.sigma, model.chars.c1_sq
    if sigma < 0 and sigma % 16 == 0 and c % 8 == 0:
        s = -sigma // 16
        n = c // 8 + 1
        if n >= 1:
            return NegativeStripFamily(s=s, n=n)
    if sigma == 0:
        e = model.chars.e
        if group.free_rank == 1 and not group.torsion:
            # (2n)(S2xS2) plus S1xS3 has e = 4n
            if e % 4 == 0 and e > 0:
                return ZeroSignatureFamily(n=e // 4)
        elif (e - 4) % 4 == 0 and e > 4:
            # (2n+1)(S2xS2) with an optional Lens piece has e = 4n + 4
            return ZeroSignatureFamily(n=(e - 4) // 4)
    return None


# --- botany -----------------------------------------------------------------

@dataclass(frozen=True)
class BotanyReport:
    size: int
    shared_chars: bool
    shared_group: bool
    shared_w2: bool
    symplectic_members: int
    group: AbelianType
    criterion: Criterion
    sw_distinct: bool
    citation: str

    @property
    def consistent(self) -> bool:
        return (
            self.shared_chars
            and self.shared_group
            and self.shared_w2
            and self.symplectic_members == 1
        )


def botany_family_report(fam: FamilyMarker) -> BotanyReport:
    """Check a family's homeomorphism-criterion inputs and symplectic count."""
    members = fam.members()
    base = fam.base

    def numeric(m):
        return (m.chars.e, m.chars.sigma, m.chars.b1, m.chars.spin)

    shared_chars = all(numeric(m) == numeric(base) for m in members)
    group = base.abelianization()
    shared_group = all(m.abelianization() == group for m in members)
    shared_w2 = all(m.chars.w2_type == base.chars.w2_type for m in members)
    symplectic = sum(1 for m in members if m.chars.symplectic)
    return BotanyReport(
        size=len(members),
        shared_chars=shared_chars,
        shared_group=shared_group,
        shared_w2=shared_w2,
        symplectic_members=symplectic,
        group=group,
        criterion=classification_criterion(group),
        sw_distinct=fam.sw_distinct,
        citation=fam.citation,
    )
