"""Exact characteristic-number bookkeeping for spin symplectic 4-manifolds.

Conventions for a closed oriented 4-manifold: c = 2e + 3*sigma and
chi = (e + sigma)/4; inverting, sigma = c - 8*chi and e = 4*chi - sigma.
b2 = e - 2 + 2*b1, split as b2+- = (b2 +- sigma)/2.  b1 is stored rather
than derived because torus surgeries change it while fixing e and sigma.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvariantError


def chern_from_euler_sigma(e: int, sigma: int) -> tuple[int, int]:
    """(c, chi) from (e, sigma); requires e + sigma divisible by 4."""
    if (e + sigma) % 4:
        raise InvariantError(f"e + sigma = {e + sigma} is not divisible by 4")
    return 2 * e + 3 * sigma, (e + sigma) // 4


def euler_sigma_from_chern(c: int, chi: int) -> tuple[int, int]:
    """(e, sigma) from (c, chi); exact inverse of chern_from_euler_sigma."""
    sigma = c - 8 * chi
    return 4 * chi - sigma, sigma


@dataclass(frozen=True)
class CharNumbers:
    e: int
    sigma: int
    b1: int = 0
    spin: bool = False
    symplectic: bool = False
    irreducible: bool = False
    sw_nontrivial: bool = False
    w2_type: str = "unknown"  # "spin" or "unknown"

    @property
    def c1_sq(self) -> int:
        return 2 * self.e + 3 * self.sigma

    @property
    def chi_h(self) -> int:
        if (self.e + self.sigma) % 4:
            raise InvariantError(
                f"chi_h undefined: e + sigma = {self.e + self.sigma} not divisible by 4"
            )
        return (self.e + self.sigma) // 4

    @property
    def b2(self) -> int:
        return self.e - 2 + 2 * self.b1

    @property
    def b2_plus(self) -> int:
        return (self.b2 + self.sigma) // 2

    @property
    def b2_minus(self) -> int:
        return (self.b2 - self.sigma) // 2

    def chern_pair(self) -> tuple[int, int]:
        return self.c1_sq, self.chi_h


def spin_char_numbers(c: int, chi: int, b1: int = 0, *, symplectic: bool = True) -> CharNumbers:
    """Catalog helper: spin symplectic invariants from a Chern pair."""
    e, sigma = euler_sigma_from_chern(c, chi)
    return CharNumbers(
        e=e,
        sigma=sigma,
        b1=b1,
        spin=True,
        symplectic=symplectic,
        irreducible=True,
        sw_nontrivial=True,
        w2_type="spin",
    )


@dataclass(frozen=True)
class ConsistencyReport:
    violations: tuple[str, ...] = ()
    notes: tuple[str, ...] = ()

    @property
    def passed(self) -> bool:
        return not self.violations

    def __str__(self) -> str:
        if self.passed and not self.notes:
            return "consistent"
        lines = [f"VIOLATION: {v}" for v in self.violations]
        lines += [f"note: {n}" for n in self.notes]
        return "\n".join(lines)


def check_consistency(
    stated: CharNumbers,
    claimed_pair: tuple[int, int] | None = None,
    *,
    nominal: bool = False,
) -> ConsistencyReport:
    """Verify the identities a CharNumbers record must satisfy.

    With `nominal` set, congruence failures are reported as notes instead of
    violations: blocks whose invariants are stored as the leading terms of an
    approximation cannot be held to divisibility constraints.
    """
    violations: list[str] = []
    notes: list[str] = []

    def congruence_issue(msg: str) -> None:
        (notes if nominal else violations).append(msg + ("  [nominal block]" if nominal else ""))

    if (stated.e + stated.sigma) % 4:
        congruence_issue(f"e + sigma = {stated.e + stated.sigma} not divisible by 4")
    if stated.spin and stated.sigma % 16:
        congruence_issue(f"spin requires sigma = 0 mod 16, got sigma = {stated.sigma}")
    if stated.b1 < 0:
        violations.append(f"b1 = {stated.b1} negative")
    b2 = stated.b2
    if (b2 + stated.sigma) % 2 or (b2 - stated.sigma) % 2:
        violations.append(f"b2 = {b2} and sigma = {stated.sigma} have mixed parity")
    else:
        if stated.b2_plus < 0:
            violations.append(f"b2+ = {stated.b2_plus} negative")
        if stated.b2_minus < 0:
            violations.append(f"b2- = {stated.b2_minus} negative")
    if stated.symplectic and not stated.sw_nontrivial:
        violations.append("symplectic without the Seiberg-Witten nontriviality certificate")
    if stated.w2_type == "spin" and not stated.spin:
        violations.append("w2 type marked spin but spin flag is clear")

    if claimed_pair is not None:
        c, chi = claimed_pair
        if stated.sigma != c - 8 * chi:
            violations.append(
                f"sigma = {stated.sigma} but claimed (c, chi) = ({c}, {chi}) forces sigma = {c - 8 * chi}"
            )
        if stated.e != 12 * chi - c:
            violations.append(
                f"e = {stated.e} but claimed (c, chi) = ({c}, {chi}) forces e = {12 * chi - c}"
            )

    return ConsistencyReport(tuple(violations), tuple(notes))


@dataclass(frozen=True)
class GeoPoint:
    """A lattice point (c, chi) in the geography plane."""

    c: int
    chi: int

    @property
    def sigma(self) -> int:
        return self.c - 8 * self.chi

    @property
    def e(self) -> int:
        return 4 * self.chi - self.sigma

    def spin_admissible(self) -> tuple[bool, str]:
        if self.c % 8:
            return False, f"c = {self.c} is not 0 mod 8"
        if self.sigma % 16:
            return False, f"sigma = {self.sigma} is not 0 mod 16"
        return True, "c = 0 mod 8 and sigma = 0 mod 16"
