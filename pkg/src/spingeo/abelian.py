"""Finitely generated abelian groups in invariant-factor form.

The canonical shape is a divisibility chain d1 | d2 | ... of factors > 1
followed by trailing zeros, one zero per infinite cyclic summand.  The
classifying tag (trivial, Z, cyclic, ...) is derived from the factors.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import prod
from typing import Iterable


def _factorint(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def _canonical_factors(divisors: Iterable[int]) -> tuple[int, ...]:
    """Merge arbitrary cyclic orders Z/d into invariant-factor form."""
    rank = 0
    by_prime: dict[int, list[int]] = {}
    for d in divisors:
        d = abs(int(d))
        if d == 0:
            rank += 1
        elif d > 1:
            for p, e in _factorint(d).items():
                by_prime.setdefault(p, []).append(e)
    columns = []
    for p, exps in sorted(by_prime.items()):
        columns.append([p ** e for e in sorted(exps, reverse=True)])
    depth = max((len(c) for c in columns), default=0)
    torsion = []
    for i in range(depth):
        torsion.append(prod(c[i] for c in columns if i < len(c)))
    torsion.reverse()  # ascending divisibility chain
    return tuple(torsion) + (0,) * rank


@dataclass(frozen=True)
class AbelianType:
    """A finitely generated abelian group, canonicalized on construction."""

    invariant_factors: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(
            self, "invariant_factors", _canonical_factors(self.invariant_factors)
        )

    @classmethod
    def from_factors(cls, divisors: Iterable[int]) -> "AbelianType":
        return cls(tuple(divisors))

    @classmethod
    def trivial(cls) -> "AbelianType":
        return cls(())

    @classmethod
    def Z(cls) -> "AbelianType":
        return cls((0,))

    @classmethod
    def cyclic(cls, q: int) -> "AbelianType":
        return cls((q,))

    @classmethod
    def Z_plus_Z(cls) -> "AbelianType":
        return cls((0, 0))

    @classmethod
    def Z_plus_cyclic(cls, q: int) -> "AbelianType":
        return cls((q, 0))

    @classmethod
    def cyclic_pair(cls, p: int, q: int) -> "AbelianType":
        return cls((p, q))

    @property
    def free_rank(self) -> int:
        return self.invariant_factors.count(0)

    @property
    def torsion(self) -> tuple[int, ...]:
        return tuple(d for d in self.invariant_factors if d)

    @property
    def tag(self) -> str:
        t, r = self.torsion, self.free_rank
        if not t and r == 0:
            return "Trivial"
        if not t and r == 1:
            return "Z"
        if not t and r == 2:
            return "Z+Z"
        if len(t) == 1 and r == 0:
            return f"Cyclic({t[0]})"
        if len(t) == 1 and r == 1:
            return f"Z+Cyclic({t[0]})"
        if len(t) == 2 and r == 0:
            return f"Cyclic({t[0]})+Cyclic({t[1]})"
        return "Other"

    def __str__(self) -> str:
        if not self.invariant_factors:
            return "trivial"
        return " + ".join("Z" if d == 0 else f"Z_{d}" for d in self.invariant_factors)


def parse_group(text: str) -> AbelianType:
    """Parse group names like 'trivial', '1', 'Z', 'Z3', 'Z_3', 'Z+Z3', 'Z3+Z5'."""
    s = text.strip()
    if s in ("1", "0", "trivial", "Trivial"):
        return AbelianType.trivial()
    factors = []
    for part in s.split("+"):
        part = part.strip().replace("_", "")
        if part == "Z":
            factors.append(0)
        elif part.startswith("Z") and part[1:].isdigit():
            factors.append(int(part[1:]))
        else:
            raise ValueError(f"cannot parse group {text!r}")
    return AbelianType.from_factors(factors)


def abelianize_matrix(presentation) -> list[list[int]]:
    """Exponent-sum matrix: one row per relator, one column per generator."""
    gens = list(presentation.generators)
    index = {g: i for i, g in enumerate(gens)}
    rows = []
    for rel in presentation.relators:
        row = [0] * len(gens)
        for name, exp in rel.exponent_sums().items():
            row[index[name]] = exp
        rows.append(row)
    return rows


@lru_cache(maxsize=None)
def identify_abelian(presentation) -> AbelianType:
    """Classify H1 of the presented group via Smith normal form.

    This identifies the group itself only when the caller already knows it
    is abelian; the construction layer carries that certificate separately.
    Presentations are immutable, so results are memoized.
    """
    from .snf import invariant_factors

    n_gens = len(presentation.generators)
    matrix = abelianize_matrix(presentation)
    if not matrix:
        return AbelianType.from_factors([0] * n_gens)
    diag = invariant_factors(matrix)
    torsion = [d for d in diag if d not in (0, 1)]
    rank = n_gens - sum(1 for d in diag if d != 0)
    return AbelianType.from_factors(torsion + [0] * rank)
