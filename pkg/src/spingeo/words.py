"""Freely reduced words over named generators.

A word is a run-length sequence of (generator, exponent) syllables with
nonzero exponents and no two adjacent syllables on the same generator.
Relators in this domain are mostly commutators with exponents, so the
run-length form keeps them short and makes inversion O(1) per syllable.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

from .errors import UnknownGeneratorError

Syllable = tuple[str, int]


def _reduce(letters: Iterable[Syllable]) -> tuple[Syllable, ...]:
    out: list[Syllable] = []
    for name, exp in letters:
        if exp == 0:
            continue
        if out and out[-1][0] == name:
            merged = out[-1][1] + exp
            out.pop()
            if merged:
                out.append((name, merged))
        else:
            out.append((name, exp))
    return tuple(out)


@dataclass(frozen=True)
class Word:
    """A freely reduced word. Construct through :func:`word` or operators."""

    syllables: tuple[Syllable, ...] = ()

    def __post_init__(self):
        for i, (name, exp) in enumerate(self.syllables):
            if exp == 0:
                raise ValueError(f"zero exponent on {name!r}")
            if i and self.syllables[i - 1][0] == name:
                raise ValueError(f"word not freely reduced at {name!r}")

    def __mul__(self, other: "Word") -> "Word":
        return Word(_reduce(self.syllables + other.syllables))

    def __invert__(self) -> "Word":
        return Word(tuple((name, -exp) for name, exp in reversed(self.syllables)))

    def __pow__(self, n: int) -> "Word":
        if n == 0:
            return Word()
        base = self if n > 0 else ~self
        result = base
        for _ in range(abs(n) - 1):
            result = result * base
        return result

    def __iter__(self) -> Iterator[Syllable]:
        return iter(self.syllables)

    def __bool__(self) -> bool:
        return bool(self.syllables)

    def __str__(self) -> str:
        return format_word(self)

    @property
    def is_empty(self) -> bool:
        return not self.syllables

    def length(self) -> int:
        return sum(abs(exp) for _, exp in self.syllables)

    def generators(self) -> frozenset[str]:
        return frozenset(name for name, _ in self.syllables)

    def exponent_sums(self) -> dict[str, int]:
        sums: dict[str, int] = {}
        for name, exp in self.syllables:
            sums[name] = sums.get(name, 0) + exp
        return sums

    def substitute(self, table: Mapping[str, "Word"]) -> "Word":
        """Replace each generator in `table` by its image word; freely reduce."""
        pieces: list[Syllable] = []
        for name, exp in self.syllables:
            image = table.get(name)
            if image is None:
                pieces.append((name, exp))
            else:
                pieces.extend((image ** exp).syllables)
        return Word(_reduce(pieces))

    def is_commutator_shape(self) -> bool:
        """True when the word is u v u^-1 v^-1 for single-syllable u, v."""
        s = self.syllables
        if len(s) != 4:
            return False
        (g1, e1), (g2, e2), (g3, e3), (g4, e4) = s
        return g1 == g3 and g2 == g4 and e1 == -e3 and e2 == -e4


def word(*letters: Syllable) -> Word:
    """Freely reduce a raw letter sequence into a Word."""
    return Word(_reduce(letters))


def free_reduce(letters: Iterable[Syllable], generators: Iterable[str] | None = None) -> Word:
    """Freely reduce raw letters, optionally checking generator declarations."""
    letters = tuple(letters)
    if generators is not None:
        declared = set(generators)
        for name, _ in letters:
            if name not in declared:
                raise UnknownGeneratorError(f"generator {name!r} is not declared")
    return Word(_reduce(letters))


def gen(name: str, exp: int = 1) -> Word:
    return Word(((name, exp),)) if exp else Word()


def commutator(u: Word, v: Word) -> Word:
    """[u, v] = u v u^-1 v^-1."""
    return u * v * ~u * ~v


def format_word(w: Word) -> str:
    """Render in the textual grammar: juxtaposition, ^ for exponents, 1 for empty."""
    if w.is_empty:
        return "1"
    parts = []
    for name, exp in w.syllables:
        parts.append(name if exp == 1 else f"{name}^{exp}")
    return " ".join(parts)
