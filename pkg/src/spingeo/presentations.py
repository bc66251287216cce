"""Finite presentations: construction, Tietze cleanup, and the text grammar.

Grammar (one declaration line, then one relator per line):

    # comment
    generators: x, y, a, b
    [x, a]
    [b^-1, y^-1] = a
    y^3

A word is a juxtaposition of terms; a term is a generator name, a
parenthesized word, or a commutator ``[u, v]`` = u v u^-1 v^-1, optionally
followed by ``^n`` with an integer n.  ``1`` denotes the empty word.
Names match ``[A-Za-z][A-Za-z0-9_]*``, so juxtaposed names need a
separator: ``a b``, ``a[b,c]`` or ``(a)(b)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, replace

from .errors import ParseError, UnknownGeneratorError
from .words import Word, commutator, format_word, gen


@dataclass(frozen=True)
class Presentation:
    generators: tuple[str, ...]
    relators: tuple[Word, ...] = ()

    def __post_init__(self):
        seen = set()
        for g in self.generators:
            if g in seen:
                raise ValueError(f"duplicate generator {g!r}")
            seen.add(g)
        for rel in self.relators:
            undeclared = rel.generators() - seen
            if undeclared:
                raise UnknownGeneratorError(
                    f"relator {format_word(rel)!r} uses undeclared {sorted(undeclared)}"
                )

    @property
    def is_trivial(self) -> bool:
        return not self.generators

    def __str__(self) -> str:
        return format_presentation(self)


TRIVIAL_PRESENTATION = Presentation(())


def add_relator(p: Presentation, w: Word) -> Presentation:
    """Quotient by one more relation; adding the empty word is a no-op."""
    undeclared = w.generators() - set(p.generators)
    if undeclared:
        raise UnknownGeneratorError(f"word uses undeclared {sorted(undeclared)}")
    if w.is_empty:
        return p
    return replace(p, relators=p.relators + (w,))


def add_relators(p: Presentation, words) -> Presentation:
    for w in words:
        p = add_relator(p, w)
    return p


def _eliminate(p: Presentation, rel_idx: int, syl_idx: int) -> Presentation:
    rel = p.relators[rel_idx]
    name, exp = rel.syllables[syl_idx]
    u = Word(rel.syllables[:syl_idx])
    v = Word(rel.syllables[syl_idx + 1:])
    image = (~u) * (~v) if exp == 1 else v * u
    table = {name: image}
    new_relators = tuple(
        r.substitute(table) for i, r in enumerate(p.relators) if i != rel_idx
    )
    new_generators = tuple(g for g in p.generators if g != name)
    return Presentation(new_generators, new_relators)


def tietze_simplify(p: Presentation, budget: int = 1000) -> Presentation:
    """Bounded, conservative cleanup by sound moves only.

    Moves: delete empty relators, delete duplicate relators (equal or
    inverse as reduced words), eliminate a generator defined by a relator
    in which it occurs exactly once with exponent +-1.  The group is
    unchanged; the routine is idempotent on its fixed points.
    """
    if budget < 0:
        raise ValueError("budget must be nonnegative")
    steps = 0
    while steps < budget:
        moved = False

        nonempty = tuple(r for r in p.relators if not r.is_empty)
        if len(nonempty) != len(p.relators):
            p = replace(p, relators=nonempty)
            steps += 1
            moved = True

        kept: list[Word] = []
        seen: set[tuple] = set()
        for r in p.relators:
            key = r.syllables
            inv_key = (~r).syllables
            if key in seen or inv_key in seen:
                moved = True
                steps += 1
                continue
            seen.add(key)
            kept.append(r)
        if len(kept) != len(p.relators):
            p = replace(p, relators=tuple(kept))

        target = None
        for ri, rel in enumerate(p.relators):
            counts: dict[str, int] = {}
            for name, _ in rel.syllables:
                counts[name] = counts.get(name, 0) + 1
            for si, (name, exp) in enumerate(rel.syllables):
                if abs(exp) == 1 and counts[name] == 1:
                    target = (ri, si)
                    break
            if target:
                break
        if target and steps < budget:
            p = _eliminate(p, *target)
            steps += 1
            moved = True

        if not moved:
            break
    return p


# --- text grammar ---------------------------------------------------------

_TOKEN = re.compile(r"\s*([A-Za-z][A-Za-z0-9_]*|-?\d+|\^|\(|\)|\[|\]|,|=)")


def _tokenize(text: str, line_no: int) -> list[str]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            if text[pos:].strip():
                raise ParseError(f"unexpected character {text[pos]!r}", line=line_no, column=pos + 1)
            break
        tokens.append(m.group(1))
        pos = m.end()
    return tokens


class _WordParser:
    def __init__(self, tokens: list[str], line_no: int):
        self.tokens = tokens
        self.pos = 0
        self.line_no = line_no

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def expect(self, tok: str):
        got = self.take()
        if got != tok:
            raise ParseError(f"expected {tok!r}, got {got!r}", line=self.line_no)

    def parse_word(self, stop: tuple[str, ...] = ()) -> Word:
        result = Word()
        while True:
            nxt = self.peek()
            if nxt is None or nxt in stop:
                return result
            result = result * self.parse_term()

    def parse_term(self) -> Word:
        atom = self.parse_atom()
        if self.peek() == "^":
            self.take()
            exp_tok = self.take()
            try:
                exp = int(exp_tok)
            except (TypeError, ValueError):
                raise ParseError(f"expected integer exponent, got {exp_tok!r}", line=self.line_no)
            return atom ** exp
        return atom

    def parse_atom(self) -> Word:
        tok = self.take()
        if tok is None:
            raise ParseError("unexpected end of word", line=self.line_no)
        if tok == "(":
            inner = self.parse_word(stop=(")",))
            self.expect(")")
            return inner
        if tok == "[":
            u = self.parse_word(stop=(",",))
            self.expect(",")
            v = self.parse_word(stop=("]",))
            self.expect("]")
            return commutator(u, v)
        if tok == "1":
            return Word()
        if re.fullmatch(r"[A-Za-z][A-Za-z0-9_]*", tok):
            return gen(tok)
        raise ParseError(f"unexpected token {tok!r} in word", line=self.line_no)


def parse_word(text: str, line_no: int = 1) -> Word:
    parser = _WordParser(_tokenize(text, line_no), line_no)
    w = parser.parse_word(stop=("=",))
    if parser.peek() == "=":
        parser.take()
        rhs = parser.parse_word()
        w = w * ~rhs
    if parser.peek() is not None:
        raise ParseError(f"trailing input {parser.peek()!r}", line=line_no)
    return w


def parse_presentation(text: str) -> Presentation:
    generators: tuple[str, ...] | None = None
    relators: list[Word] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        lowered = line.lower()
        if lowered.startswith("generators:") or lowered.startswith("gens:"):
            if generators is not None:
                raise ParseError("duplicate generators line", line=line_no)
            names = line.split(":", 1)[1]
            generators = tuple(n.strip() for n in names.split(",") if n.strip())
            continue
        if generators is None:
            raise ParseError("relator before generators line", line=line_no)
        w = parse_word(line, line_no=line_no)
        if not w.is_empty:
            relators.append(w)
    if generators is None:
        raise ParseError("missing generators line")
    p = Presentation(generators)
    return add_relators(p, relators)


def format_presentation(p: Presentation) -> str:
    lines = ["generators: " + ", ".join(p.generators)]
    lines.extend(format_word(r) for r in p.relators)
    return "\n".join(lines) + "\n"
