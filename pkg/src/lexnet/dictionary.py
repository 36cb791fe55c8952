"""Dictionary source parsing.

The source format is UTF-8 S-expressions, one top-level form per entry:

    entry := "(" headword word-class unit+ ")"
    unit  := "(" part+ ")"
    part  := "(" token+ ")"

The first part of a unit is its head-part (the broad meaning), the rest
are det-parts (restrictions).  A part consisting of a single token may be
written bare, without its own parentheses.  ``;`` starts a comment that
runs to the end of the line.  Word classes come from a closed tag set:
noun, verb, adj, adv, other.

Example entry::

    (red adj
      ((of the colour)          ; unit 1, head-part
       (of blood or fire))      ;         det-part
      ((of a strong orange colour)))

All tokens are lowercased.  Entries sharing a headword are homographs and
must differ in word class.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterator, Optional

from .errors import ParseError
from .morphology import MorphTable, root_form

__all__ = [
    "WordClass",
    "Unit",
    "DictEntry",
    "parse_dictionary",
    "serialize_entries",
    "index_entries",
    "closure_warnings",
    "ClosureWarning",
]


class WordClass(str, Enum):
    NOUN = "noun"
    VERB = "verb"
    ADJ = "adj"
    ADV = "adv"
    OTHER = "other"


@dataclass
class Unit:
    """One numbered definition: a head-part plus zero or more det-parts."""

    head_part: list[str]
    det_parts: list[list[str]] = field(default_factory=list)

    def parts(self) -> Iterator[tuple[bool, list[str]]]:
        """Yields (is_head, tokens) in source order."""
        yield True, self.head_part
        for det in self.det_parts:
            yield False, det

    def tokens(self) -> Iterator[str]:
        for _, part in self.parts():
            yield from part


@dataclass
class DictEntry:
    headword: str
    word_class: WordClass
    units: list[Unit]


# ---------------------------------------------------------------------------
# parsing

_ATOM_TERMINATORS = set(" \t\r\n();")


class _Reader:
    """Character reader that tracks 1-based line/column for diagnostics."""

    def __init__(self, text: str):
        self.text = text
        self.pos = 0
        self.line = 1
        self.col = 1

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def advance(self) -> str:
        c = self.text[self.pos]
        self.pos += 1
        if c == "\n":
            self.line += 1
            self.col = 1
        else:
            self.col += 1
        return c

    def skip_blank(self) -> None:
        while self.pos < len(self.text):
            c = self.peek()
            if c == ";":
                while self.pos < len(self.text) and self.peek() != "\n":
                    self.advance()
            elif c.isspace():
                self.advance()
            else:
                return

    def error(self, message: str) -> ParseError:
        return ParseError(message, self.line, self.col)


def _read_form(r: _Reader):
    """One atom (str) or list, recursively."""
    r.skip_blank()
    c = r.peek()
    if c == "":
        raise r.error("unexpected end of input")
    if c == ")":
        raise r.error("unexpected ')'")
    if c == "(":
        r.advance()
        items = []
        while True:
            r.skip_blank()
            c = r.peek()
            if c == "":
                raise r.error("unclosed '('")
            if c == ")":
                r.advance()
                return items
            items.append(_read_form(r))
    # atom
    chars = []
    while r.peek() and r.peek() not in _ATOM_TERMINATORS:
        chars.append(r.advance())
    return "".join(chars).lower()


def _as_part(form, r: _Reader) -> list[str]:
    if isinstance(form, str):
        return [form]
    if not form or not all(isinstance(t, str) for t in form):
        raise r.error("a part must be a flat list of tokens")
    return list(form)


def _as_unit(form, r: _Reader) -> Unit:
    if isinstance(form, str):
        raise r.error(f"expected a unit, got bare token {form!r}")
    if not form:
        raise r.error("empty unit")
    parts = [_as_part(p, r) for p in form]
    head, dets = parts[0], parts[1:]
    if not head or not all(head):
        raise r.error("empty head-part")
    return Unit(head_part=head, det_parts=dets)


def parse_dictionary(source) -> list[DictEntry]:
    """Parse a dictionary source (string or text stream) into entries.

    Order is preserved; duplicate (headword, word-class) pairs are
    rejected.  Closure against the lexicon is checked separately by
    `closure_warnings`, not here.
    """
    text = source if isinstance(source, str) else source.read()
    r = _Reader(text)
    entries: list[DictEntry] = []
    seen: set[tuple[str, WordClass]] = set()
    while True:
        r.skip_blank()
        if r.peek() == "":
            break
        at_line, at_col = r.line, r.col
        form = _read_form(r)
        if isinstance(form, str):
            raise ParseError(f"expected an entry, got bare token {form!r}", at_line, at_col)
        if len(form) < 3:
            raise ParseError("entry needs a headword, a word class and at least one unit",
                             at_line, at_col)
        headword, tag = form[0], form[1]
        if not isinstance(headword, str) or not headword:
            raise ParseError("headword must be a token", at_line, at_col)
        if not isinstance(tag, str):
            raise ParseError("word class must be a token", at_line, at_col)
        try:
            word_class = WordClass(tag)
        except ValueError:
            raise ParseError(
                f"unknown word class {tag!r} (expected one of "
                f"{', '.join(c.value for c in WordClass)})", at_line, at_col) from None
        key = (headword, word_class)
        if key in seen:
            raise ParseError(f"duplicate entry for ({headword} {word_class.value})",
                             at_line, at_col)
        seen.add(key)
        units = [_as_unit(u, r) for u in form[2:]]
        entries.append(DictEntry(headword, word_class, units))
    return entries


def serialize_entries(entries: list[DictEntry]) -> str:
    """Canonical source text for entries (every part parenthesized)."""
    out = []
    for e in entries:
        units = []
        for u in e.units:
            parts = ["(" + " ".join(p) + ")" for _, p in u.parts()]
            units.append("(" + " ".join(parts) + ")")
        out.append(f"({e.headword} {e.word_class.value} " + " ".join(units) + ")")
    return "\n".join(out) + "\n"


def index_entries(entries: list[DictEntry]) -> dict[str, list[DictEntry]]:
    """headword -> entries, in source order."""
    index: dict[str, list[DictEntry]] = {}
    for e in entries:
        index.setdefault(e.headword, []).append(e)
    return index


# ---------------------------------------------------------------------------
# closure

@dataclass
class ClosureWarning:
    headword: str
    word_class: WordClass
    unit_index: int  # 1-based, mirroring numbered definitions
    token: str

    def __str__(self) -> str:
        return (f"({self.headword} {self.word_class.value}) unit "
                f"{self.unit_index}: token {self.token!r} has no entry")


def closure_warnings(entries: list[DictEntry],
                     morph: Optional[MorphTable] = None) -> list[ClosureWarning]:
    """Tokens that resolve to no headword, after root-mapping.

    A closed dictionary yields an empty list.  Offending tokens are
    dropped from link generation by the network builder.
    """
    if morph is None:
        from .morphology import default_table
        morph = default_table()
    lexicon = {e.headword for e in entries}
    warnings = []
    for e in entries:
        for i, unit in enumerate(e.units, start=1):
            for token in unit.tokens():
                if root_form(token, morph, lexicon) is None:
                    warnings.append(ClosureWarning(e.headword, e.word_class, i, token))
    return warnings
