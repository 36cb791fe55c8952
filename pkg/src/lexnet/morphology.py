"""Affix-stripping rules that map inflected words onto dictionary headwords.

A rule file is UTF-8 text, one rule per line:

    affix<TAB>replacement<TAB>classes

The affix is written ``-ish`` for a suffix or ``un-`` for a prefix.  The
replacement substitutes the affix (usually empty, e.g. ``-ies -> y`` keeps
``babies -> baby``).  ``classes`` is a comma-separated list of word classes
the candidate headword must carry, or ``*`` for any.  Blank lines and lines
starting with ``#`` are ignored.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Collection, Iterable, Mapping, Optional

__all__ = ["MorphRule", "MorphTable", "root_form", "default_table"]

# Default English rules.  Deliberately small; a real deployment overrides
# this with its own table via a rules file.
_DEFAULT_RULE_LINES = """\
-s\t\t*
-es\t\t*
-ed\t\t*
-ing\t\t*
-er\t\t*
-est\t\t*
-ly\t\t*
-ness\t\t*
-ish\t\t*
-y\t\t*
un-\t\t*
re-\t\t*
dis-\t\t*
-ment\t\t*
-ful\t\t*
-less\t\t*
-able\t\t*
"""


@dataclass
class MorphRule:
    affix: str            # "-ish" (suffix) or "un-" (prefix)
    replacement: str
    classes: Optional[frozenset[str]]  # None = any class

    @property
    def is_prefix(self) -> bool:
        return self.affix.endswith("-")

    @property
    def body(self) -> str:
        """The affix characters without the position marker."""
        return self.affix[:-1] if self.is_prefix else self.affix[1:]

    def apply(self, word: str) -> Optional[str]:
        """The candidate root, or None when the affix does not match."""
        body = self.body
        if self.is_prefix:
            if word.startswith(body) and len(word) > len(body):
                return self.replacement + word[len(body):]
        else:
            if word.endswith(body) and len(word) > len(body):
                return word[: len(word) - len(body)] + self.replacement
        return None


class MorphTable:
    """Ordered affix rules; longest matching affix wins, then rule order."""

    def __init__(self, rules: Iterable[MorphRule]):
        self.rules = list(rules)
        # Stable sort keeps file order among equal-length affixes.
        self._by_length = sorted(
            self.rules, key=lambda r: len(r.body), reverse=True
        )

    @classmethod
    def parse(cls, text: str) -> "MorphTable":
        rules = []
        for raw in text.splitlines():
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            fields = line.split("\t")
            if len(fields) < 2:
                raise ValueError(f"bad morph rule line: {raw!r}")
            affix, replacement = fields[0], fields[1]
            classes = fields[2].strip() if len(fields) > 2 else "*"
            if not (affix.startswith("-") or affix.endswith("-")):
                raise ValueError(f"affix needs a '-' position marker: {affix!r}")
            cls_set = None
            if classes and classes != "*":
                cls_set = frozenset(c.strip() for c in classes.split(",") if c.strip())
            rules.append(MorphRule(affix, replacement, cls_set))
        return cls(rules)

    @classmethod
    def load(cls, path) -> "MorphTable":
        with open(path, encoding="utf-8") as fh:
            return cls.parse(fh.read())

    def dump(self) -> str:
        lines = []
        for r in self.rules:
            classes = "*" if r.classes is None else ",".join(sorted(r.classes))
            lines.append(f"{r.affix}\t{r.replacement}\t{classes}")
        return "\n".join(lines) + "\n"


def default_table() -> MorphTable:
    return MorphTable.parse(_DEFAULT_RULE_LINES)


def _in_lexicon(candidate: str, rule: MorphRule, lexicon) -> bool:
    if candidate not in lexicon:
        return False
    if rule.classes is None:
        return True
    # Class restrictions only apply when the lexicon knows word classes.
    if isinstance(lexicon, Mapping):
        classes = lexicon.get(candidate)
        if isinstance(classes, (set, frozenset, list, tuple)):
            return bool(rule.classes.intersection(classes))
    return True


def root_form(word: str, table: MorphTable, lexicon: Collection[str]) -> Optional[str]:
    """Map a surface word onto a headword in `lexicon`, or None.

    A word that already is a headword maps to itself; otherwise the
    longest-affix rule whose stripped result is a headword decides.
    """
    if word in lexicon:
        return word
    for rule in table._by_length:
        candidate = rule.apply(word)
        if candidate is not None and _in_lexicon(candidate, rule, lexicon):
            return candidate
    return None
