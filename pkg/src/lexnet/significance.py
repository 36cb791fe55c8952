"""Word significance from corpus frequency.

A counted word's significance is its normalized information content,

    s(w) = -log(count(w)/N) / -log(1/N)

which is 1 for a hapax and 0 for a word filling the whole corpus.  Words
missing from the table fall back to the mean significance of their word
class, then to the global mean.

The counts file is UTF-8 TSV: a first line ``#total<TAB>N`` followed by
``word<TAB>count`` rows with an optional third word-class column.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Optional

from .errors import FileFormatError

__all__ = ["SignificanceTable", "build_significance", "significance"]


def _info(count: int, total: int) -> float:
    s = (math.log(total) - math.log(count)) / math.log(total)
    return min(1.0, max(0.0, s))


@dataclass
class SignificanceTable:
    total_tokens: int
    counts: dict[str, int]
    class_averages: dict[str, float] = field(default_factory=dict)
    global_average: float = 0.5

    def value(self, word: str, word_class: Optional[str] = None) -> float:
        count = self.counts.get(word)
        if count is not None:
            return _info(count, self.total_tokens)
        if word_class is not None and word_class in self.class_averages:
            return self.class_averages[word_class]
        return self.global_average

    # -- persistence (sidecar plumbing) ------------------------------------

    def to_json(self) -> dict:
        return {
            "total_tokens": self.total_tokens,
            "counts": self.counts,
            "class_averages": self.class_averages,
            "global_average": self.global_average,
        }

    @classmethod
    def from_json(cls, obj: dict) -> "SignificanceTable":
        try:
            return cls(
                total_tokens=int(obj["total_tokens"]),
                counts={str(k): int(v) for k, v in obj["counts"].items()},
                class_averages={str(k): float(v) for k, v in obj["class_averages"].items()},
                global_average=float(obj["global_average"]),
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise FileFormatError(f"bad significance table: {exc}") from exc


def _parse_counts(source) -> tuple[int, dict[str, int], dict[str, str]]:
    text = source if isinstance(source, str) else source.read()
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("#total\t"):
        raise FileFormatError("counts file must start with '#total<TAB>N'")
    try:
        total = int(lines[0].split("\t")[1])
    except (IndexError, ValueError) as exc:
        raise FileFormatError("bad total line in counts file") from exc
    counts: dict[str, int] = {}
    classes: dict[str, str] = {}
    for ln in lines[1:]:
        fields = ln.split("\t")
        if len(fields) < 2:
            raise FileFormatError(f"bad counts row: {ln!r}")
        word = fields[0].strip().lower()
        try:
            counts[word] = int(fields[1])
        except ValueError as exc:
            raise FileFormatError(f"bad count in row: {ln!r}") from exc
        if len(fields) > 2 and fields[2].strip():
            classes[word] = fields[2].strip().lower()
    return total, counts, classes


def build_significance(source, word_classes: Optional[dict[str, str]] = None
                       ) -> SignificanceTable:
    """Build the table from a counts stream (or its text).

    `word_classes` supplies classes for words the file does not tag; the
    file's own class column wins.  Counts must be in [1, N] and N >= 2.
    """
    total, counts, file_classes = _parse_counts(source)
    if total < 2:
        raise ValueError(f"corpus size must be at least 2, got {total}")
    classes = dict(word_classes or {})
    classes.update(file_classes)

    per_class: dict[str, list[float]] = {}
    values = []
    for word, count in counts.items():
        if count < 1:
            raise ValueError(f"count for {word!r} must be positive, got {count}")
        if count > total:
            raise ValueError(f"count for {word!r} exceeds corpus size")
        s = _info(count, total)
        values.append(s)
        cls = classes.get(word)
        if cls is not None:
            per_class.setdefault(cls, []).append(s)

    class_averages = {c: sum(v) / len(v) for c, v in per_class.items()}
    global_average = sum(values) / len(values) if values else 0.5
    return SignificanceTable(total, counts, class_averages, global_average)


def significance(table: SignificanceTable, word: str,
                 word_class: Optional[str] = None) -> float:
    """s(word) with class-average then global-average fallback."""
    return table.value(word, word_class)


def save_sidecar(obj: dict, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(obj, fh)


def load_sidecar(path) -> dict:
    with open(path, encoding="utf-8") as fh:
        try:
            return json.load(fh)
        except json.JSONDecodeError as exc:
            raise FileFormatError(f"bad sidecar file {path}: {exc}") from exc
