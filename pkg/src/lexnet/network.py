"""Compile dictionary entries into the semantic network.

Construction follows three steps:

1. Each unit of an entry becomes one subreferant of the entry's node.
   Every token occurrence contributes links: its raw weight is the
   reciprocal of the root's occurrence count over all units of all
   entries, doubled when the token sits in a head-part, then divided
   over the root's sense nodes.  Link weights are normalized to sum to
   one within each subreferant.
2. A node with m subreferants weights them 2m-1-j for j = 1..m (so the
   first outweighs the last exactly 2:1), normalized to sum to one.
3. Every link grows a mirror back-link: a link of weight t inside a
   subreferant of weight h adds a back-link of raw weight h*t to the
   target's refere set, which is then normalized to sum to one as well.

Node identifiers are "<headword>_<k>" with k numbering same-headword
entries in source order.  Compilation is deterministic: identical inputs
yield identical networks.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from typing import Optional

from .dictionary import DictEntry, WordClass
from .errors import BuildError, FileFormatError
from .morphology import MorphTable, root_form

__all__ = [
    "Link",
    "Subreferant",
    "Node",
    "Network",
    "count_root_occurrences",
    "subreferant_weights",
    "build_subreferants",
    "generate_refere",
    "compile_network",
    "save_network",
    "load_network",
    "FORMAT_VERSION",
]

FORMAT_VERSION = 1
NORM_TOLERANCE = 1e-9


@dataclass
class Link:
    target: int      # index into Network.nodes
    thickness: float


@dataclass
class Subreferant:
    thickness: float          # h, normalized over the node's subreferants
    links: list[Link]


@dataclass
class Node:
    id: str
    headword: str
    word_class: WordClass
    subreferants: list[Subreferant]
    refere: list[Link] = field(default_factory=list)


class Network:
    """The compiled network. Treat as immutable once built."""

    def __init__(self, nodes: list[Node], morph: Optional[MorphTable] = None):
        self.nodes = nodes
        self.morph = morph
        self.headword_index: dict[tuple[str, WordClass], int] = {}
        self.root_index: dict[str, list[int]] = {}
        for i, node in enumerate(nodes):
            self.headword_index[(node.headword, node.word_class)] = i
            self.root_index.setdefault(node.headword, []).append(i)

    def __len__(self) -> int:
        return len(self.nodes)

    def resolve(self, word: str) -> list[int]:
        """Sense node indices for a surface word, [] if unresolvable."""
        if self.morph is not None:
            root = root_form(word, self.morph, self.root_index)
        else:
            root = word if word in self.root_index else None
        if root is None:
            return []
        return self.root_index[root]

    def resolve_root(self, word: str) -> Optional[str]:
        if self.morph is not None:
            return root_form(word, self.morph, self.root_index)
        return word if word in self.root_index else None

    def word_class_of(self, root: str) -> Optional[str]:
        senses = self.root_index.get(root)
        if not senses:
            return None
        return self.nodes[senses[0]].word_class.value


# ---------------------------------------------------------------------------
# construction

def count_root_occurrences(entries: list[DictEntry], morph: MorphTable
                           ) -> Counter:
    """Occurrences of each root over all units; unresolvable tokens skipped."""
    lexicon = {e.headword for e in entries}
    counts: Counter = Counter()
    for e in entries:
        for unit in e.units:
            for token in unit.tokens():
                root = root_form(token, morph, lexicon)
                if root is not None:
                    counts[root] += 1
    return counts


def subreferant_weights(m: int) -> list[float]:
    """Normalized weights for m subreferants, descending, first:last = 2:1.

    Raw weight of the j-th subreferant is 2m - 1 - j, j = 1..m.  A single
    subreferant has raw weight 0 but must carry the whole unit mass.
    """
    if m < 1:
        raise ValueError(f"a node needs at least one subreferant, got m={m}")
    if m == 1:
        return [1.0]
    raw = [float(2 * m - 1 - j) for j in range(1, m + 1)]
    total = sum(raw)
    return [r / total for r in raw]


def build_subreferants(entry: DictEntry, counts: Counter,
                       sense_index: dict[str, list[int]], morph: MorphTable,
                       sense_freq: Optional[dict[int, float]] = None
                       ) -> list[Subreferant]:
    """Subreferants for one entry (step 1 plus the h weights of step 2).

    `sense_index` maps roots to sense node indices and doubles as the
    lexicon for root-mapping.  A token whose root has several senses
    splits its weight over them, proportionally to `sense_freq` when
    given, uniformly otherwise.
    """
    h_weights = subreferant_weights(len(entry.units))
    subs = []
    for unit_no, (unit, h) in enumerate(zip(entry.units, h_weights), start=1):
        links: list[Link] = []
        for is_head, part in unit.parts():
            for token in part:
                root = root_form(token, morph, sense_index)
                if root is None:
                    continue  # closure violation, dropped with a warning upstream
                t = 1.0 / counts[root]
                if is_head:
                    t *= 2.0
                senses = sense_index[root]
                if sense_freq is not None:
                    freqs = [sense_freq.get(s, 1.0) for s in senses]
                    ftot = sum(freqs)
                    shares = [f / ftot for f in freqs]
                else:
                    shares = [1.0 / len(senses)] * len(senses)
                for sense, share in zip(senses, shares):
                    links.append(Link(sense, t * share))
        if not links:
            raise BuildError(
                f"unit {unit_no} of ({entry.headword} {entry.word_class.value}) "
                "has no resolvable tokens")
        total = sum(l.thickness for l in links)
        for l in links:
            l.thickness /= total
        subs.append(Subreferant(h, links))
    return subs


def generate_refere(nodes: list[Node]) -> None:
    """Grow and normalize every node's refere from the built subreferants."""
    for i, node in enumerate(nodes):
        for sub in node.subreferants:
            for link in sub.links:
                nodes[link.target].refere.append(
                    Link(i, sub.thickness * link.thickness))
    for node in nodes:
        total = sum(l.thickness for l in node.refere)
        if total > 0.0:
            for l in node.refere:
                l.thickness /= total


def compile_network(entries: list[DictEntry], morph: MorphTable,
                    counts: Optional[Counter] = None,
                    sense_freq: Optional[dict[int, float]] = None) -> Network:
    """Entries -> network. `counts` defaults to counting the entries themselves."""
    if not entries:
        raise BuildError("cannot compile an empty dictionary")
    if counts is None:
        counts = count_root_occurrences(entries, morph)

    sense_index: dict[str, list[int]] = {}
    ids = []
    per_headword: Counter = Counter()
    for i, e in enumerate(entries):
        per_headword[e.headword] += 1
        ids.append(f"{e.headword}_{per_headword[e.headword]}")
        sense_index.setdefault(e.headword, []).append(i)

    nodes = []
    for e, node_id in zip(entries, ids):
        subs = build_subreferants(e, counts, sense_index, morph, sense_freq)
        nodes.append(Node(node_id, e.headword, e.word_class, subs))
    generate_refere(nodes)
    return Network(nodes, morph)


# ---------------------------------------------------------------------------
# persistence

def network_to_json(network: Network) -> dict:
    return {
        "format_version": FORMAT_VERSION,
        "nodes": [
            {
                "id": n.id,
                "headword": n.headword,
                "word_class": n.word_class.value,
                "subreferants": [
                    {"h": s.thickness,
                     "links": [[l.target, l.thickness] for l in s.links]}
                    for s in n.subreferants
                ],
                "refere": [[l.target, l.thickness] for l in n.refere],
            }
            for n in network.nodes
        ],
    }


def network_from_json(obj: dict, morph: Optional[MorphTable] = None) -> Network:
    version = obj.get("format_version")
    if version != FORMAT_VERSION:
        raise FileFormatError(
            f"unsupported network format_version: {version!r} "
            f"(expected {FORMAT_VERSION})")
    try:
        nodes = []
        for n in obj["nodes"]:
            subs = [
                Subreferant(float(s["h"]),
                            [Link(int(t), float(w)) for t, w in s["links"]])
                for s in n["subreferants"]
            ]
            refere = [Link(int(t), float(w)) for t, w in n["refere"]]
            nodes.append(Node(str(n["id"]), str(n["headword"]),
                              WordClass(n["word_class"]), subs, refere))
    except (KeyError, TypeError, ValueError) as exc:
        raise FileFormatError(f"bad network document: {exc}") from exc
    size = len(nodes)
    for n in nodes:
        for s in n.subreferants:
            for l in s.links:
                if not 0 <= l.target < size:
                    raise FileFormatError(f"link target out of range in {n.id}")
        for l in n.refere:
            if not 0 <= l.target < size:
                raise FileFormatError(f"refere target out of range in {n.id}")
    return Network(nodes, morph)


def save_network(network: Network, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(network_to_json(network), fh)


def load_network(path, morph: Optional[MorphTable] = None) -> Network:
    with open(path, encoding="utf-8") as fh:
        try:
            obj = json.load(fh)
        except json.JSONDecodeError as exc:
            raise FileFormatError(f"bad network file {path}: {exc}") from exc
    return network_from_json(obj, morph)
