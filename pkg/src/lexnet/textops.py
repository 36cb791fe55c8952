"""Text-level operations: similarity, coherence, retrieval, and expansion
of out-of-vocabulary words through their dictionary definitions.

A text is treated as a word list without syntactic structure, so text
similarity is word-list similarity of the two token bags.  A text's
coherence is its self-similarity: the significance-weighted activity its
own words retain in the pattern they jointly produce.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional

from .activation import DEFAULT_STEPS, ActivationPattern, observe, run
from .dictionary import DictEntry
from .errors import EmptyWordListError, FileFormatError, UnresolvableWordError
from .network import Network
from .significance import SignificanceTable
from .similarity import (WordList, compose_similarity, make_wordlist, psi,
                         similarity_wordlist, wordlist_stimulus)

__all__ = [
    "tokenize",
    "Text",
    "make_text",
    "expand_extra_word",
    "word_as_wordlist",
    "similarity_text",
    "coherence",
    "Episode",
    "EpisodeStore",
    "load_episodes",
    "retrieve",
]

def tokenize(raw: str) -> list[str]:
    """Lowercased alphabetic tokens; apostrophes survive inside a token."""
    text = raw.lower()
    tokens: list[str] = []
    current: list[str] = []
    for i, ch in enumerate(text):
        if ch.isalpha():
            current.append(ch)
        elif ch == "'" and current and i + 1 < len(text) and text[i + 1].isalpha():
            current.append(ch)
        else:
            if current:
                tokens.append("".join(current))
                current = []
    if current:
        tokens.append("".join(current))
    return tokens


@dataclass
class Text:
    raw: str
    tokens: list[str]
    wordlist: WordList


def make_text(net: Network, raw: str, sig: SignificanceTable) -> Text:
    tokens = tokenize(raw)
    if not tokens:
        raise EmptyWordListError(f"no tokens in text: {raw!r}")
    return Text(raw, tokens, make_wordlist(net, tokens, sig))


def expand_extra_word(net: Network, sig: SignificanceTable, word: str,
                      dictionary: dict[str, list[DictEntry]],
                      depth_limit: int = 1) -> WordList:
    """Word list for a word outside the network, from its definition.

    All units of all entries for the word are concatenated.  Definition
    tokens that are themselves extra words are expanded while depth
    allows and dropped (with a record) beyond it.
    """
    tokens, unresolved = _expand(net, word, dictionary, 1, depth_limit)
    if tokens is None:
        raise UnresolvableWordError(word)
    if not tokens:
        raise EmptyWordListError(
            f"definition of {word!r} has no resolvable tokens")
    wordlist = make_wordlist(net, tokens, sig)
    wordlist.dropped.extend(unresolved)
    return wordlist


def _expand(net: Network, word: str, dictionary: dict[str, list[DictEntry]],
            depth: int, depth_limit: int):
    entries = dictionary.get(word)
    if not entries:
        return None, []
    tokens: list[str] = []
    unresolved: list[str] = []
    for entry in entries:
        for unit in entry.units:
            for token in unit.tokens():
                if net.resolve_root(token) is not None:
                    tokens.append(token)
                elif depth < depth_limit:
                    sub_tokens, sub_unresolved = _expand(
                        net, token, dictionary, depth + 1, depth_limit)
                    if sub_tokens:
                        tokens.extend(sub_tokens)
                        unresolved.extend(sub_unresolved)
                    else:
                        unresolved.append(token)
                else:
                    unresolved.append(token)
    return tokens, unresolved


def word_as_wordlist(net: Network, sig: SignificanceTable, word: str,
                     dictionary: Optional[dict[str, list[DictEntry]]] = None,
                     depth_limit: int = 1) -> tuple[WordList, bool]:
    """A singleton list for an in-vocabulary word, else its expansion.

    Returns (wordlist, expanded).
    """
    if net.resolve_root(word) is not None:
        return make_wordlist(net, [word], sig), False
    if dictionary:
        return expand_extra_word(net, sig, word, dictionary, depth_limit), True
    raise UnresolvableWordError(word)


def similarity_text(net: Network, x: Text, x2: Text,
                    steps: int = DEFAULT_STEPS) -> float:
    return similarity_wordlist(net, x.wordlist, x2.wordlist, steps)


def coherence(net: Network, x: Text, steps: int = DEFAULT_STEPS) -> float:
    """Self-similarity of a text's word list."""
    pattern = run(net, wordlist_stimulus(net, x.wordlist), steps)
    acc = 0.0
    for item in x.wordlist.items:
        acc += compose_similarity(item.significance,
                                  observe(pattern, net, item.root))
    return psi(acc)


# ---------------------------------------------------------------------------
# episode retrieval

@dataclass
class Episode:
    id: str
    text: Text
    # reserved for caching; retrieval reads activity off the query pattern
    pattern: Optional[ActivationPattern] = None


@dataclass
class EpisodeStore:
    episodes: list[Episode]

    def __len__(self) -> int:
        return len(self.episodes)


def load_episodes(path, net: Network, sig: SignificanceTable) -> EpisodeStore:
    """Read a store file: one JSON object {"id", "text"} per line."""
    episodes = []
    seen = set()
    with open(path, encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            try:
                obj = json.loads(line)
                ep_id, raw = str(obj["id"]), str(obj["text"])
            except (json.JSONDecodeError, KeyError, TypeError) as exc:
                raise FileFormatError(
                    f"{path}:{line_no}: bad episode record: {exc}") from exc
            if ep_id in seen:
                raise FileFormatError(f"{path}:{line_no}: duplicate id {ep_id!r}")
            seen.add(ep_id)
            episodes.append(Episode(ep_id, make_text(net, raw, sig)))
    return EpisodeStore(episodes)


def retrieve(net: Network, x: Text, store: EpisodeStore, top_k: int,
             steps: int = DEFAULT_STEPS) -> list[tuple[str, float]]:
    """Episodes most similar to the query, best first, ties by id.

    The query pattern is produced once and scored against every episode.
    """
    if not store.episodes:
        raise EmptyWordListError("episode store is empty")
    pattern = run(net, wordlist_stimulus(net, x.wordlist), steps)
    scored = []
    for ep in store.episodes:
        acc = 0.0
        for item in ep.text.wordlist.items:
            acc += compose_similarity(item.significance,
                                      observe(pattern, net, item.root))
        scored.append((ep.id, psi(acc)))
    scored.sort(key=lambda pair: (-pair[1], pair[0]))
    return scored[:top_k]
