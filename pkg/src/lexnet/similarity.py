"""Word and word-list similarity.

The similarity from w to w' is the activity of w' in the pattern produced
by driving w with its significance for 10 steps, scaled by the target's
significance: sigma(w, w') = s(w') * a(P(w), w').  It is directional.

A word list W activates each member with strength s(w)^2 / sum_k s(w_k);
the similarity of W toward W' accumulates s(w') * a(P(W), w') over the
members of W' and clips the sum into [0,1].
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .activation import (DEFAULT_STEPS, StimulusVector, observe, run,
                         stimulus_for_word)
from .errors import EmptyWordListError, UnresolvableWordError
from .network import Network
from .significance import SignificanceTable

__all__ = [
    "WordItem",
    "WordList",
    "word_significance",
    "make_wordlist",
    "wordlist_stimulus",
    "similarity_word",
    "similarity_wordlist",
    "compose_similarity",
    "psi",
]


def psi(x: float) -> float:
    """Output limiter for accumulated similarity sums."""
    return min(1.0, max(0.0, x))


def compose_similarity(target_significance: float, observed_activity: float) -> float:
    """sigma from its two factors."""
    return target_significance * observed_activity


@dataclass
class WordItem:
    root: str
    significance: float
    strength: float


@dataclass
class WordList:
    items: list[WordItem]
    surfaces: list[str]                       # original tokens, in order
    dropped: list[str] = field(default_factory=list)


def word_significance(net: Network, sig: SignificanceTable, word: str) -> float:
    """s(word): counted value, else the word-class average, else global."""
    return sig.value(word, net.word_class_of(word))


def make_wordlist(net: Network, words: list[str], sig: SignificanceTable
                  ) -> WordList:
    """Root-map surface words and assign activation strengths.

    Unresolvable words are dropped (recorded in `dropped`); duplicates
    each keep their own item.  Strength of item i is
    s_i * (s_i / sum_k s_k), so a singleton gets exactly s.
    """
    items = []
    dropped = []
    for word in words:
        root = net.resolve_root(word)
        if root is None:
            dropped.append(word)
            continue
        s = word_significance(net, sig, root)
        items.append(WordItem(root, s, 0.0))
    if not items:
        raise EmptyWordListError(
            f"no word resolved to a network node: {words!r}")
    total = sum(it.significance for it in items)
    for it in items:
        it.strength = it.significance * (it.significance / total) if total > 0 else 0.0
    return WordList(items, list(words), dropped)


def wordlist_stimulus(net: Network, wordlist: WordList) -> StimulusVector:
    """Summed member stimuli; overlaps add and clip to the [0,1] range."""
    values = np.zeros(len(net.nodes))
    for item in wordlist.items:
        values[net.root_index[item.root]] += item.strength
    np.clip(values, 0.0, 1.0, out=values)
    return StimulusVector(values)


def similarity_word(net: Network, sig: SignificanceTable, w: str, w2: str,
                    steps: int = DEFAULT_STEPS) -> float:
    """Directional similarity from w to w2, both resolvable to nodes."""
    if not net.resolve(w2):
        raise UnresolvableWordError(w2)
    root = net.resolve_root(w)
    if root is None:
        raise UnresolvableWordError(w)
    pattern = run(net, stimulus_for_word(net, root, word_significance(net, sig, root)),
                  steps)
    target_root = net.resolve_root(w2)
    return compose_similarity(word_significance(net, sig, target_root),
                              observe(pattern, net, target_root))


def similarity_wordlist(net: Network, source: WordList, target: WordList,
                        steps: int = DEFAULT_STEPS) -> float:
    """Similarity from one word list toward another."""
    pattern = run(net, wordlist_stimulus(net, source), steps)
    acc = 0.0
    for item in target.items:
        acc += compose_similarity(item.significance,
                                  observe(pattern, net, item.root))
    return psi(acc)
