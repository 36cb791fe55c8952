"""Spreading activation over the compiled network.

Each node i updates synchronously from the time-T snapshot:

    v_i(T+1) = clamp((R_i + R'_i) / 2 + e_i, 0, 1)

where R_i is the link-weighted activity sum of the node's most plausible
subreferant (the one maximizing h * S, ties to the earliest unit), R'_i
is the weighted activity sum over its back-links, and e_i is external
stimulus.  Queries drive a stimulus for a fixed number of steps (10 by
default) from an all-zero start; the pattern approaches equilibrium
without ever reaching it.
"""

from __future__ import annotations

import weakref
from dataclasses import dataclass

import numpy as np

from .errors import UnresolvableWordError
from .network import Network

__all__ = [
    "ActivationPattern",
    "StimulusVector",
    "zero_pattern",
    "zero_stimulus",
    "stimulus_for_word",
    "step",
    "run",
    "observe",
    "top_activities",
]

DEFAULT_STEPS = 10


@dataclass
class ActivationPattern:
    values: np.ndarray  # float64, one activity in [0,1] per node
    step: int = 0


@dataclass
class StimulusVector:
    values: np.ndarray  # float64, external input in [0,1] per node


class _EngineArrays:
    """Flat array view of the network for the vectorized update."""

    def __init__(self, net: Network):
        n = len(net.nodes)
        sub_starts = []      # first subreferant row of each node
        h = []
        link_row = []        # owning subreferant row per link
        link_target = []
        link_t = []
        ref_owner = []
        ref_target = []
        ref_t = []
        row = 0
        for i, node in enumerate(net.nodes):
            sub_starts.append(row)
            for sub in node.subreferants:
                h.append(sub.thickness)
                for l in sub.links:
                    link_row.append(row)
                    link_target.append(l.target)
                    link_t.append(l.thickness)
                row += 1
            for l in node.refere:
                ref_owner.append(i)
                ref_target.append(l.target)
                ref_t.append(l.thickness)
        self.n = n
        self.n_rows = row
        self.sub_starts = np.asarray(sub_starts, dtype=np.intp)
        self.h = np.asarray(h)
        self.link_row = np.asarray(link_row, dtype=np.intp)
        self.link_target = np.asarray(link_target, dtype=np.intp)
        self.link_t = np.asarray(link_t)
        self.ref_owner = np.asarray(ref_owner, dtype=np.intp)
        self.ref_target = np.asarray(ref_target, dtype=np.intp)
        self.ref_t = np.asarray(ref_t)
        # node index per subreferant row, for the grouped argmax
        self.row_node = np.repeat(np.arange(n, dtype=np.intp),
                                  [len(nd.subreferants) for nd in net.nodes])


_engine_cache: "weakref.WeakKeyDictionary[Network, _EngineArrays]" = \
    weakref.WeakKeyDictionary()


def _arrays(net: Network) -> _EngineArrays:
    arr = _engine_cache.get(net)
    if arr is None:
        arr = _EngineArrays(net)
        _engine_cache[net] = arr
    return arr


def zero_pattern(net: Network) -> ActivationPattern:
    return ActivationPattern(np.zeros(len(net.nodes)), step=0)


def zero_stimulus(net: Network) -> StimulusVector:
    return StimulusVector(np.zeros(len(net.nodes)))


def stimulus_for_word(net: Network, word: str, strength: float) -> StimulusVector:
    """Drive every sense node of the word's root with `strength`."""
    if not 0.0 <= strength <= 1.0:
        raise ValueError(f"stimulus strength must be in [0,1], got {strength}")
    senses = net.resolve(word)
    if not senses:
        raise UnresolvableWordError(word)
    values = np.zeros(len(net.nodes))
    values[senses] = strength
    return StimulusVector(values)


def step(net: Network, pattern: ActivationPattern,
         stimulus: StimulusVector) -> ActivationPattern:
    """One synchronous update; reads only the time-T pattern."""
    arr = _arrays(net)
    v = pattern.values
    e = stimulus.values
    if v.shape != (arr.n,) or e.shape != (arr.n,):
        raise ValueError(
            f"size mismatch: network has {arr.n} nodes, "
            f"pattern {v.shape}, stimulus {e.shape}")

    # S per subreferant row, then the weighted argmax per node.  Both
    # reduceat calls rely on every node owning at least one row.
    s_rows = np.bincount(arr.link_row, weights=arr.link_t * v[arr.link_target],
                         minlength=arr.n_rows)
    weighted = arr.h * s_rows
    group_max = np.maximum.reduceat(weighted, arr.sub_starts)
    is_max = weighted == group_max[arr.row_node]
    candidates = np.where(is_max, np.arange(arr.n_rows), arr.n_rows)
    chosen = np.minimum.reduceat(candidates, arr.sub_starts)
    r = s_rows[chosen]

    r_back = np.bincount(arr.ref_owner, weights=arr.ref_t * v[arr.ref_target],
                         minlength=arr.n)
    new_values = np.clip((r + r_back) / 2.0 + e, 0.0, 1.0)
    return ActivationPattern(new_values, pattern.step + 1)


def run(net: Network, stimulus: StimulusVector,
        steps: int = DEFAULT_STEPS) -> ActivationPattern:
    """Hold the stimulus constant for `steps` updates from an all-zero start."""
    if steps < 1:
        raise ValueError(f"steps must be >= 1, got {steps}")
    pattern = zero_pattern(net)
    for _ in range(steps):
        pattern = step(net, pattern, stimulus)
    return pattern


def observe(pattern: ActivationPattern, net: Network, word: str) -> float:
    """Maximum activity over the word's sense nodes."""
    senses = net.resolve(word)
    if not senses:
        raise UnresolvableWordError(word)
    return float(pattern.values[senses].max())


def top_activities(net: Network, pattern: ActivationPattern,
                   k: int) -> list[tuple[str, float]]:
    """The k most active (node id, activity) pairs, descending."""
    v = pattern.values
    order = np.lexsort((np.arange(len(v)), -v))
    return [(net.nodes[i].id, float(v[i])) for i in order[:k]]
