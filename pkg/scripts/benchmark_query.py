#!/usr/bin/env python3
"""Query latency across network sizes.

Builds synthetic networks (uniform token sampling, two units per entry)
and times 10-step word queries end to end.
"""

import random
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from lexnet import compile_network, default_table, similarity_word
from lexnet.dictionary import DictEntry, Unit, WordClass
from lexnet.significance import SignificanceTable


def synthetic(n_nodes, tokens_per_entry, seed=0):
    rng = random.Random(seed)
    syllables = [f"{a}{b}" for a in "bdfgklmnprstvz" for b in "aeiou"]
    heads, seen = [], set()
    while len(heads) < n_nodes:
        head = "".join(rng.choice(syllables) for _ in range(3))
        if head not in seen:
            seen.add(head)
            heads.append(head)
    entries = []
    for head in heads:
        half = tokens_per_entry // 2
        entries.append(DictEntry(head, WordClass.NOUN, [
            Unit([rng.choice(heads) for _ in range(half)]),
            Unit([rng.choice(heads) for _ in range(half)]),
        ]))
    return entries, heads


def main():
    for n_nodes, tokens in [(100, 20), (500, 50), (1000, 100), (3000, 100)]:
        t0 = time.perf_counter()
        entries, heads = synthetic(n_nodes, tokens)
        net = compile_network(entries, default_table())
        build_s = time.perf_counter() - t0
        links = sum(len(s.links) for nd in net.nodes for s in nd.subreferants)
        sig = SignificanceTable(10_000_000, {h: 1000 for h in heads})

        similarity_word(net, sig, heads[0], heads[1])  # warm-up
        times = []
        for i in range(5):
            t0 = time.perf_counter()
            similarity_word(net, sig, heads[i], heads[i + 1])
            times.append(time.perf_counter() - t0)
        print(f"nodes={n_nodes:5d} links={links:7d} "
              f"build={build_s * 1000:7.1f} ms "
              f"query={min(times) * 1000:6.1f} ms")


if __name__ == "__main__":
    main()
