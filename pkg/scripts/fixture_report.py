#!/usr/bin/env python3
"""Report every fixture-dependent quantity the test suite relies on.

Run after editing fixtures/toy.dict to check the designed orderings
still hold with margin.
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from lexnet import *
from lexnet.activation import observe, run
from lexnet.similarity import compose_similarity, word_significance, wordlist_stimulus
from lexnet.textops import make_text

ROOT = Path(__file__).resolve().parents[1]

COHERENT = "I drink wine. It has alcohol. It is a strong drink."
RANDOM = "I drink a tree. It has a nail. It is a sweet fire."
CONTRASTS = [
    ("red", "orange", "red", "nail"),
    ("hammer", "nail", "hammer", "apple"),
    ("wine", "alcohol", "wine", "hammer"),
    ("apple", "fruit", "apple", "metal"),
    ("eat", "food", "eat", "metal"),
]


def main():
    entries = parse_dictionary((ROOT / "fixtures/toy.dict").read_text())
    morph = default_table()
    warns = closure_warnings(entries, morph)
    net = compile_network(entries, morph)
    sig = build_significance((ROOT / "fixtures/toy.counts").read_text(),
                             {e.headword: e.word_class.value for e in entries})
    counts = count_root_occurrences(entries, morph)

    print(f"entries={len(entries)} closure_warnings={len(warns)}")
    for w in warns:
        print("  WARN", w)
    n_links = sum(len(s.links) for n in net.nodes for s in n.subreferants)
    print(f"links={n_links}")
    print("counts:", dict(sorted(counts.items(), key=lambda kv: -kv[1])))

    print("\n-- contrasts (related vs unrelated) --")
    ok = True
    for w, rel, w2, unrel in CONTRASTS:
        a = similarity_word(net, sig, w, rel)
        b = similarity_word(net, sig, w2, unrel)
        flag = "OK " if a > b else "FAIL"
        ok &= a > b
        print(f"  {flag} sigma({w},{rel})={a:.6f} > sigma({w2},{unrel})={b:.6f}")

    print("\n-- asymmetry --")
    for w, w2 in [("blood", "red"), ("alcoholic", "alcohol")]:
        a, b = similarity_word(net, sig, w, w2), similarity_word(net, sig, w2, w)
        print(f"  sigma({w},{w2})={a:.6f} sigma({w2},{w})={b:.6f} diff={abs(a-b):.6f}")

    print("\n-- self similarity (saturation check) --")
    for w in ["red", "wine", "hammer", "of"]:
        s = word_significance(net, sig, w)
        a = similarity_word(net, sig, w, w)
        print(f"  sigma({w},{w})={a:.6f} s={s:.6f} a(self)={a/s:.4f}")

    print("\n-- coherence --")
    for label, raw in [("coherent", COHERENT), ("random", RANDOM)]:
        x = make_text(net, raw, sig)
        p = run(net, wordlist_stimulus(net, x.wordlist))
        acc = sum(compose_similarity(i.significance, observe(p, net, i.root))
                  for i in x.wordlist.items)
        print(f"  {label}: c={coherence(net, x):.6f} raw_sum={acc:.4f} "
              f"n_items={len(x.wordlist.items)}")

    print("\n-- retrieval (query: 'I have a hammer.') --")
    store = load_episodes(ROOT / "fixtures/episodes.jsonl", net, sig)
    query = make_text(net, "I have a hammer.", sig)
    for ep_id, sigma in retrieve(net, query, store, 10):
        print(f"  {ep_id}\t{sigma:.6f}")

    print("\n-- function word robustness --")
    base = similarity_text(net, make_text(net, "a hammer", sig),
                           make_text(net, "a nail", sig))
    lo = similarity_text(net, make_text(net, "a hammer the", sig),
                         make_text(net, "a nail the", sig))
    hi = similarity_text(net, make_text(net, "a hammer alcoholic", sig),
                         make_text(net, "a nail alcoholic", sig))
    print(f"  base={base:.6f} +the={lo:.6f} (d={abs(lo-base):.6f}) "
          f"+alcoholic={hi:.6f} (d={abs(hi-base):.6f}) "
          f"{'OK' if abs(lo-base) < abs(hi-base) else 'FAIL'}")

    print("\n-- equilibrium tendency (stimulus: red) --")
    stim = stimulus_for_word(net, "red", word_significance(net, sig, "red"))
    pat = zero_pattern(net)
    prev = pat.values.copy()
    deltas = []
    for _ in range(10):
        pat = step(net, pat, stim)
        deltas.append(float(abs(pat.values - prev).max()))
        prev = pat.values.copy()
    print("  deltas:", " ".join(f"{d:.4f}" for d in deltas))
    print(f"  delta(10)={deltas[9]:.6f} < delta(2)={deltas[1]:.6f}: "
          f"{deltas[9] < deltas[1]}")


if __name__ == "__main__":
    main()
