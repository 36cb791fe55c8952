import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lexnet import (BuildError, compile_network, count_root_occurrences,
                    default_table, parse_dictionary, subreferant_weights)
from lexnet.network import network_to_json
from netgen import random_dictionary_text

TOL = 1e-9

# Root occurrence tallies counted by hand over fixtures/toy.dict (each
# token of every part once, inflections mapped to their roots).
HAND_COUNTS = {
    "a": 56, "of": 54, "or": 33, "thing": 25, "the": 24, "to": 13,
    "drink": 13, "part": 12, "colour": 8, "fruit": 8, "liquid": 7,
    "red": 7, "orange": 7, "tool": 6, "strong": 5, "wine": 5, "metal": 5,
    "nail": 5, "hard": 5, "blood": 4, "fire": 4, "eat": 4, "sweet": 4,
    "alcohol": 4, "water": 3, "tree": 3, "hit": 3, "hammer": 3, "food": 3,
    "apple": 3, "alcoholic": 1,
}


def node(net, node_id):
    return net.nodes[[n.id for n in net.nodes].index(node_id)]


# ---------------------------------------------------------------------------
# occurrence counting

def test_root_occurrences_match_hand_tally(entries, morph):
    counts = count_root_occurrences(entries, morph)
    assert dict(counts) == HAND_COUNTS


def test_dropped_tokens_absent(morph):
    entries = parse_dictionary("(x noun ((y qqq))) (y noun ((x)))")
    counts = count_root_occurrences(entries, morph)
    assert "qqq" not in counts
    assert counts == {"x": 1, "y": 1}


# ---------------------------------------------------------------------------
# subreferant weights

def test_weights_m4_match_printed_sample():
    assert subreferant_weights(4) == pytest.approx(
        [0.333333, 0.277778, 0.222222, 0.166667], abs=1e-6)


def test_weights_m1():
    assert subreferant_weights(1) == [1.0]


def test_weights_m2():
    # raw (2m-1-j) for j=1,2 is (2,1)
    assert subreferant_weights(2) == pytest.approx([2 / 3, 1 / 3], abs=1e-12)


def test_weights_m0_rejected():
    with pytest.raises(ValueError):
        subreferant_weights(0)


@settings(max_examples=100, deadline=None)
@given(st.integers(min_value=2, max_value=500))
def test_weight_properties(m):
    w = subreferant_weights(m)
    assert sum(w) == pytest.approx(1.0, abs=TOL)
    assert all(a > b for a, b in zip(w, w[1:]))
    # raw first:last ratio is exactly 2:1
    assert (2 * m - 2) == 2 * (m - 1)
    assert w[0] / w[-1] == pytest.approx(2.0, abs=1e-9)


# ---------------------------------------------------------------------------
# link construction

def test_singleton_unit_link():
    net = compile_network(parse_dictionary("(x noun ((y))) (y noun ((x)))"),
                          default_table())
    sub = node(net, "x_1").subreferants[0]
    assert len(sub.links) == 1
    assert sub.links[0].thickness == 1.0


def test_sweet_unit_matches_hand_computation(net):
    # (sweet adj ((of fruit or food) (of apples or of the fruits)))
    # head tokens doubled, dets single; all roots here are single-sense.
    c = HAND_COUNTS
    raw = [2 / c["of"], 2 / c["fruit"], 2 / c["or"], 2 / c["food"],
           1 / c["of"], 1 / c["apple"], 1 / c["or"], 1 / c["of"],
           1 / c["the"], 1 / c["fruit"]]
    total = sum(raw)
    sub = node(net, "sweet_1").subreferants[0]
    assert [l.thickness for l in sub.links] == pytest.approx(
        [r / total for r in raw], abs=TOL)
    targets = [net.nodes[l.target].id for l in sub.links]
    assert targets == ["of_1", "fruit_1", "or_1", "food_1", "of_1",
                       "apple_1", "or_1", "of_1", "the_1", "fruit_1"]


def test_multi_sense_split_is_uniform(net):
    # colour_1 head-part: (the red or the orange); red and orange both
    # have two senses, so each occurrence yields two equal links.
    sub = node(net, "colour_1").subreferants[0]
    by_target = [(net.nodes[l.target].id, l.thickness) for l in sub.links]
    red = [t for t in by_target if t[0].startswith("red_")]
    assert len(red) == 2
    assert red[0][1] == pytest.approx(red[1][1], abs=TOL)
    orange = [t for t in by_target if t[0].startswith("orange_")]
    assert len(orange) == 2
    assert orange[0][1] == pytest.approx(orange[1][1], abs=TOL)


def test_sense_freq_split():
    entries = parse_dictionary("(x noun ((r))) (r noun ((x))) (r verb ((x)))")
    net = compile_network(entries, default_table(), sense_freq={1: 3.0, 2: 1.0})
    sub = node(net, "x_1").subreferants[0]
    assert [l.thickness for l in sub.links] == pytest.approx([0.75, 0.25])


def test_unit_with_no_resolvable_tokens():
    with pytest.raises(BuildError, match="unit 1 of"):
        compile_network(parse_dictionary("(x noun ((qqq)))"), default_table())


# ---------------------------------------------------------------------------
# refere generation

def test_unreferenced_node_has_empty_refere():
    net = compile_network(parse_dictionary("(x noun ((y))) (y noun ((y)))"),
                          default_table())
    assert node(net, "x_1").refere == []
    assert len(node(net, "y_1").refere) == 2  # from x and from itself


def test_wine_refere_matches_hand_computation(net):
    # wine_1 is referenced by red_1 (unit 2), drink_1, drink_2 (unit 1),
    # alcohol_1 and alcoholic_1; each back-link weighs h * t of the
    # forward link.  The z terms re-derive each unit's normalizer from
    # the hand tallies (head tokens doubled, two-sense roots split).
    c = HAND_COUNTS
    z_red2 = (2 / c["of"] + 2 / c["a"] + 2 / c["strong"] + 2 * (1 / c["orange"])
              + 2 * (1 / c["colour"]) + 1 / c["of"] + 1 / c["wine"])
    z_drink_v = (2 / c["to"] + 2 * (1 / c["drink"])
                 + 1 / c["water"] + 1 / c["or"] + 1 / c["a"] + 1 / c["liquid"]
                 + 1 / c["wine"] + 1 / c["or"] + 1 / c["the"]
                 + 2 * (0.5 / c["drink"]))
    z_drink1 = (2 / c["a"] + 2 / c["liquid"]
                + 1 / c["of"] + 1 / c["water"] + 1 / c["or"] + 1 / c["wine"])
    z_alcohol = (2 / c["a"] + 2 / c["strong"] + 2 / c["liquid"]
                 + 1 / c["of"] + 1 / c["wine"] + 1 / c["or"]
                 + 2 * (0.5 / c["drink"])
                 + 1 / c["to"] + 2 * (0.5 / c["drink"]))
    z_alcoholic = (2 / c["of"] + 2 / c["alcohol"]
                   + 1 / c["of"] + 1 / c["a"] + 1 / c["strong"]
                   + 2 * (0.5 / c["drink"]) + 1 / c["or"] + 1 / c["of"]
                   + 1 / c["wine"])
    raw = [
        (1 / 3) * (1 / c["wine"]) / z_red2,      # red_1 unit 2 of 2
        1.0 * (1 / c["wine"]) / z_drink_v,
        (2 / 3) * (1 / c["wine"]) / z_drink1,    # drink_2 unit 1 of 2
        1.0 * (1 / c["wine"]) / z_alcohol,
        1.0 * (1 / c["wine"]) / z_alcoholic,
    ]
    total = sum(raw)
    refere = node(net, "wine_1").refere
    assert [net.nodes[l.target].id for l in refere] == \
        ["red_1", "drink_1", "drink_2", "alcohol_1", "alcoholic_1"]
    assert [l.thickness for l in refere] == pytest.approx(
        [r / total for r in raw], abs=TOL)


def test_refere_count_equals_link_count(net):
    forward = sum(len(s.links) for n in net.nodes for s in n.subreferants)
    back = sum(len(n.refere) for n in net.nodes)
    assert forward == back


# ---------------------------------------------------------------------------
# whole-network invariants

def assert_normalized(net):
    for n in net.nodes:
        assert sum(s.thickness for s in n.subreferants) == pytest.approx(1.0, abs=TOL)
        for s in n.subreferants:
            assert sum(l.thickness for l in s.links) == pytest.approx(1.0, abs=TOL)
        if n.refere:
            assert sum(l.thickness for l in n.refere) == pytest.approx(1.0, abs=TOL)
        for s in n.subreferants:
            for l in s.links:
                assert 0 <= l.target < len(net.nodes)
        for l in n.refere:
            assert 0 <= l.target < len(net.nodes)


def test_fixture_normalization(net):
    assert_normalized(net)


@settings(max_examples=20, deadline=None)
@given(st.integers(min_value=0, max_value=10_000))
def test_random_dictionary_invariants(seed):
    entries = parse_dictionary(random_dictionary_text(seed, max_entries=30))
    net = compile_network(entries, default_table())
    assert_normalized(net)
    forward = sum(len(s.links) for n in net.nodes for s in n.subreferants)
    assert forward == sum(len(n.refere) for n in net.nodes)


def test_homograph_node_ids(net):
    ids = [n.id for n in net.nodes]
    assert "red_1" in ids and "red_2" in ids
    assert "drink_1" in ids and "drink_2" in ids
    assert ids.index("red_1") < ids.index("red_2")  # source order


def test_indices_consistent(net):
    for (head, cls), i in net.headword_index.items():
        assert net.nodes[i].headword == head
        assert net.nodes[i].word_class == cls
    for head, senses in net.root_index.items():
        assert [net.nodes[i].headword for i in senses] == [head] * len(senses)


def test_compile_deterministic(entries, morph):
    a = json.dumps(network_to_json(compile_network(entries, morph)))
    b = json.dumps(network_to_json(compile_network(entries, morph)))
    assert a == b


def test_empty_dictionary_rejected(morph):
    with pytest.raises(BuildError):
        compile_network([], morph)
