import io

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lexnet import (ParseError, WordClass, closure_warnings, parse_dictionary,
                    serialize_entries)
from netgen import random_dictionary_text

# The layout of a real dictionary entry rendered as S-expressions: four
# numbered definitions, one of them with a bare single-token head part.
RED_ENTRY = """
(red adj                   ; headword, word-class
  ((of the colour)         ; unit 1 -- head-part
   (of blood or fire) )    ;           det-part
  ((of a bright brownish  orange or copper colour)
   (of human hair) )
  (pink                    ; unit 3 -- head-part
   (usu for a short time)  ;           det-part 1
   (of the human skin) )   ;           det-part 2
  ((of a dark pink to dark purple colour)
   (of wine) ))
"""


def test_fixture_parses(entries):
    assert len(entries) == 35
    assert entries[0].headword == "a"
    assert entries[-1].headword == "alcoholic"
    # order preserved, everything lowercase
    assert all(e.headword == e.headword.lower() for e in entries)


def test_sample_red_entry():
    (entry,) = parse_dictionary(RED_ENTRY)
    assert entry.headword == "red"
    assert entry.word_class is WordClass.ADJ
    assert len(entry.units) == 4
    assert entry.units[0].head_part == ["of", "the", "colour"]
    assert entry.units[0].det_parts == [["of", "blood", "or", "fire"]]
    # bare token head-part
    assert entry.units[2].head_part == ["pink"]
    assert len(entry.units[2].det_parts) == 2


def test_minimal_entry():
    (entry,) = parse_dictionary("(x noun ((y)))")
    assert entry.headword == "x"
    assert len(entry.units) == 1
    assert entry.units[0].head_part == ["y"]
    assert entry.units[0].det_parts == []


def test_parse_accepts_stream():
    entries = parse_dictionary(io.StringIO("(x noun ((y)))"))
    assert entries[0].headword == "x"


def test_tokens_lowercased():
    (entry,) = parse_dictionary("(X NOUN ((Y Z)))")
    assert entry.headword == "x"
    assert entry.units[0].head_part == ["y", "z"]


def test_duplicate_headword_class_rejected():
    with pytest.raises(ParseError, match="duplicate"):
        parse_dictionary("(x noun ((y))) (x noun ((z)))")


def test_homographs_allowed():
    entries = parse_dictionary("(x noun ((y))) (x verb ((z)))")
    assert [e.word_class for e in entries] == [WordClass.NOUN, WordClass.VERB]


def test_unknown_word_class():
    with pytest.raises(ParseError, match="unknown word class"):
        parse_dictionary("(x gerund ((y)))")


def test_empty_head_part():
    with pytest.raises(ParseError, match="head-part|tokens"):
        parse_dictionary("(x noun (()))")


def test_syntax_error_has_position():
    with pytest.raises(ParseError) as err:
        parse_dictionary("(x noun ((y))\n(z noun ((w)))")
    assert err.value.line >= 1 and err.value.column >= 1


def test_unbalanced_close():
    with pytest.raises(ParseError, match="unexpected"):
        parse_dictionary(")")


def test_comments_ignored():
    entries = parse_dictionary("; a comment\n(x noun ((y)) ; trailing\n)")
    assert len(entries) == 1


def test_roundtrip_fixture(entries):
    text = serialize_entries(entries)
    again = parse_dictionary(text)
    assert again == entries
    assert serialize_entries(again) == text


@settings(max_examples=30, deadline=None)
@given(st.integers(min_value=0, max_value=10_000))
def test_roundtrip_random_dictionaries(seed):
    entries = parse_dictionary(random_dictionary_text(seed, max_entries=20))
    text = serialize_entries(entries)
    assert parse_dictionary(text) == entries


def test_fixture_is_closed(entries, morph):
    assert closure_warnings(entries, morph) == []


def test_closure_violation_reported(morph):
    entries = parse_dictionary("(x noun ((y qqq))) (y noun ((x)))")
    warns = closure_warnings(entries, morph)
    assert len(warns) == 1
    assert warns[0].token == "qqq"
    assert warns[0].headword == "x"
    assert warns[0].unit_index == 1


def test_closure_respects_morphology(morph):
    # "xs" resolves to the headword "x" through the plural rule
    entries = parse_dictionary("(x noun ((y xs))) (y noun ((x)))")
    assert closure_warnings(entries, morph) == []
