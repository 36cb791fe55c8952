import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent))

from lexnet import (build_significance, compile_network, default_table,
                    index_entries, parse_dictionary)

FIXTURES = Path(__file__).resolve().parents[1] / "fixtures"


@pytest.fixture(scope="session")
def morph():
    return default_table()


@pytest.fixture(scope="session")
def entries():
    return parse_dictionary((FIXTURES / "toy.dict").read_text())


@pytest.fixture(scope="session")
def net(entries, morph):
    return compile_network(entries, morph)


@pytest.fixture(scope="session")
def sig(entries):
    classes = {e.headword: e.word_class.value for e in entries}
    return build_significance((FIXTURES / "toy.counts").read_text(), classes)


@pytest.fixture(scope="session")
def extra_index():
    return index_entries(parse_dictionary((FIXTURES / "extra.dict").read_text()))


@pytest.fixture(scope="session")
def episodes_path():
    return FIXTURES / "episodes.jsonl"
