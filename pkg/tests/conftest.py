import json
from pathlib import Path

import pytest

from codecloud import extract_corpus, load_lexicon, scan_tree

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture(scope="session")
def lexicon():
    return load_lexicon()


@pytest.fixture(scope="session")
def drawing_shapes_dir():
    return FIXTURES / "drawing_shapes"


@pytest.fixture(scope="session")
def drawing_shapes_ids(drawing_shapes_dir):
    return extract_corpus(scan_tree(drawing_shapes_dir), parallel=False)


@pytest.fixture(scope="session")
def drawing_shapes_expected():
    return json.loads((FIXTURES / "drawing_shapes_expected.json").read_text())


@pytest.fixture(scope="session")
def menagerie_dir():
    return FIXTURES / "menagerie"


@pytest.fixture(scope="session")
def menagerie_ids(menagerie_dir):
    return extract_corpus(scan_tree(menagerie_dir), parallel=False)


@pytest.fixture(scope="session")
def broken_dir():
    return FIXTURES / "broken"
