import json

import pytest

from gce.snapshot import parse_snapshot
from gce.synth import build_corpus, build_page, PageSpec


@pytest.fixture(scope="session")
def corpus_pages():
    return build_corpus()


@pytest.fixture(scope="session")
def basic_page():
    return build_page(PageSpec("unit_basic", lang="en", doc_h=3000, seed=1))


@pytest.fixture
def basic_snapshot(basic_page):
    return parse_snapshot(json.dumps(basic_page.snapshot))
