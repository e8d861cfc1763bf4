import json
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

from story2pddl.annotations import load_document
from story2pddl.knowledge import FixtureProvider

settings.register_profile(
    "suite", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("suite")

DATA = Path(__file__).parent / "data"
DOCS = DATA / "docs"
FIXTURES = DATA / "fixtures"
GOLD = DATA / "gold"


def load_doc(name: str):
    return load_document((DOCS / f"{name}.json").read_bytes())


def doc_json(name: str) -> dict:
    return json.loads((DOCS / f"{name}.json").read_text("utf-8"))


@pytest.fixture(scope="session")
def fixture_provider() -> FixtureProvider:
    return FixtureProvider.from_dir(FIXTURES)


@pytest.fixture(scope="session")
def hit_doc():
    return load_doc("hit_example")
