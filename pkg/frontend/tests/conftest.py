from pathlib import Path

import pytest
from fastapi.testclient import TestClient

from story_frontend.config import FrontendConfig
from story_frontend.server import create_app

DATA = Path(__file__).parent / "data"
CORPUS = DATA / "corpus.txt"


@pytest.fixture(scope="session")
def client():
    with TestClient(create_app(FrontendConfig())) as test_client:
        yield test_client


@pytest.fixture(scope="session")
def corpus_text() -> str:
    return CORPUS.read_text(encoding="utf-8")
