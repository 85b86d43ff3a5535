import pytest
from fastapi.testclient import TestClient

from main import app
from tests.helpers import FIXTURES


@pytest.fixture(scope="session")
def fixtures_dir():
    return FIXTURES


@pytest.fixture(scope="session")
def picture1_tex() -> str:
    return (FIXTURES / "picture1.tex").read_text(encoding="utf-8")


@pytest.fixture(scope="session")
def picture1_scene() -> str:
    return (FIXTURES / "picture1.scene").read_text(encoding="utf-8")


@pytest.fixture(scope="session")
def picture1_svg() -> str:
    return (FIXTURES / "picture1.svg").read_text(encoding="utf-8")


@pytest.fixture(scope="module")
def client():
    client = TestClient(app)
    client.base_url = "http://127.0.0.1:8000"
    yield client
