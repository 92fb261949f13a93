import pytest

from outbreak_dss.builder import build_roosevelt_model
from outbreak_dss.modelfile import load_bundled


@pytest.fixture(scope="session")
def roosevelt():
    """Full-precision network straight from the builder."""
    return build_roosevelt_model()


@pytest.fixture(scope="session")
def bundled():
    """Model loaded from the shipped canonical file (6-decimal tables)."""
    return load_bundled()


@pytest.fixture()
def client(tmp_path):
    from fastapi.testclient import TestClient

    from outbreak_dss.service import create_app

    app = create_app(session_path=tmp_path / "sessions.jsonl")
    with TestClient(app) as test_client:
        yield test_client
