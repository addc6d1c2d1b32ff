import pathlib

import pytest

FIXTURES = pathlib.Path(__file__).resolve().parent.parent / "fixtures"


@pytest.fixture
def fixtures_dir() -> pathlib.Path:
    return FIXTURES


def load(name: str):
    from kmc.cli import load_diagram

    return load_diagram(FIXTURES / name)
