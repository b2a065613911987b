from pathlib import Path

import pytest

from latlift import load_lattice, load_monoid

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


@pytest.fixture(scope="session")
def l6():
    return load_lattice(FIXTURES / "l6.json")


@pytest.fixture(scope="session")
def two():
    return load_lattice(FIXTURES / "two.json")


@pytest.fixture(scope="session")
def chain3():
    return load_lattice(FIXTURES / "chain3.json")


@pytest.fixture(scope="session")
def chain3_nil():
    return load_lattice(FIXTURES / "chain3_nil.json")


@pytest.fixture(scope="session")
def m3():
    return load_monoid(FIXTURES / "m3.json")


def fixture_path(name: str) -> str:
    return str(FIXTURES / name)
