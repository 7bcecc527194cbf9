from pathlib import Path

import pytest

from gradedprime.corpus import get_entry

GOLDEN = Path(__file__).parent / "golden"


@pytest.fixture
def golden_dir() -> Path:
    return GOLDEN


@pytest.fixture
def entry():
    """Look up a corpus structure by name"""
    def _get(name):
        return get_entry(name).structure
    return _get


@pytest.fixture
def z6(entry):
    return entry("z6-or")


@pytest.fixture
def z8(entry):
    return entry("z8-or")


@pytest.fixture
def mz2(entry):
    return entry("mz2")


@pytest.fixture
def gauss4(entry):
    return entry("gauss4")


@pytest.fixture
def z2xz2(entry):
    return entry("z2xz2")

