"""Pytest configuration and fixtures

Provides shared root data and Weyl groups for the families used across the
suite, and resets process-wide settings between tests.
"""

import sys
from pathlib import Path

# Add project root to sys.path for imports
sys.path.insert(0, str(Path(__file__).parent.parent))
# test/ itself, so helpers is importable from every test directory
sys.path.insert(0, str(Path(__file__).parent))

import pytest  # noqa: E402 - after sys.path setup

from app.root_systems import FamilySpec, build_family  # noqa: E402
from app.settings import reset_settings  # noqa: E402
from app.weyl import generate  # noqa: E402


@pytest.fixture(scope="function", autouse=True)
def clean_settings(monkeypatch, tmp_path):
    """
    Isolate every test from the caller's configuration

    Removes SUPERTYPICAL_* variables, runs from an empty working directory
    (so no ./supertypical.toml is picked up) and drops cached settings.
    """
    for name in (
        "SUPERTYPICAL_CONFIG",
        "SUPERTYPICAL_FAMILY",
        "SUPERTYPICAL_CAP",
        "SUPERTYPICAL_DEPTH",
        "SUPERTYPICAL_THREADS",
        "SUPERTYPICAL_LOG_LEVEL",
    ):
        monkeypatch.delenv(name, raising=False)
    monkeypatch.chdir(tmp_path)
    reset_settings()
    yield
    reset_settings()


@pytest.fixture(scope="session")
def b01():
    return build_family(FamilySpec.b0n(1))


@pytest.fixture(scope="session")
def b02():
    return build_family(FamilySpec.b0n(2))


@pytest.fixture(scope="session")
def b03():
    return build_family(FamilySpec.b0n(3))


@pytest.fixture(scope="session")
def b04():
    return build_family(FamilySpec.b0n(4))


@pytest.fixture(scope="session")
def gl11():
    return build_family(FamilySpec.glmn(1, 1))


@pytest.fixture(scope="session")
def gl21():
    return build_family(FamilySpec.glmn(2, 1))


@pytest.fixture(scope="session")
def b11():
    return build_family(FamilySpec.bmn(1, 1))


@pytest.fixture(scope="session")
def w01(b01):
    return generate(b01, cap=1000)


@pytest.fixture(scope="session")
def w02(b02):
    return generate(b02, cap=1000)


@pytest.fixture(scope="session")
def w03(b03):
    return generate(b03, cap=1000)


@pytest.fixture(scope="session")
def w04(b04):
    return generate(b04, cap=1000)


@pytest.fixture(scope="session")
def wgl11(gl11):
    return generate(gl11, cap=1000)


@pytest.fixture(scope="session")
def wb11(b11):
    return generate(b11, cap=1000)
