import os

import pytest

from kla2 import hecke


@pytest.fixture(scope="session")
def table14():
    return hecke.get_table(14)


@pytest.fixture
def no_cache(monkeypatch):
    monkeypatch.delenv("KLA2_CACHE", raising=False)
    monkeypatch.delenv("KLA2_CONFIG", raising=False)
    return os.environ


ACCEPTANCE = {}


def record(criterion, ok, detail):
    ACCEPTANCE[criterion] = (ok, detail)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {detail}")
