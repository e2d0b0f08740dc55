import functools

import pytest
from hypothesis import HealthCheck, settings

from hopfgalois import catalog

settings.register_profile("default", deadline=None, max_examples=40,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@functools.lru_cache(maxsize=None)
def _entry(name, params=(), D=None):
    return catalog.load(name, dict(params), D)


def entry(name, D=None, **params):
    return _entry(name, tuple(sorted(params.items())), D)


@pytest.fixture(scope="session")
def taft2():
    return entry("taft", N=2)


@pytest.fixture(scope="session")
def taft3():
    return entry("taft", N=3)


@pytest.fixture(scope="session")
def monopole():
    return entry("podles-monopole")


@pytest.fixture(scope="session")
def sl2():
    return entry("sl2-nff")


@pytest.fixture(scope="session")
def klein():
    return entry("group")


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[k])
