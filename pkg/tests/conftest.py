import pytest

from homcx.graph import complete, counterexample_g9
from homcx.homs import enumerate_homs
from homcx.flip import build_flip_graph


@pytest.fixture(scope="session")
def g9():
    return counterexample_g9()


@pytest.fixture(scope="session")
def g9_homs(g9):
    return enumerate_homs(g9, complete(5))


@pytest.fixture(scope="session")
def g9_flip(g9_homs):
    return build_flip_graph(g9_homs)


ACCEPTANCE = {}


@pytest.fixture
def criterion(request):
    """Record pass/fail for one acceptance criterion, keyed by its number."""
    number, title = request.node.get_closest_marker("criterion").args
    ACCEPTANCE[number] = (title, "FAIL")
    yield
    rep = getattr(request.node, "rep_call", None)
    if rep is not None and rep.passed:
        ACCEPTANCE[number] = (title, "PASS")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        title, status = ACCEPTANCE[number]
        terminalreporter.write_line(f"[{status}] criterion {number}: {title}")
