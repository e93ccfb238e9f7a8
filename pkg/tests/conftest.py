import pytest

from fixtures import FIXTURES, el
from ussbraid.uss_graph import build_graph

ACCEPTANCE = pytest.StashKey[dict]()


@pytest.fixture(scope="session")
def graphs():
    return {name: build_graph(el(n, w)) for name, (n, w) in FIXTURES.items()}


@pytest.fixture
def record(request):
    """Record the outcome of one acceptance criterion for the summary."""
    results = request.config.stash.setdefault(ACCEPTANCE, {})

    def _record(number, title, passed, seconds):
        results[number] = (title, passed, seconds)

    return _record


def pytest_terminal_summary(terminalreporter, config):
    results = config.stash.get(ACCEPTANCE, {})
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(results):
        title, passed, seconds = results[number]
        status = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"criterion {number:2d}: {status}  {title}  ({seconds:.2f} s)")
