import pytest

from palatini.field import GF
from palatini.quartic import quartic_from_system, random_system


class GenericCache:
    """Random generic systems and their quartics, computed once per session."""

    def __init__(self):
        self._systems = {}
        self._quartics = {}

    def system(self, seed, p=32003):
        key = (seed, p)
        if key not in self._systems:
            self._systems[key] = random_system(seed, GF(p))
        return self._systems[key]

    def quartic(self, seed, p=32003):
        key = (seed, p)
        if key not in self._quartics:
            self._quartics[key] = quartic_from_system(self.system(seed, p))
        return self._quartics[key]


@pytest.fixture(scope="session")
def generic():
    return GenericCache()


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion covered by a test")


_criteria = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    number, title = marker.args
    entry = _criteria.setdefault(number, {"title": title, "ok": True, "ran": False})
    if report.when == "call":
        entry["ran"] = True
    if report.failed:
        entry["ok"] = False


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        e = _criteria[number]
        status = "PASS" if e["ok"] and e["ran"] else "FAIL"
        terminalreporter.write_line(f"{status}  criterion {number}: {e['title']}")
