import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from linkrank import paper_fixture  # noqa: E402

_ACCEPTANCE: dict[str, str] = {}


@pytest.fixture
def fixture_graph():
    return paper_fixture()


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    label = item.get_closest_marker("criterion")
    if label and report.when == "call":
        _ACCEPTANCE[label.args[0]] = "PASS" if report.passed else "FAIL"
    elif label and report.failed:
        _ACCEPTANCE[label.args[0]] = "FAIL"


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(label): acceptance criterion")


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(_ACCEPTANCE, key=lambda s: int(s.split(".")[0])):
        terminalreporter.write_line(f"[{_ACCEPTANCE[label]}] {label}")
