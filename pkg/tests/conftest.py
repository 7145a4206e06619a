import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

_CRITERIA: dict[str, str] = {}


@pytest.fixture
def criterion(request):
    """Record one acceptance criterion; the verdict is the test's outcome."""
    record = {}

    def _register(label: str) -> None:
        record["label"] = label

    yield _register
    label = record.get("label", request.node.name)
    rep = getattr(request.node, "rep_call", None)
    _CRITERIA[label] = "PASS" if rep is not None and rep.passed else "FAIL"


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    setattr(item, f"rep_{rep.when}", rep)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(_CRITERIA, key=lambda s: int(s.split()[0])):
        terminalreporter.write_line(f"{_CRITERIA[label]}  {label}")
