import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

_CRITERIA: list[str] = []


@pytest.fixture
def criterion(request):
    """Record one PASS/FAIL line per acceptance criterion."""
    lines = {}

    def record(label, detail):
        lines["label"], lines["detail"] = label, detail

    yield record
    if "label" in lines:
        call = getattr(request.node, "rep_call", None)
        status = "PASS" if call is not None and call.passed else "FAIL"
        _CRITERIA.append(f"{status} {lines['label']}: {lines['detail']}")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    if _CRITERIA:
        terminalreporter.section("acceptance criteria")
        for line in _CRITERIA:
            terminalreporter.write_line(line)
