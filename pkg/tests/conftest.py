"""Acceptance reporting: tests marked ``criterion(n, title)`` get one
PASS/FAIL line each in the terminal summary, with any detail they attach."""

import pytest

_results: dict[int, dict] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.fixture
def report(request):
    """Attach a detail string to the criterion line of the running test."""
    marker = request.node.get_closest_marker("criterion")
    number = marker.args[0]

    def _report(text: str) -> None:
        _results.setdefault(number, {"title": marker.args[1]})["detail"] = text
    return _report


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or rep.when not in ("setup", "call"):
        return
    entry = _results.setdefault(marker.args[0], {"title": marker.args[1]})
    if rep.when == "setup" and not rep.passed:
        entry["ok"] = False
    elif rep.when == "call":
        entry["ok"] = rep.passed and entry.get("ok", True)


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for number in sorted(_results):
        entry = _results[number]
        if "ok" not in entry:
            continue
        status = "PASS" if entry["ok"] else "FAIL"
        line = f"criterion {number:>2}: {status}  {entry['title']}"
        if entry.get("detail"):
            line += f"  [{entry['detail']}]"
        tr.write_line(line)
