import pytest

_ACCEPTANCE = []


@pytest.fixture
def criterion(request):
    """Record a named acceptance criterion; the outcome is printed at the end."""
    entry = {"name": None, "detail": ""}
    _ACCEPTANCE.append(entry)

    def record(name, detail=""):
        entry["name"], entry["detail"] = name, detail

    yield record
    entry["node"] = request.node


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.stash[_outcome_key] = rep.passed


_outcome_key = pytest.StashKey[bool]()


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for entry in _ACCEPTANCE:
        node = entry.get("node")
        if node is None or entry["name"] is None:
            continue
        ok = node.stash.get(_outcome_key, False)
        line = f"{'PASS' if ok else 'FAIL'}  {entry['name']}"
        if entry["detail"]:
            line += f"  ({entry['detail']})"
        terminalreporter.write_line(line)
