import io

import pytest

from prime_lissajous.cli import reproduce_all

_criteria = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    number, title = marker.args
    ok = _criteria.get(number, (title, True))[1]
    if rep.failed or (rep.when == "call" and not rep.passed):
        ok = False
    _criteria[number] = (title, ok)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for number in sorted(_criteria):
        title, ok = _criteria[number]
        terminalreporter.write_line(f"C{number} {'PASS' if ok else 'FAIL'}  {title}")


@pytest.fixture(scope="session")
def reproduced(tmp_path_factory):
    """Two independent reproduce_all runs: [(outdir, manifest), ...]."""
    root = tmp_path_factory.mktemp("figs")
    runs = []
    for name in ("one", "two"):
        out = io.StringIO()
        assert reproduce_all(root / name, out=out) == 0
        runs.append((root / name, out.getvalue()))
    return runs
