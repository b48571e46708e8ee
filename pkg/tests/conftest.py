import pytest

from umlauf.formats import load_domain


@pytest.fixture(scope="session")
def dom():
    cache = {}

    def get(name):
        if name not in cache:
            cache[name] = load_domain(name)
        return cache[name]

    return get


_ACCEPTANCE_KEY = pytest.StashKey[list]()


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")
    config.stash[_ACCEPTANCE_KEY] = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    if rep.when == "call" or (rep.when == "setup" and rep.failed):
        number, title = mark.args
        item.config.stash[_ACCEPTANCE_KEY].append((number, title, rep.passed))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    rows = config.stash.get(_ACCEPTANCE_KEY, [])
    if not rows:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, ok in sorted(rows):
        terminalreporter.write_line(f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {title}")
