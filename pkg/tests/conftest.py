import pytest

from infostruct import fixture_path, load_kb, load_lexicon, parse_document


def read_fixture(name):
    with open(fixture_path(name), encoding="utf-8") as fh:
        return fh.read()


@pytest.fixture(scope="session")
def talk_kb():
    return load_kb(read_fixture("talk.kb"))


@pytest.fixture(scope="session")
def notebook_kb():
    return load_kb(read_fixture("notebook.kb"))


@pytest.fixture(scope="session")
def lexicon():
    return load_lexicon(read_fixture("turkish.lex"))


@pytest.fixture
def meeting():
    return parse_document(read_fixture("meeting.doc"))


@pytest.fixture
def scrambling():
    return parse_document(read_fixture("scrambling.doc"))


@pytest.fixture
def notebook():
    return parse_document(read_fixture("notebook.doc"))


ACCEPTANCE = []


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(label): acceptance criterion with a report label")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is not None and report.when == "call":
        ACCEPTANCE.append((marker.args[0], "PASS" if report.passed else "FAIL"))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for label, verdict in ACCEPTANCE:
        terminalreporter.write_line(f"{verdict}  {label}")
