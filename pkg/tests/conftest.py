import pytest

from rentlab.sentiment import Lexicon, default_lexicon

# criterion name -> (passed, detail); filled by the makereport hook for every
# test carrying a @pytest.mark.criterion("...") marker.
ACCEPTANCE_RESULTS: dict[str, tuple[bool, str]] = {}
ACCEPTANCE_DETAILS: dict[str, str] = {}


def record_acceptance(criterion: str, detail: str) -> None:
    ACCEPTANCE_DETAILS[criterion] = detail


@pytest.fixture(scope="session")
def lexicon() -> Lexicon:
    return default_lexicon()


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when != "call":
        return
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    name = marker.args[0]
    ACCEPTANCE_RESULTS[name] = (rep.passed, ACCEPTANCE_DETAILS.get(name, ""))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(ACCEPTANCE_RESULTS):
        passed, detail = ACCEPTANCE_RESULTS[name]
        line = f"{'PASS' if passed else 'FAIL'}  {name}"
        if detail:
            line += f"  [{detail}]"
        terminalreporter.write_line(line)
