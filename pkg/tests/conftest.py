import pytest

from pabr.kbfile import build_kb, parse_kb_text

import helpers

_acceptance_outcomes: dict[str, str] = {}


@pytest.fixture(scope="session")
def burglar():
    """(KnowledgeBase, AssumptionTable) for the burglar alarm example."""
    return build_kb(parse_kb_text(helpers.BURGLAR_TEXT))


def pytest_runtest_logreport(report):
    if report.when != "call" or "test_acceptance" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    _acceptance_outcomes[name] = report.outcome


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _acceptance_outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_acceptance_outcomes):
        outcome = _acceptance_outcomes[name]
        label = "PASS" if outcome == "passed" else outcome.upper()
        terminalreporter.write_line(f"{name}: {label}")
