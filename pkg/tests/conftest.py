import pytest

from cvm import RootSpec
from reference import DATA, WORKED_ROOTS


@pytest.fixture
def worked():
    return RootSpec.from_pairs(WORKED_ROOTS)


@pytest.fixture
def worked_json():
    return DATA / "worked_example.json"


def pytest_terminal_summary(terminalreporter):
    import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for number in sorted(test_acceptance.RESULTS):
            terminalreporter.write_line(test_acceptance.RESULTS[number])
