import pytest
from hypothesis import settings

from macmahon.partitions import PlanePartition

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

# strict plane partition with a fully worked bijection example
WORKED_PP = [[5, 3, 2, 1, 1], [4, 3, 2, 1], [3, 3, 2], [2, 2, 1]]

# marked matrix with a fully worked insertion example
WORKED_MATRIX = [["1'", 0, 2], [2, 1, "2'"], ["1'", "1'", 0]]

ACCEPTANCE_RESULTS: dict[str, tuple[bool, str]] = {}


@pytest.fixture
def worked_pp():
    return PlanePartition.from_rows(WORKED_PP)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(ACCEPTANCE_RESULTS):
        ok, detail = ACCEPTANCE_RESULTS[name]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}: {detail}")
