import pathlib
import sys

import pytest

from monoquiver.fileformat import load_algebra

DATA = pathlib.Path(__file__).parent / "data"

FIXTURES = (
    "bridged_triangles_long",
    "bridged_triangles_short",
    "crossed_two_cycle",
    "four_cycle_entry",
    "tailed_triangle",
    "three_cycle",
    "triangle_exit",
    "two_cycle_tail",
)


def load(name):
    return load_algebra(DATA / f"{name}.quiver")


@pytest.fixture(params=sorted(FIXTURES))
def fixture_algebra(request):
    return load(request.param)


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance") or sys.modules.get("__main__")
    lines = getattr(module, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines):
            terminalreporter.write_line(line)
