import json
import sys
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

sys.path.insert(0, str(Path(__file__).parent))

from omx import realize  # noqa: E402

settings.register_profile("default", max_examples=40, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"
ARRANGEMENTS = ["cm-arr-1", "cm-arr-2", "nongp-cm-arr", "square", "four-generic-lines"]

# criterion number -> (passed, detail), filled in by test_acceptance
ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def fixture_path(name):
    return FIXTURES / f"{name}.json"


def load_fixture(name):
    return realize.load_arrangement(fixture_path(name))


def affine_om(name):
    return realize.om_from_vectors(load_fixture(name))


@pytest.fixture(params=ARRANGEMENTS)
def fixture_name(request):
    return request.param


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[k]
        terminalreporter.write_line(f"criterion {k}: {'PASS' if ok else 'FAIL'}  {detail}")
