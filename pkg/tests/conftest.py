import cmath
import math

import pytest


def primitive_roots(d):
    return [cmath.exp(2j * math.pi * k / d) for k in range(d) if math.gcd(k, d) == 1]


@pytest.fixture
def roots():
    return primitive_roots


_ACCEPTANCE: dict[int, tuple[bool, str, float]] = {}


@pytest.fixture
def record_criterion():
    """Store one verdict per acceptance criterion for the terminal summary."""

    def record(number, passed, detail, seconds):
        _ACCEPTANCE[number] = (bool(passed), detail, seconds)

    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        passed, detail, seconds = _ACCEPTANCE[number]
        verdict = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"criterion {number:>2}: {verdict}  ({seconds:.1f}s)  {detail}")
