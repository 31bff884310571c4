"""The nine acceptance criteria, one test each.

Each test prints its pass/fail line; conftest.py repeats the lines in the
terminal summary so they show up even when output is captured.
"""

import pytest

from foamcalc import checks

RESULT_LINES: list[str] = []


@pytest.mark.parametrize("check", checks.ALL_CHECKS, ids=lambda c: c.__name__.removeprefix("check_"))
def test_criterion(check):
    result = check()
    RESULT_LINES.append(result.line())
    print(result.line())
    assert result.ok, result.detail
