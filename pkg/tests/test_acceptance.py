"""Acceptance gate: one printed PASS/FAIL/INFO line per criterion.

Criteria 1-8 gate the suite; criterion 9 (bounded conjecture scans) is
informational and never fails the build.
"""

import pytest

from anickres.checks import ALL_CRITERIA


@pytest.fixture(scope="module")
def results():
    out = {}
    for fn in ALL_CRITERIA:
        out[fn.__name__] = fn()
    return out


@pytest.mark.parametrize("fn", ALL_CRITERIA, ids=[f.__name__ for f in ALL_CRITERIA])
def test_criterion(fn, results, capsys):
    result = results[fn.__name__]
    with capsys.disabled():
        print(result.line())
    if result.gating:
        assert result.passed, result.details
