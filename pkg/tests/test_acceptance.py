"""Acceptance gate: every criterion runs at full strength and prints one
pass/fail line.  Run with `pytest tests/test_acceptance.py -s` to see the
lines as they complete."""

import pytest

from quasicat import acceptance


RESULTS = {}


@pytest.mark.parametrize("runner", acceptance.RUNNERS, ids=lambda r: r.__name__)
def test_criterion(runner):
    result = runner()
    RESULTS[result.number] = result
    status = "PASS" if result.ok else "FAIL"
    print(f"[{status}] criterion {result.number}: {result.name} -- {result.detail}")
    assert result.ok, f"criterion {result.number}: {result.detail}"
