"""Acceptance suite: every built-in criterion at its stated tolerance.

Run with ``pytest tests/test_acceptance.py -v -s`` for one printed pass/fail
line per criterion, or ``multinv selftest --human`` for the same table from
the command line.
"""

import pytest

from multinv.selftest import criterion_keys, run_criterion


@pytest.mark.parametrize("key", criterion_keys())
def test_acceptance_criterion(key):
    result = run_criterion(key)
    mark = "PASS" if result.passed else "FAIL"
    print(f"[{mark}] {result.key}: {result.description} "
          f"({result.elapsed_ms} ms) {result.detail}")
    assert result.passed, f"{result.key}: {result.detail}"
