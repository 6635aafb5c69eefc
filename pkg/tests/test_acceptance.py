"""One test per acceptance criterion, each at its stated tolerance.

Run ``pytest tests/test_acceptance.py -s`` to see the scorecard lines, or
``python3 tests/test_acceptance.py`` for the scorecard alone.
"""
import sys

import pytest

from cyclident.acceptance import CRITERIA, run_criterion

SCORECARD: dict[int, str] = {}


@pytest.mark.parametrize("number", list(CRITERIA), ids=lambda k: f"criterion_{k:02d}")
def test_criterion(number):
    result = run_criterion(number)
    SCORECARD[number] = result.line()
    print(result.line())
    assert result.checked > 0
    if not result.passed:
        pytest.fail(result.line(), pytrace=False)


if __name__ == "__main__":
    results = [run_criterion(k) for k in CRITERIA]
    for r in results:
        print(r.line())
    sys.exit(0 if all(r.passed for r in results) else 1)
