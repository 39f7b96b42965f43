"""The twelve acceptance criteria at full size; one PASS/FAIL line each."""

import pytest

from psfknots.acceptance import CRITERIA

from conftest import ACCEPTANCE_LINES


@pytest.mark.parametrize("criterion", CRITERIA, ids=lambda c: f"criterion_{c.number:02d}")
def test_criterion(criterion):
    result = criterion(fast=False, seed=0)
    print()
    print(result.line())
    ACCEPTANCE_LINES.append((result.number, result.line()))
    assert result.passed, result.detail
    assert result.in_budget, f"{result.seconds:.2f}s exceeds {result.budget}s"
