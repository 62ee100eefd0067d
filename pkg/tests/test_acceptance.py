"""Acceptance gate: one test per criterion, full profile, stated tolerances."""

import json

import pytest

from conftest import ACCEPTANCE_LINES
from qjacobi.acceptance import CRITERIA


@pytest.mark.parametrize("criterion", CRITERIA, ids=[f"criterion_{i + 1:02d}" for i in range(len(CRITERIA))])
def test_criterion(criterion):
    result = criterion("full")
    line = result.line()
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert result.passed, json.dumps(result.detail, default=str)[:2000]
