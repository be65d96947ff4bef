"""Shared fixtures."""

import pytest

from partition_algebra.diagrams.seatplan import SeatPlan, parse_seatplan


@pytest.fixture
def w1() -> SeatPlan:
    """Worked-example upper diagram on five strands."""
    return parse_seatplan("{{1,1',4'},{2,5},{3,4},{2'},{3',5'}}")


@pytest.fixture
def w2() -> SeatPlan:
    """Worked-example lower diagram on five strands."""
    return parse_seatplan("{{1,1',3',4'},{2},{3,5},{4},{2',5'}}")
