from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from expind.dyadic import ONE, TWO, ZERO, Dyadic, dyadic_add, dyadic_cmp, dyadic_sum
from expind.graph import INFINITY

HALF = Dyadic.half_power(1)
QUARTER = Dyadic.half_power(2)


def test_halves_carry_to_one() -> None:
    assert dyadic_add(HALF, HALF) == ONE
    assert dyadic_sum([QUARTER, QUARTER, QUARTER]) == Dyadic(3, 2)
    assert dyadic_cmp(dyadic_add(Dyadic(3, 2), QUARTER), ONE) == 0


@pytest.mark.parametrize("last", [2, 5, 20, 200])
def test_geometric_tail_stays_below_one(last: int) -> None:
    total = dyadic_sum(Dyadic.decay(d) for d in range(2, last + 1))
    assert total < ONE
    assert total.as_fraction() == 1 - Fraction(1, 2 ** (last - 1))


def test_decay_values() -> None:
    assert Dyadic.decay(0) == TWO
    assert Dyadic.decay(1) == ONE
    assert Dyadic.decay(3) == QUARTER
    assert Dyadic.decay(INFINITY) == ZERO


def test_comparison() -> None:
    assert dyadic_cmp(HALF, ONE) == -1
    assert dyadic_cmp(ONE, ONE) == 0
    assert dyadic_cmp(TWO, Dyadic(7, 2)) == 1
    assert sorted([ONE, QUARTER, ZERO, HALF]) == [ZERO, QUARTER, HALF, ONE]


def test_normalization_is_enforced() -> None:
    assert Dyadic.of(12, 3) == Dyadic(3, 1)
    assert Dyadic.of(0, 9) == ZERO
    with pytest.raises(ValueError):
        Dyadic(2, 1)
    with pytest.raises(ValueError):
        Dyadic(-1)


def test_serialization() -> None:
    big = Dyadic.half_power(-80)
    assert big.to_json() == {"num": str(2**80), "shift": 0}
    assert Dyadic(3, 2).to_json() == {"num": "3", "shift": 2}
    assert str(Dyadic(3, 2)) == "3/4"


@given(
    st.lists(st.tuples(st.integers(0, 1000), st.integers(0, 40)), max_size=20),
)
def test_sum_agrees_with_fractions(terms: list[tuple[int, int]]) -> None:
    values = [Dyadic.of(num, shift) for num, shift in terms]
    expected = sum((Fraction(num, 2**shift) for num, shift in terms), Fraction(0))
    assert dyadic_sum(values).as_fraction() == expected
    assert dyadic_cmp(dyadic_sum(values), ONE) == (expected > 1) - (expected < 1)
