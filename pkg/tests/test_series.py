import random
from fractions import Fraction

import pytest

from simcores.errors import ExactDivisionError
from simcores.series import PowerSeries, geometric_series


def test_construction_pads_and_truncates():
    f = PowerSeries([1, 2], 4)
    assert f.coeffs == (1, 2, 0, 0, 0)
    g = PowerSeries([1, 2, 3, 4, 5, 6], 2)
    assert g.coeffs == (1, 2, 3)
    with pytest.raises(ValueError):
        PowerSeries([1], -1)


def test_coefficient_bounds():
    f = PowerSeries([1, 2], 3)
    assert f.coefficient(1) == 2
    assert f.coefficient(3) == 0
    with pytest.raises(IndexError):
        f.coefficient(4)


def test_add_sub_mul():
    f = PowerSeries([1, 2, 3], 5)
    assert (f - f).is_zero()
    one = PowerSeries.constant(1, 8)
    x = PowerSeries.monomial(1, 1, 8)
    assert (one - x) * geometric_series(8) == PowerSeries([1], 8)
    assert (2 * x).coeffs[1] == 2


def test_truncation_is_min_of_orders():
    f = PowerSeries([1, 1, 1], 6)
    g = PowerSeries([1, 1], 3)
    assert (f + g).order == 3
    assert (f * g).order == 3


def test_divide():
    one = PowerSeries.constant(1, 10)
    x = PowerSeries.monomial(1, 1, 10)
    assert one.divide(one - x) == geometric_series(10)
    with pytest.raises(ExactDivisionError):
        one.divide(x)


def test_divide_monomial():
    f = PowerSeries.monomial(2, 3, 8) + PowerSeries.monomial(2, 4, 8)
    q = f.divide_monomial(3, 2)
    assert q.order == 5
    assert q.coeffs == (1, 1, 0, 0, 0, 0)
    with pytest.raises(ExactDivisionError):
        (PowerSeries.monomial(1, 1, 5)).divide_monomial(2)
    with pytest.raises(ValueError):
        PowerSeries([1], 3).divide_monomial(4)


def test_sqrt_examples():
    one = PowerSeries.constant(1, 6)
    assert one.sqrt() == one
    f = PowerSeries([1, -4], 6)
    root = f.sqrt()
    assert [c for c in root.coeffs[:4]] == [1, -2, -2, -4]
    assert root.coefficient(4) == -10
    assert root.coefficient(5) == -28
    assert root * root == f


def test_sqrt_rejects_bad_constant():
    with pytest.raises(ExactDivisionError):
        PowerSeries([4, 1], 4).sqrt()


def test_sqrt_squares_back_on_random_series():
    rng = random.Random(20260809)
    for _ in range(50):
        coeffs = [1] + [rng.randint(-5, 5) for _ in range(12)]
        f = PowerSeries(coeffs, 12)
        root = f.sqrt()
        assert root * root == f
        assert root.coefficient(0) == 1


def test_integer_coefficients():
    assert PowerSeries([1, 2, 3], 2).integer_coefficients() == [1, 2, 3]
    with pytest.raises(ExactDivisionError):
        PowerSeries([Fraction(1, 2)], 1).integer_coefficients()


def test_str_mentions_truncation():
    assert "O(x^3)" in str(PowerSeries([1, 0, 2], 2))
