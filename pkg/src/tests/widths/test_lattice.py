"""
Тестирование решетки длин и проверки подсчета.
"""

from fractions import Fraction

import pytest

from errors import InvalidInput, MuTooLarge
from widths.lattice import (
    brute_force_values,
    count_check,
    lattice_strata,
    pinch_bounds,
    quantization_report,
    quantization_values,
    stratum_steps,
)
from widths.models import Length2Pi, as_fraction


class TestLength2Pi:
    """
    Тестирование точных значений 2π·turns + offset.
    """

    def test_ordering(self):
        assert Length2Pi(turns=1, offset=Fraction(1, 10)) < Length2Pi(turns=1, offset=Fraction(1, 5))
        assert Length2Pi(turns=1, offset=1) < Length2Pi(turns=2)
        # 2π + 7 > 4π, так как 2π < 7
        assert Length2Pi(turns=2) < Length2Pi(turns=1, offset=7)
        assert Length2Pi(turns=2, offset=-7) < Length2Pi(turns=1)

    def test_equality(self):
        assert Length2Pi(turns=1, offset="0.1") == Length2Pi(turns=1, offset=Fraction(1, 10))
        assert len({Length2Pi(turns=1, offset=0.5), Length2Pi(turns=1, offset="1/2")}) == 1

    def test_sign_near_zero(self):
        # 355/113 − π ≈ 2.7e−7
        assert Length2Pi(turns=-1, offset=Fraction(710, 113)).sign() == 1
        assert Length2Pi(turns=-1, offset=Fraction(333, 53)).sign() == -1

    def test_float_conversion(self):
        assert as_fraction(0.1) == Fraction(1, 10)
        assert str(Length2Pi(turns=2, offset="0.1")) == "2π·2 + 1/10"
        assert str(Length2Pi(turns=3)) == "2π·3"


class TestQuantization:
    """
    Тестирование перечисления значений решетки.
    """

    def test_first_stratum(self):
        values = quantization_values("0.1", Length2Pi(turns=1, offset=1))
        assert values == [Length2Pi(turns=1, offset=Fraction(k, 10)) for k in range(3)]

    def test_two_strata(self):
        values = quantization_values("0.1", Length2Pi(turns=2, offset=1))
        assert len(values) == 8
        assert values[3:] == [Length2Pi(turns=2, offset=Fraction(k, 10)) for k in range(5)]

    def test_boundary_included(self):
        values = quantization_values("0.5", Length2Pi(turns=1, offset=1))
        assert values == [Length2Pi(turns=1, offset=offset) for offset in ("0", "0.5", "1")]

    def test_rational_bound(self):
        assert quantization_values("0.1", 6) == []
        assert len(quantization_values("0.1", 7)) == 3

    @pytest.mark.parametrize("mu, bound", [("0.1", Length2Pi(turns=3, offset=1)), ("0.7", 20), ("1/3", 30)])
    def test_brute_force(self, mu, bound):
        assert quantization_values(mu, bound) == brute_force_values(mu, bound)

    def test_stratum_steps(self):
        assert stratum_steps(1) == [0, 1, 2]
        assert stratum_steps(3) == list(range(7))

    @pytest.mark.parametrize("mu, bound", [("0", 10), ("-0.1", 10), ("0.1", 0)])
    def test_invalid(self, mu, bound):
        with pytest.raises(InvalidInput):
            quantization_values(mu, bound)


class TestCountCheck:
    """
    Тестирование тождества Σ(2j + 1) = (m + 1)² − 1.
    """

    @pytest.mark.parametrize("m", range(1, 11))
    def test_identity(self, m):
        assert count_check(m, Fraction(1, 4 * m)) == (m + 1) ** 2 - 1

    def test_examples(self):
        assert count_check(1, "0.1") == 3
        assert count_check(2, "0.1") == 8
        assert count_check(10, "0.04") == 120

    def test_strata(self):
        assert [stratum.size for stratum in lattice_strata("0.01", 4)] == [3, 5, 7, 9]

    def test_mu_too_large(self):
        with pytest.raises(MuTooLarge):
            count_check(3, "0.2")

    def test_report(self):
        report = quantization_report("0.1", 2)
        assert report.count == report.expected == 8
        assert report.strata == [3, 5]
        assert report.rows()[0] == {"index": 1, "symbolic": "2π·1", "value": pytest.approx(6.283185307179586)}


class TestPinchBounds:
    """
    Тестирование интервалов 2πm ≤ ω_p ≤ (2π + 2μ)m.
    """

    @pytest.mark.parametrize(
        "p, lower, upper",
        [(1, 1, "0.02"), (3, 1, "0.02"), (8, 2, "0.04"), (9, 3, "0.06")],
    )
    def test_examples(self, p, lower, upper):
        interval = pinch_bounds(p, "0.01")
        assert interval.lower == Length2Pi(turns=lower)
        assert interval.upper == Length2Pi(turns=lower, offset=upper)
        assert interval.contains(interval.lattice_value)

    def test_lattice_order_statistic(self):
        interval = pinch_bounds(6, "0.01")
        assert interval.lattice_value == Length2Pi(turns=2, offset="0.02")
        assert interval.width == pytest.approx(0.04)

    def test_mu_too_large(self):
        with pytest.raises(MuTooLarge):
            pinch_bounds(9, "0.2")

    def test_invalid_p(self):
        with pytest.raises(InvalidInput):
            pinch_bounds(0, "0.01")
