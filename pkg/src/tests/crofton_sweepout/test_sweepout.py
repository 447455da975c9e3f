"""
Тестирование оценок Крофтона и границы масс заметаний.
"""

import math

import numpy as np
import pytest

from crofton_sweepout.models import CroftonEstimate
from crofton_sweepout.polynomials import SpherePolynomial
from crofton_sweepout.sweepout import (
    MAX_REDRAWS,
    crofton_length,
    merge_estimates,
    verify_mass_bound,
    width_upper_bound,
)
from errors import IdenticallyZeroOnCircle, InvalidInput


class TestCroftonLength:
    """
    Тестирование оценки длины нулевого множества.
    """

    @pytest.fixture
    def height(self):
        return SpherePolynomial.from_terms(1, {}, {(0, 0): 1.0})

    def test_great_circle_calibration(self, height):
        estimate = crofton_length(height, 100_000, seed=42)
        assert estimate.length_mean == 2 * math.pi
        assert estimate.std_error == 0.0
        assert estimate.rejected == 0

    def test_latitude_circle(self):
        latitude = SpherePolynomial.from_terms(1, {(0, 0): -0.6}, {(0, 0): 1.0})
        estimate = crofton_length(latitude, 100_000, seed=7)
        assert abs(estimate.length_mean - 2 * math.pi * 0.8) < 3 * estimate.std_error

    def test_random_cubic_bound(self):
        poly = SpherePolynomial.random(3, np.random.default_rng(0))
        estimate = crofton_length(poly, 20_000, seed=9)
        assert estimate.length_mean <= 6 * math.pi + 3 * estimate.std_error

    def test_projective_invariance(self):
        poly = SpherePolynomial.random(2, np.random.default_rng(1))
        assert crofton_length(poly.scaled(-3.5), 5_000, seed=3) == crofton_length(poly, 5_000, seed=3)

    def test_determinism(self):
        poly = SpherePolynomial.random(2, np.random.default_rng(2))
        assert crofton_length(poly, 3_000, seed=5) == crofton_length(poly, 3_000, seed=5)

    def test_minimum_samples(self, height):
        with pytest.raises(InvalidInput):
            crofton_length(height, 10, seed=1)

    def test_merge(self):
        poly = SpherePolynomial.random(2, np.random.default_rng(4))
        first = crofton_length(poly, 1_000, seed=1)
        second = crofton_length(poly, 3_000, seed=2)
        merged = merge_estimates(first, second)
        assert merged.n_samples == 4_000
        assert merged.length_mean == pytest.approx((first.length_mean + 3 * second.length_mean) / 4)
        assert 0.0 < merged.std_error < min(first.std_error, second.std_error)

    @staticmethod
    def degenerate_counts(poles, always=()):
        # в блоке вырождены окружности из always, повторные розыгрыши по одной окружности вырождены всегда
        degenerate = np.zeros(len(poles), dtype=bool)
        degenerate[list(always) if len(poles) > 1 else slice(None)] = True
        return np.full(len(poles), 2), degenerate

    def test_exhausted_redraws(self, caplog, mocker, height):
        mocker.patch(
            "crofton_sweepout.sweepout.count_zeros_batch",
            side_effect=lambda poly, poles: self.degenerate_counts(poles, always=(3,)),
        )
        estimate = crofton_length(height, 100, seed=1)
        assert estimate.exhausted == [3]
        assert estimate.counted == 99
        assert estimate.rejected == MAX_REDRAWS
        assert estimate.length_mean == 2 * math.pi
        assert "stayed degenerate" in caplog.text

    def test_all_exhausted(self, mocker, height):
        mocker.patch(
            "crofton_sweepout.sweepout.count_zeros_batch",
            side_effect=lambda poly, poles: self.degenerate_counts(poles, always=range(len(poles))),
        )
        with pytest.raises(IdenticallyZeroOnCircle):
            crofton_length(height, 100, seed=1)

    def test_merge_exhausted(self):
        first = CroftonEstimate(length_mean=6.0, std_error=0.1, n_samples=100, seed=1, exhausted=[3])
        second = CroftonEstimate(length_mean=6.0, std_error=0.1, n_samples=200, seed=2, exhausted=[0])
        merged = merge_estimates(first, second)
        assert merged.n_samples == 300
        assert merged.exhausted == [3, 100]
        assert merged.counted == 298
        assert merged.length_mean == pytest.approx(6.0)


class TestWidthBound:
    """
    Тестирование верхней границы ширин.
    """

    @pytest.mark.parametrize("p, expected", [(1, 2 * math.pi), (3, 2 * math.pi), (9, 6 * math.pi), (24, 8 * math.pi)])
    def test_values(self, p, expected):
        assert width_upper_bound(p) == expected

    def test_invalid(self):
        with pytest.raises(InvalidInput):
            width_upper_bound(0)


class TestMassBound:
    """
    Тестирование границы sup M ≤ 2πk.
    """

    @pytest.mark.parametrize("k", [1, 2])
    def test_bound(self, k):
        report = verify_mass_bound(k, trials=10, n_samples=2_000, seed=11)
        assert report.bound == 2 * math.pi * k
        assert report.max <= report.bound + 3 * report.max_std_error
        assert len(report.per_trial) == 10

    def test_deterministic_repeat(self):
        assert verify_mass_bound(1, 5, 500, 13) == verify_mass_bound(1, 5, 500, 13)

    def test_degree_range(self):
        with pytest.raises(InvalidInput):
            verify_mass_bound(7, 1, 100, 1)
