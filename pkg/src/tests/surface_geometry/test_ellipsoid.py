"""
Тестирование длин главных геодезических и подбора эллипсоида.
"""

from itertools import permutations

import numpy as np
import pytest

from errors import UnsupportedRegime
from surface_geometry.ellipsoid import (
    closed_geodesic_monodromy,
    ellipse_perimeter,
    length_jacobian,
    principal_geodesic_lengths,
    semi_axis_length_jacobian,
    tune_ellipsoid,
)


def perimeter_by_halving(semi_a, semi_b):
    """
    Оракул: длина вписанной ломаной с удвоением числа звеньев до стабилизации.
    """

    previous, count = 0.0, 1024
    while True:
        angles = np.linspace(0.0, 2 * np.pi, count + 1)
        points = np.stack([semi_a * np.cos(angles), semi_b * np.sin(angles)], axis=1)
        value = float(np.sum(np.linalg.norm(np.diff(points, axis=0), axis=1)))
        if abs(value - previous) < 1e-11:
            return value
        previous, count = value, count * 2


class TestPrincipalLengths:
    """
    Тестирование вектора длин ℓ⃗.
    """

    def test_round_sphere(self):
        assert np.allclose(principal_geodesic_lengths(1, 1, 1).as_array(), 2 * np.pi, atol=1e-12)

    def test_flattened(self):
        ell = principal_geodesic_lengths(1, 1, 4).as_array()
        assert ell[2] == pytest.approx(2 * np.pi, abs=1e-12)
        assert ell[0] == pytest.approx(ell[1], abs=1e-12)
        assert ell[0] == pytest.approx(4.84422, abs=1e-5)
        assert ell[0] == pytest.approx(perimeter_by_halving(1.0, 0.5), abs=1e-9)

    def test_permutation_equivariance(self):
        coefficients = np.random.default_rng(3).uniform(0.7, 1.5, 3)
        base = principal_geodesic_lengths(*coefficients).as_array()
        for order in permutations(range(3)):
            permuted = principal_geodesic_lengths(*coefficients[list(order)]).as_array()
            assert np.allclose(permuted, base[list(order)], atol=1e-12)

    def test_scaling(self):
        coefficients = np.array([1.0, 1.1, 1.2])
        base = principal_geodesic_lengths(*coefficients).as_array()
        scaled = principal_geodesic_lengths(*(1.5 * coefficients)).as_array()
        assert np.allclose(scaled, base * 1.5**-0.5, atol=1e-9)

    def test_unsupported(self):
        with pytest.raises(UnsupportedRegime):
            principal_geodesic_lengths(1, 1, 2.5)

    def test_perimeter_of_circle(self):
        assert ellipse_perimeter(2.0, 2.0) == pytest.approx(4 * np.pi, rel=1e-13)


class TestJacobians:
    """
    Тестирование разностных матриц Якоби в круглой точке.
    """

    def test_semi_axis_jacobian(self):
        expected = np.pi * (np.ones((3, 3)) - np.eye(3))
        assert np.max(np.abs(semi_axis_length_jacobian(np.ones(3)) - expected)) < 1e-4

    def test_coefficient_jacobian(self):
        expected = -np.pi / 2 * (np.ones((3, 3)) - np.eye(3))
        assert np.max(np.abs(length_jacobian(np.ones(3)) - expected)) < 1e-4


class TestTuning:
    """
    Тестирование подбора эллипсоида.
    """

    def test_zero_mu(self):
        tuned = tune_ellipsoid(0.0)
        assert tuned.coefficients == (1.0, 1.0, 1.0)
        assert tuned.iterations == 0

    def test_back_substitution(self):
        tuned = tune_ellipsoid(0.01)
        lengths = principal_geodesic_lengths(*tuned.coefficients).as_array()
        assert np.max(np.abs(lengths - (2 * np.pi + 0.01 * np.arange(3)))) < 1e-8

    def test_ordering(self):
        tuned = tune_ellipsoid(0.05)
        first, second, third = tuned.coefficients
        # более длинная γᵢ лежит в плоскости меньших коэффициентов
        assert first < second < third
        assert tuned.semi_axes[0] > tuned.semi_axes[1] > tuned.semi_axes[2]


class TestMonodromy:
    """
    Тестирование монодромии уравнения Якоби вдоль главных геодезических.
    """

    def test_round_sphere_is_degenerate(self):
        monodromy = closed_geodesic_monodromy(np.ones(3), 0)
        assert np.allclose(monodromy, np.eye(2), atol=1e-9)

    def test_tuned_is_nondegenerate(self):
        coefficients = np.array(tune_ellipsoid(0.05).coefficients)
        for index in range(3):
            monodromy = closed_geodesic_monodromy(coefficients, index)
            assert np.linalg.det(monodromy) == pytest.approx(1.0, abs=1e-8)
            assert abs(np.trace(monodromy) - 2.0) > 1e-8
