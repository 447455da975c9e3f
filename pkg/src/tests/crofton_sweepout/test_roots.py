"""
Тестирование ограничения многочленов на окружности и подсчета нулей.
"""

import numpy as np
import pytest

from crofton_sweepout.models import GreatCircle
from crofton_sweepout.polynomials import SpherePolynomial
from crofton_sweepout.roots import count_zeros_batch, count_zeros_on_circle, restrict_to_circle
from crofton_sweepout.sampling import sample_poles
from errors import IdenticallyZeroOnCircle


def rotation(axis, angle):
    axis = np.asarray(axis, dtype=float) / np.linalg.norm(axis)
    cross = np.array([[0, -axis[2], axis[1]], [axis[2], 0, -axis[0]], [-axis[1], axis[0], 0]])
    return np.eye(3) + np.sin(angle) * cross + (1 - np.cos(angle)) * cross @ cross


class TestRestriction:
    """
    Тестирование ограничения на большую окружность.
    """

    @pytest.fixture
    def height(self):
        return SpherePolynomial.from_terms(1, {}, {(0, 0): 1.0})

    @pytest.fixture
    def product(self):
        return SpherePolynomial.from_terms(2, {(1, 1): 1.0})

    def test_height_on_meridian(self, height):
        trig = restrict_to_circle(height, GreatCircle(pole=(1.0, 0.0, 0.0)))
        assert trig.cos_coeffs[0] == pytest.approx(0.0, abs=1e-14)
        amplitude = np.hypot(trig.cos_coeffs[1], trig.sin_coeffs[1])
        assert amplitude == pytest.approx(1.0, abs=1e-14)

    def test_height_on_equator(self, height):
        trig = restrict_to_circle(height, GreatCircle(pole=(0.0, 0.0, 1.0)))
        assert np.max(np.abs(trig.cos_coeffs + trig.sin_coeffs)) < 1e-14

    def test_product_on_equator(self, product):
        trig = restrict_to_circle(product, GreatCircle(pole=(0.0, 0.0, 1.0)))
        assert np.allclose(trig.cos_coeffs, 0.0, atol=1e-14)
        assert np.allclose(trig.sin_coeffs, [0.0, 0.0, 0.5], atol=1e-14)

    def test_matches_composition_on_grid(self):
        poly = SpherePolynomial.random(3, np.random.default_rng(11))
        circle = GreatCircle(pole=tuple(np.array([1.0, 2.0, 2.0]) / 3.0))
        trig = restrict_to_circle(poly, circle)
        theta = np.linspace(0.0, 2 * np.pi, 97)
        first, second = circle.basis()
        points = np.cos(theta)[:, None] * first + np.sin(theta)[:, None] * second
        assert np.max(np.abs(trig(theta) - poly(points))) < 1e-10


class TestZeroCount:
    """
    Тестирование подсчета нулей на окружности.
    """

    def test_height_generic_circle(self):
        height = SpherePolynomial.from_terms(1, {}, {(0, 0): 1.0})
        circle = GreatCircle(pole=tuple(np.array([2.0, -1.0, 2.0]) / 3.0))
        assert count_zeros_on_circle(height, circle) == 2

    def test_product_on_equator(self):
        product = SpherePolynomial.from_terms(2, {(1, 1): 1.0})
        assert count_zeros_on_circle(product, GreatCircle(pole=(0.0, 0.0, 1.0))) == 4

    def test_constant_restriction(self):
        poly = SpherePolynomial.from_terms(2, {(2, 0): 1.0, (0, 2): 1.0, (0, 0): -0.5})
        assert count_zeros_on_circle(poly, GreatCircle(pole=(0.0, 0.0, 1.0))) == 0

    def test_identically_zero(self):
        height = SpherePolynomial.from_terms(1, {}, {(0, 0): 1.0})
        with pytest.raises(IdenticallyZeroOnCircle):
            count_zeros_on_circle(height, GreatCircle(pole=(0.0, 0.0, 1.0)))

    def test_bound_two_k(self):
        poly = SpherePolynomial.random(4, np.random.default_rng(5))
        counts, _ = count_zeros_batch(poly, sample_poles(1, 2048))
        assert counts.max() <= 8

    def test_union_of_great_circles(self):
        normals = np.array([[0.0, 0.0, 1.0], [1.0, 0.0, 0.0], [0.0, 0.6, 0.8]])
        poly = SpherePolynomial.from_planes(normals)
        counts, degenerate = count_zeros_batch(poly, sample_poles(2, 512))
        assert not degenerate.any()
        assert np.all(counts == 6)

    def test_rotation_equivariance(self):
        poly = SpherePolynomial.random(3, np.random.default_rng(17))
        turn = rotation([1.0, -2.0, 0.5], 0.7)
        poles = sample_poles(3, 1000)
        rotated_counts, _ = count_zeros_batch(poly.rotated(turn), poles)
        counts, _ = count_zeros_batch(poly, poles @ turn.T)
        assert np.array_equal(rotated_counts, counts)
