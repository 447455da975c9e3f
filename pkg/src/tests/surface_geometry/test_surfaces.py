"""
Тестирование геодезических запросов к поверхностям.
"""

import numpy as np
import pytest

from errors import BeyondInjectivityRadius, PointsCoincide, UnsupportedRegime, VectorTooLong
from surface_geometry.geodesics import exp_map, geodesic_between, log_map, point_along
from surface_geometry.surfaces import Ellipsoid, FlatRect, RoundSphere, surface_from_dict


def rk4_geodesic(coefficients, point, direction, length, steps):
    """
    Независимый оракул: геодезическая эллипсоида методом РК4 с постоянным шагом.
    """

    def rhs(state):
        position, velocity = state[:3], state[3:]
        scaled = coefficients * position
        factor = (velocity @ (coefficients * velocity)) / (scaled @ scaled)
        return np.concatenate([velocity, -factor * scaled])

    state = np.concatenate([point, direction])
    step = length / steps
    for _ in range(steps):
        k1 = rhs(state)
        k2 = rhs(state + step / 2 * k1)
        k3 = rhs(state + step / 2 * k2)
        k4 = rhs(state + step * k3)
        state = state + step / 6 * (k1 + 2 * k2 + 2 * k3 + k4)
    return state[:3]


class TestRoundSphere:
    """
    Тестирование круглой сферы.
    """

    @pytest.fixture
    def sphere(self):
        return RoundSphere()

    def test_quarter_circle(self, sphere):
        segment = geodesic_between(sphere, np.array([1.0, 0, 0]), np.array([0, 1.0, 0]))
        assert segment.length == pytest.approx(np.pi / 2, abs=1e-12)
        assert np.allclose(segment.start_tangent, [0, 1, 0], atol=1e-12)
        assert np.allclose(segment.end_tangent, [1, 0, 0], atol=1e-12)

    def test_arc_length_is_angle(self, sphere):
        end = np.array([np.cos(0.3), np.sin(0.3), 0.0])
        assert geodesic_between(sphere, np.array([1.0, 0, 0]), end).length == pytest.approx(0.3, abs=1e-12)

    def test_samples_on_great_circle(self, sphere):
        segment = geodesic_between(sphere, np.array([1.0, 0, 0]), np.array([0, 0.6, 0.8]))
        assert np.allclose(np.linalg.norm(segment.samples, axis=1), 1.0, atol=1e-12)
        normal = np.cross(segment.start, segment.end)
        assert np.max(np.abs(segment.samples @ normal)) < 1e-12

    def test_exp_map(self, sphere):
        pole = np.array([0, 0, 1.0])
        assert np.allclose(exp_map(sphere, pole, np.array([np.pi / 2, 0, 0])), [1, 0, 0], atol=1e-12)
        assert np.array_equal(exp_map(sphere, pole, np.zeros(3)), pole)

    def test_errors(self, sphere):
        point = np.array([1.0, 0, 0])
        with pytest.raises(PointsCoincide):
            geodesic_between(sphere, point, point)
        with pytest.raises(BeyondInjectivityRadius):
            geodesic_between(sphere, point, -point)
        with pytest.raises(VectorTooLong):
            exp_map(sphere, point, np.array([0, 4.0, 0]))


class TestEllipsoid:
    """
    Тестирование геодезических эллипсоида.
    """

    @pytest.fixture
    def ellipsoid(self):
        return Ellipsoid(1.0, 1.1, 1.2)

    @pytest.fixture
    def start(self, ellipsoid):
        return ellipsoid.project(np.array([1.0, 0, 0]))

    def test_length_against_rk4(self, ellipsoid, start):
        direction = ellipsoid.tangent_basis(start)[0] * 0.6 + ellipsoid.tangent_basis(start)[1] * 0.8
        end = exp_map(ellipsoid, start, 0.5 * direction)
        segment = geodesic_between(ellipsoid, start, end)
        assert segment.length == pytest.approx(0.5, abs=1e-9)

        coarse = rk4_geodesic(ellipsoid.coefficients, start, segment.start_tangent, segment.length, 400)
        fine = rk4_geodesic(ellipsoid.coefficients, start, segment.start_tangent, segment.length, 800)
        assert np.linalg.norm(fine - coarse) < 1e-9
        assert np.linalg.norm(fine - end) < 1e-8

    def test_exp_distance_back_check(self):
        surface = Ellipsoid(1.0, 1.05, 1.1)
        start = surface.project(np.array([0.3, -0.5, 0.8]))
        vector = 0.7 * surface.tangent_basis(start)[1]
        end = exp_map(surface, start, vector)
        assert abs(surface.defect(end)) < 1e-12
        assert surface.distance(start, end) == pytest.approx(0.7, abs=1e-10)

    def test_symmetry_and_reversed_tangents(self, ellipsoid):
        generator = np.random.default_rng(7)
        for _ in range(3):
            start = ellipsoid.project(generator.standard_normal(3))
            shift = ellipsoid.project_tangent(start, generator.standard_normal(3))
            end = exp_map(ellipsoid, start, 0.9 * shift / np.linalg.norm(shift))
            forward = geodesic_between(ellipsoid, start, end)
            backward = geodesic_between(ellipsoid, end, start)
            assert forward.length == pytest.approx(backward.length, abs=1e-10)
            assert np.allclose(forward.start_tangent, backward.end_tangent, atol=1e-8)
            assert np.allclose(forward.end_tangent, backward.start_tangent, atol=1e-8)

    def test_exp_log_round_trip(self, ellipsoid):
        start = ellipsoid.project(np.array([0.2, 0.9, -0.3]))
        end = ellipsoid.project(np.array([0.5, 0.7, 0.1]))
        assert np.linalg.norm(exp_map(ellipsoid, start, log_map(ellipsoid, start, end)) - end) < 1e-9

    def test_point_along(self, ellipsoid, start):
        end = ellipsoid.project(np.array([0.8, 0.5, 0.2]))
        segment = geodesic_between(ellipsoid, start, end)
        middle = point_along(ellipsoid, segment, segment.length / 2)
        assert ellipsoid.distance(start, middle) == pytest.approx(segment.length / 2, abs=1e-9)
        assert ellipsoid.distance(middle, end) == pytest.approx(segment.length / 2, abs=1e-9)

    def test_unsupported_regime(self):
        with pytest.raises(UnsupportedRegime):
            Ellipsoid(0.4, 1.0, 1.0)

    def test_curvature_of_round_case(self):
        surface = Ellipsoid(1.0, 1.0, 1.0)
        assert surface.gaussian_curvature(np.array([0.6, 0.8, 0.0])) == pytest.approx(1.0)


class TestFlatRect:
    """
    Тестирование плоского прямоугольника.
    """

    def test_straight_segment(self):
        surface = FlatRect(4.0, 2.0)
        segment = geodesic_between(surface, np.array([0.0, 0.0]), np.array([0.3, 0.4]))
        assert segment.length == pytest.approx(0.5)
        assert surface.inj_lower_bound == 1.0
        with pytest.raises(BeyondInjectivityRadius):
            geodesic_between(surface, np.array([-1.0, 0.0]), np.array([1.0, 0.0]))

    def test_serialization(self):
        for surface in (RoundSphere(), Ellipsoid(1.0, 1.1, 1.2), FlatRect(2.0, 3.0)):
            assert surface_from_dict(surface.to_dict()) == surface


@pytest.mark.parametrize("surface", [RoundSphere(), Ellipsoid(0.8, 1.0, 1.3)])
def test_projection_differential(surface):
    point = np.array([0.7, -0.4, 0.9])
    step = 1e-6
    expected = np.column_stack(
        [
            (surface.project(point + step * axis) - surface.project(point - step * axis)) / (2 * step)
            for axis in np.eye(3)
        ]
    )
    assert np.allclose(surface.projection_differential(point), expected, atol=1e-8)
