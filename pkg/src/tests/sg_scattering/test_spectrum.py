"""
Тестирование связанных состояний, асимптотических направлений и их сопоставления.
"""

import numpy as np
import pytest

from errors import NoCrossings, OddCount
from sg_scattering.ends import angle_between, detect_ends_geometric, verify_antipodal_pairing
from sg_scattering.fields import ShiftedField, constant_field, exact_saddle_field, kink_field
from sg_scattering.models import CircleSample
from sg_scattering.spectrum import bound_states, circle_thetas, refine_bound_states


def assert_directions(found, expected, tol_deg):
    assert len(found) == len(expected)
    for direction in expected:
        assert min(angle_between(direction, item) for item in found) < tol_deg


class TestBoundStates:
    """
    Тестирование поиска связанных состояний.
    """

    def test_thetas(self):
        thetas = circle_thetas(8)
        assert thetas[0] == pytest.approx(np.pi / 32)
        assert thetas[-1] == pytest.approx(np.pi - np.pi / 32)

    def test_well(self):
        data = bound_states(constant_field(0.0), 8)
        assert data.bound_states == []
        assert data.directions == []
        assert len(data.circle_samples) == 8

    def test_flat_samples_skip_refinement(self, mocker):
        solve = mocker.patch("sg_scattering.spectrum.a_on_circle")
        samples = [CircleSample(theta=theta, a_value=1.0) for theta in circle_thetas(6)]
        data = refine_bound_states(constant_field(0.0), samples)
        assert data.bound_states == []
        solve.assert_not_called()

    @pytest.mark.slow
    def test_kink(self):
        data = bound_states(kink_field(40.0, 256), 16)
        assert len(data.bound_states) == 1
        assert abs(data.bound_states[0] - 1j) < 1e-6
        assert_directions(data.directions, [(0.0, 1.0), (0.0, -1.0)], 1e-3)

    @pytest.mark.slow
    def test_rotated_kink(self):
        data = bound_states(kink_field(40.0, 256, normal=(0.8, 0.6)), 16)
        assert len(data.bound_states) == 1
        assert abs(data.bound_states[0] - (0.6 + 0.8j)) < 1e-6
        assert_directions(data.directions, [(-0.6, 0.8), (0.6, -0.8)], 1e-3)

    @pytest.mark.slow
    def test_saddle(self):
        data = bound_states(exact_saddle_field(np.pi / 4, 25.0, 256), 24)
        expected = sorted([np.exp(1j * np.pi / 4), np.exp(3j * np.pi / 4)], key=np.angle)
        assert len(data.bound_states) == 2
        assert np.allclose(data.bound_states, expected, atol=1e-4)
        report = verify_antipodal_pairing(data.directions, 1.0)
        assert report.paired


class TestDetectEnds:
    """
    Тестирование поиска направлений по линии уровня {u = π}.
    """

    def test_kink(self):
        assert_directions(detect_ends_geometric(kink_field(40.0, 128)), [(0.0, 1.0), (0.0, -1.0)], 1.0)

    def test_rotated_kink(self):
        ends = detect_ends_geometric(kink_field(40.0, 128, normal=(0.8, 0.6)))
        assert_directions(ends, [(-0.6, 0.8), (0.6, -0.8)], 1.0)

    def test_saddle(self):
        field = exact_saddle_field(np.pi / 4, 25.0, 128)
        ends = detect_ends_geometric(field)
        assert_directions(ends, field.ends, 5.0)
        assert verify_antipodal_pairing(ends, 5.0).paired

    def test_sampled_kink(self):
        field = kink_field(40.0, 128)
        ends = detect_ends_geometric(ShiftedField(field.half_width, field.values))
        assert_directions(ends, [(0.0, 1.0), (0.0, -1.0)], 1.0)

    def test_no_crossings(self):
        with pytest.raises(NoCrossings):
            detect_ends_geometric(constant_field(0.5))


class TestAntipodalPairing:
    """
    Тестирование антиподального сопоставления.
    """

    def test_pair(self):
        report = verify_antipodal_pairing([(0.0, 1.0), (0.0, -1.0)], 1.0)
        assert report.paired
        assert report.pairs[0][:2] == (0, 1)

    def test_no_antipodes(self):
        report = verify_antipodal_pairing([(1.0, 0.0), (0.0, 1.0)], 5.0)
        assert not report.paired
        assert report.unmatched == [0, 1]

    def test_tolerance(self):
        tilted = (np.cos(np.deg2rad(184)), np.sin(np.deg2rad(184)))
        assert verify_antipodal_pairing([(1.0, 0.0), tilted], 5.0).paired
        assert not verify_antipodal_pairing([(1.0, 0.0), tilted], 3.0).paired

    @pytest.mark.parametrize("directions", [[], [(1.0, 0.0), (0.0, 1.0), (-1.0, 0.0)]])
    def test_odd(self, directions):
        with pytest.raises(OddCount):
            verify_antipodal_pairing(directions, 5.0)
