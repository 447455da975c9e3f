"""
Тестирование энергии, невязки и массы варифолда.
"""

import numpy as np
import pytest

from phase_field.axisymmetric import equatorial_ansatz, flat_kink, latitude_grid, solve_flat_kink
from phase_field.energy import energy, energy_split, pde_residual, varifold_mass
from phase_field.models import FieldState1D
from phase_field.potentials import h0


def sphere_state(values, eps):
    return FieldState1D(geometry="sphere", grid=latitude_grid(values.size), values=values, eps=eps)


class TestEnergy:
    """
    Тестирование квадратуры энергии.
    """

    def test_well(self):
        assert energy(sphere_state(np.ones(256), 0.1)) == 0.0
        assert varifold_mass(sphere_state(np.ones(256), 0.1)) == 0.0

    def test_constant_zero(self):
        eps = 0.1
        expected = 4 * np.pi * (2 / np.pi**2) / eps
        assert energy(sphere_state(np.zeros(512), eps)) == pytest.approx(expected, rel=1e-12)

    def test_equatorial_ansatz(self):
        assert energy(equatorial_ansatz(0.02, 4096)) == pytest.approx(2 * np.pi * h0(), rel=0.03)

    def test_second_order_refinement(self):
        values = [energy(sphere_state(0.9 * np.cos(latitude_grid(size)), 0.5)) for size in (256, 512, 1024)]
        ratio = (values[0] - values[1]) / (values[1] - values[2])
        assert 3.0 < ratio < 5.0

    def test_split(self):
        state = equatorial_ansatz(0.05, 2048)
        gradient, potential = energy_split(state)
        assert gradient + potential == pytest.approx(energy(state))
        assert gradient > 0 and potential > 0


class TestResidual:
    """
    Тестирование невязки уравнения ε²Δu = W′(u).
    """

    def test_well(self):
        assert pde_residual(sphere_state(-np.ones(256), 0.1)) == pytest.approx(0.0, abs=1e-15)

    def test_exact_flat_kink(self):
        assert pde_residual(flat_kink(1.0, 10.0, 8192)) < 1e-6

    def test_random(self):
        values = np.random.default_rng(0).uniform(-1, 1, 256)
        assert pde_residual(sphere_state(values, 0.1)) > 0


class TestFlatKink:
    """
    Тестирование массы одиночной гетероклиники.
    """

    def test_unit_mass(self):
        state = solve_flat_kink(1.0, 10.0, 4096)
        assert state.residual < 1e-10
        assert varifold_mass(state) == pytest.approx(1.0, abs=1e-3)
