"""
Тестирование осесимметричного решения на S² и индекса Морса.
"""

import numpy as np
import pytest

from errors import InvalidInput, NotASolution
from phase_field.axisymmetric import latitude_grid, morse_index, solve_axisymmetric
from phase_field.energy import energy_split, pde_residual, varifold_mass
from phase_field.models import FieldState1D


@pytest.fixture(scope="module")
def solved_coarse():
    return solve_axisymmetric(0.05, 2048)


class TestSolveAxisymmetric:
    """
    Тестирование решения с экваториальной гетероклиникой.
    """

    def test_mass(self, solved_coarse):
        assert 2 * np.pi * 0.95 <= varifold_mass(solved_coarse) <= 2 * np.pi

    def test_residual(self, solved_coarse):
        assert solved_coarse.residual < 1e-10
        assert pde_residual(solved_coarse) < 1e-10

    def test_odd(self, solved_coarse):
        assert np.max(np.abs(solved_coarse.values + solved_coarse.values[::-1])) < 1e-10

    def test_index(self, solved_coarse):
        assert solved_coarse.index == 1

    def test_equipartition(self, solved_coarse):
        gradient, potential = energy_split(solved_coarse)
        assert gradient == pytest.approx(potential, rel=0.01)

    @pytest.mark.parametrize("eps, size", [(0.3, 2048), (0.05, 512)])
    def test_preconditions(self, eps, size):
        with pytest.raises(InvalidInput):
            solve_axisymmetric(eps, size)

    @pytest.mark.slow
    def test_monotone_convergence(self):
        masses = [varifold_mass(solve_axisymmetric(eps, 4096)) for eps in (0.1, 0.05, 0.02)]
        assert masses[0] < masses[1] < masses[2] <= 2 * np.pi * 1.005
        assert masses[2] == pytest.approx(2 * np.pi, rel=0.02)


class TestMorseIndex:
    """
    Тестирование индекса Морса.
    """

    def constant(self, value, eps):
        return FieldState1D(geometry="sphere", grid=latitude_grid(512), values=np.full(512, value), eps=eps)

    def test_stable_well(self):
        assert morse_index(self.constant(1.0, 0.1)) == 0

    def test_unstable_constant(self):
        assert morse_index(self.constant(0.0, 0.1)) >= 1

    def test_not_a_solution(self):
        with pytest.raises(NotASolution):
            morse_index(self.constant(0.5, 0.1))
