"""
Тестирование матриц Паули, связности Лакса и условия совместности.
"""

import numpy as np
import pytest

from errors import OutOfDomain
from sg_scattering.fields import ShiftedField, constant_field, kink_field
from sg_scattering.lax import compatibility_residual, lax_connection
from sg_scattering.pauli import IDENTITY, SIGMA_1, SIGMA_2, SIGMA_3, check_pauli, spectral_j, spectral_k

LAMBDAS = [1j, 2.0 + 0.5j, np.exp(1j * np.pi / 3), -0.3 + 1.7j]


class TestPauli:
    """
    Тестирование соотношений для матриц Паули.
    """

    def test_relations(self):
        check_pauli()
        assert np.array_equal(SIGMA_2 @ SIGMA_3, 1j * SIGMA_1)
        assert np.array_equal(SIGMA_3 @ SIGMA_3, IDENTITY)

    def test_spectral_functions(self):
        assert spectral_k(1j) == 2j
        assert spectral_j(1j) == 0


class TestLaxConnection:
    """
    Тестирование матриц A и B.
    """

    @pytest.mark.parametrize("lam", LAMBDAS)
    def test_well(self, lam):
        a, b = lax_connection(constant_field(0.0), (0.3, -1.2), lam)
        assert np.allclose(a, 0.25j * spectral_k(lam) * SIGMA_3, atol=1e-15)
        assert np.allclose(b, -0.25 * spectral_j(lam) * SIGMA_3, atol=1e-15)

    def test_lambda_i(self):
        _, b = lax_connection(constant_field(0.0), (0.0, 0.0), 1j)
        assert np.allclose(b, 0.0, atol=1e-15)

    @pytest.mark.parametrize("lam", LAMBDAS)
    def test_kink_perturbation(self, lam):
        kink = kink_field(10.0, 64)
        well = constant_field(0.0)
        for x in np.linspace(-6.0, 6.0, 13):
            a, _ = lax_connection(kink, (x, 0.7), lam)
            a0, _ = lax_connection(well, (x, 0.7), lam)
            sech, tanh = 1 / np.cosh(x), np.tanh(x)
            expected = 0.5j * (sech**2 / lam * SIGMA_3 - sech * SIGMA_2 + sech * tanh / lam * SIGMA_1)
            assert np.max(np.abs(a - a0 - expected)) < 1e-10

    @pytest.mark.parametrize("lam", LAMBDAS)
    def test_traceless(self, lam):
        kink = kink_field(10.0, 64, normal=(0.6, 0.8))
        for point in [(0.0, 0.0), (1.5, -2.0), (-3.0, 4.0)]:
            a, b = lax_connection(kink, point, lam)
            assert abs(np.trace(a)) < 1e-14
            assert abs(np.trace(b)) < 1e-14

    def test_out_of_domain(self):
        with pytest.raises(OutOfDomain):
            lax_connection(constant_field(0.0, half_width=5.0), (6.0, 0.0), 1j)


class TestCompatibility:
    """
    Тестирование невязки ∂ᵧA − ∂ₓB − [B, A].
    """

    def test_unstable_constant(self):
        assert compatibility_residual(constant_field(np.pi), 0.5 + 0.5j) < 1e-12

    @pytest.mark.slow
    def test_kink(self):
        assert compatibility_residual(kink_field(10.0, 1024), np.exp(0.4j)) < 1e-6

    def test_kink_from_grid(self):
        field = kink_field(10.0, 512)
        sampled = ShiftedField(field.half_width, field.values)
        assert compatibility_residual(sampled, 1j) < 1e-4

    def test_non_solution(self):
        def profile(x, y):
            return x * y / 10, y / 10, x / 10

        field = ShiftedField.from_profile(profile, 10.0, 128)
        assert compatibility_residual(field, 1j) > 1e-3
