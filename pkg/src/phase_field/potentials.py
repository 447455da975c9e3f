"""
Потенциал синус-Гордона и гетероклиническое решение.
"""

from typing import Literal

import numpy as np
from pydantic import BaseModel
from scipy.integrate import quad

PotentialKind = Literal["SineGordonNormalized", "SineGordonShifted"]


class Potential(BaseModel):
    """
    Потенциал с двумя ямами.

    * ``SineGordonNormalized``: W(t) = (1 + cos πt)/π², ямы ±1;
    * ``SineGordonShifted``: W(t) = 1 − cos t, ямы 0 и 2π.

    Два вида связаны заменой u = π(1 + ũ): W_shifted(π(1 + t)) = π²·W_normalized(t).

    .. code-block::

        Potential(kind="SineGordonNormalized")
    """

    kind: PotentialKind = "SineGordonNormalized"

    class Config:
        allow_mutation = False

    @property
    def wells(self) -> tuple[float, float]:
        return (-1.0, 1.0) if self.kind == "SineGordonNormalized" else (0.0, 2 * np.pi)

    def value(self, t: np.ndarray) -> np.ndarray:
        if self.kind == "SineGordonNormalized":
            return (1.0 + np.cos(np.pi * t)) / np.pi**2
        return 1.0 - np.cos(t)

    def first(self, t: np.ndarray) -> np.ndarray:
        if self.kind == "SineGordonNormalized":
            return -np.sin(np.pi * t) / np.pi
        return np.sin(t)

    def second(self, t: np.ndarray) -> np.ndarray:
        if self.kind == "SineGordonNormalized":
            return -np.cos(np.pi * t)
        return np.cos(t)


class HeteroclinicProfile(BaseModel):
    """
    Гетероклиника между ямами.

    * нормированная: h(t) = (4/π)·arctan(eᵗ) − 1, h′(t) = (2/π)·sech t;
    * сдвинутая: s(t) = 4·arctan(eᵗ), s′(t) = 2·sech t.

    .. code-block::

        HeteroclinicProfile(kind="SineGordonNormalized")
    """

    kind: PotentialKind = "SineGordonNormalized"

    class Config:
        allow_mutation = False

    @property
    def scale(self) -> float:
        return 4.0 / np.pi if self.kind == "SineGordonNormalized" else 4.0

    @property
    def potential(self) -> Potential:
        return Potential(kind=self.kind)

    def value(self, t: np.ndarray) -> np.ndarray:
        shift = 1.0 if self.kind == "SineGordonNormalized" else 0.0
        return self.scale * np.arctan(np.exp(t)) - shift

    def derivative(self, t: np.ndarray) -> np.ndarray:
        return 0.5 * self.scale / np.cosh(t)

    def second_derivative(self, t: np.ndarray) -> np.ndarray:
        return -0.5 * self.scale * np.tanh(t) / np.cosh(t)

    @property
    def h0(self) -> float:
        """
        Энергия ∫h′² в замкнутом виде: 8/π² (нормированная) или 8 (сдвинутая).

        :return:
        """

        return 0.5 * self.scale**2


def h0(kind: PotentialKind = "SineGordonNormalized") -> float:
    """
    Квадрат L²-нормы производной гетероклиники ∫_ℝ h′(t)² dt адаптивной квадратурой.

    :param kind: Вид потенциала
    :return:
    """

    profile = HeteroclinicProfile(kind=kind)
    value, _ = quad(lambda t: profile.derivative(t) ** 2, -np.inf, np.inf, epsabs=0.0, epsrel=1e-12, limit=200)
    return float(value)


def equipartition_energy(kind: PotentialKind = "SineGordonNormalized") -> float:
    """
    Полная энергия гетероклиники ∫ (½h′² + W(h)) dt; совпадает с :func:`h0`.

    :param kind: Вид потенциала
    :return:
    """

    profile = HeteroclinicProfile(kind=kind)
    potential = profile.potential

    def density(t: float) -> float:
        return float(0.5 * profile.derivative(t) ** 2 + potential.value(profile.value(t)))

    value, _ = quad(density, -np.inf, np.inf, epsabs=0.0, epsrel=1e-12, limit=200)
    return float(value)
