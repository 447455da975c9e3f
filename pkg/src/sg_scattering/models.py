"""
Описание моделей данных рассеяния.
"""

from typing import Optional

import numpy as np
from pydantic import BaseModel, validator


class SpectralParam(BaseModel):
    """
    Спектральный параметр λ ≠ 0.

    .. code-block::

        SpectralParam(value=0.5 + 0.8660254j)
    """

    value: complex

    class Config:
        arbitrary_types_allowed = True
        allow_mutation = False

    @validator("value", pre=True)
    def _nonzero(cls, value: complex) -> complex:  # pylint: disable=no-self-argument
        value = complex(value)
        if value == 0:
            raise ValueError("spectral parameter must be nonzero")
        return value

    @classmethod
    def on_circle(cls, theta: float) -> "SpectralParam":
        return cls(value=complex(np.cos(theta), np.sin(theta)))

    @property
    def k(self) -> complex:
        return self.value - 1 / self.value

    @property
    def j(self) -> complex:
        return self.value + 1 / self.value

    @property
    def theta(self) -> float:
        return float(np.angle(self.value))

    def direction(self) -> tuple[float, float]:
        """
        Направление R(λ) = (−q, p) для λ = q + ip, нормированное на единицу.

        :return:
        """

        vector = np.array([-self.value.real, self.value.imag])
        vector /= np.linalg.norm(vector)
        return float(vector[0]), float(vector[1])


class JostPair(BaseModel):
    """
    Решения Йоста Φ₊,₁ и Φ₋,₂ на прямой y = y0 и их вронскиан a(λ).

    .. code-block::

        JostPair(
            lam=SpectralParam(value=1j),
            y0=0.0,
            half_length=20.0,
            positions=np.array([-10.0, -5.0, 0.0, 5.0, 10.0]),
            phi_p1=np.array([[...], ...]),
            phi_m2=np.array([[...], ...]),
            a_value=1.2e-9 + 3.0e-10j,
            a_spread=2.1e-12,
        )
    """

    lam: SpectralParam
    y0: float
    half_length: float
    positions: np.ndarray
    phi_p1: np.ndarray
    phi_m2: np.ndarray
    a_value: complex
    a_spread: float

    class Config:
        arbitrary_types_allowed = True
        allow_mutation = False


class CircleSample(BaseModel):
    """
    Значение a(e^{iθ}).

    .. code-block::

        CircleSample(theta=1.5707963, a_value=1e-9 + 0j)
    """

    theta: float
    a_value: complex

    class Config:
        arbitrary_types_allowed = True
        allow_mutation = False

    @validator("a_value", pre=True)
    def _complex(cls, value: complex) -> complex:  # pylint: disable=no-self-argument
        return complex(value)


class ScatteringData(BaseModel):
    """
    Выборка a(λ) на верхней полуокружности, связанные состояния и направления ±R(λ).

    .. code-block::

        ScatteringData(
            circle_samples=[CircleSample(theta=0.0123, a_value=(-0.98+0.2j)), ...],
            bound_states=[1j],
            directions=[(0.0, 1.0), (-0.0, -1.0)],
        )
    """

    circle_samples: list[CircleSample]
    bound_states: list[complex]
    directions: list[tuple[float, float]]

    class Config:
        arbitrary_types_allowed = True
        allow_mutation = False

    def to_report(self) -> dict:
        """
        Отчет в формате {samples, bound_states, directions}.

        :return:
        """

        return {
            "samples": [
                {"theta": item.theta, "re_a": item.a_value.real, "im_a": item.a_value.imag}
                for item in self.circle_samples
            ],
            "bound_states": [
                {"theta": float(np.angle(value)), "lambda": [value.real, value.imag]} for value in self.bound_states
            ],
            "directions": [list(item) for item in self.directions],
        }


class PairingReport(BaseModel):
    """
    Результат антиподального сопоставления направлений.

    .. code-block::

        PairingReport(
            paired=True,
            pairs=[(0, 2, 0.7), (1, 3, 1.1)],
            unmatched=[],
        )
    """

    paired: bool
    pairs: list[tuple[int, int, float]]
    unmatched: list[int]
    tol_deg: Optional[float] = None

    class Config:
        allow_mutation = False
