"""
Связность Лакса A, B уравнения Δu = sin u и проверка условия совместности.
"""

from typing import Sequence, Union

import numpy as np

from sg_scattering.fields import ShiftedField, gradient4
from sg_scattering.models import SpectralParam
from sg_scattering.pauli import from_components

Lambda = Union[complex, SpectralParam]

# отступ от края сетки, где разности теряют порядок
MARGIN = 3


def as_lambda(lam: Lambda) -> SpectralParam:
    return lam if isinstance(lam, SpectralParam) else SpectralParam(value=lam)


def connection_components(
    u: np.ndarray, u_x: np.ndarray, u_y: np.ndarray, lam: Lambda
) -> tuple[np.ndarray, np.ndarray]:
    """
    Компоненты A = Σ aₖσₖ и B = Σ bₖσₖ по базису Паули.

    * A = (i/4)[(λ − cos u/λ)σ₃ − (∂ₓu − i∂ᵧu)σ₂ − (sin u/λ)σ₁];
    * B = (1/4)[−(λ + cos u/λ)σ₃ + (∂ₓu − i∂ᵧu)σ₂ − (sin u/λ)σ₁].

    :param u: Значения поля
    :param u_x: Производная по x
    :param u_y: Производная по y
    :param lam: Спектральный параметр
    :return: Массивы 3 × ... для A и B
    """

    value = as_lambda(lam).value
    cos_u, sin_u = np.cos(u), np.sin(u)
    twist = u_x - 1j * u_y
    a = 0.25j * np.stack([-sin_u / value, -twist, value - cos_u / value])
    b = 0.25 * np.stack([-sin_u / value + 0j, twist, -(value + cos_u / value)])
    return a, b


def lax_connection(field: ShiftedField, point: Sequence[float], lam: Lambda) -> tuple[np.ndarray, np.ndarray]:
    """
    Матрицы A, B в точке области.

    :param field: Поле
    :param point: Точка (x, y)
    :param lam: Спектральный параметр
    :return:
    """

    u, u_x, u_y = field.evaluate(np.array([point[0]]), np.array([point[1]]))
    a, b = connection_components(u, u_x, u_y, lam)
    return from_components(a)[0], from_components(b)[0]


def compatibility_residual(field: ShiftedField, lam: Lambda) -> float:
    """
    Максимум нормы Фробениуса ∂ᵧA − ∂ₓB − [B, A] по внутренним узлам.

    Коммутатор считается в базисе Паули: [B, A] = 2i Σ (b × a)ₗ σₗ.

    :param field: Поле
    :param lam: Спектральный параметр
    :return:
    """

    a, b = connection_components(*field.grid_derivatives(), lam)
    step = field.spacing
    commutator = 2j * np.cross(b, a, axis=0)
    squared = np.zeros(field.values.shape)
    for component in range(3):
        residual = gradient4(a[component], step, 1) - gradient4(b[component], step, 0) - commutator[component]
        squared += np.abs(residual) ** 2
    # ‖Σ rₗσₗ‖_F = √2·|r|
    norm = np.sqrt(2 * squared)
    return float(norm[MARGIN:-MARGIN, MARGIN:-MARGIN].max())
