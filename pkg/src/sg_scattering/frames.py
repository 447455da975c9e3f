"""
Параллельные реперы: тривиальный Φ₀ и гетероклинический Φ_h, проверка параллельности.
"""

from typing import Callable, Optional

import numpy as np

from errors import LambdaAtPole
from sg_scattering.fields import ShiftedField
from sg_scattering.lax import Lambda, as_lambda, lax_connection
from sg_scattering.pauli import IDENTITY, SIGMA_1, SIGMA_3

Frame = Callable[[float, float, Lambda], np.ndarray]

POLE_TOL = 1e-14


def frame_trivial(x: float, y: float, lam: Lambda) -> np.ndarray:
    """
    Φ₀ = diag(e^{(i/4)Kx − (1/4)Jy}, e^{−(i/4)Kx + (1/4)Jy}), Φ₀(0, 0) = Id.

    :param x: Абсцисса
    :param y: Ордината
    :param lam: Спектральный параметр
    :return:
    """

    param = as_lambda(lam)
    phase = 0.25j * param.k * x - 0.25 * param.j * y
    return np.diag([np.exp(phase), np.exp(-phase)])


def frame_heteroclinic(x: float, y: float, lam: Lambda) -> np.ndarray:
    """
    Φ_h = Φ₀ + (i/(λ + i))·(tanh x·σ₃ − sech x·σ₁ − Id)·Φ₀, det Φ_h = (λ − i)/(λ + i).

    :param x: Абсцисса
    :param y: Ордината
    :param lam: Спектральный параметр, λ ≠ −i
    :return:
    """

    param = as_lambda(lam)
    if abs(param.value + 1j) < POLE_TOL:
        raise LambdaAtPole("heteroclinic frame has a pole at lambda = -i", {"lambda": str(param.value)})
    trivial = frame_trivial(x, y, param)
    correction = np.tanh(x) * SIGMA_3 - SIGMA_1 / np.cosh(x) - IDENTITY
    return trivial + (1j / (param.value + 1j)) * correction @ trivial


def parallel_residual(
    field: ShiftedField, frame: Frame, lam: Lambda, points: Optional[np.ndarray] = None, step: float = 1e-3
) -> float:
    """
    Максимум относительной невязки ∂ₓΦ − AΦ, ∂ᵧΦ − BΦ по точкам; производные репера
    центральными разностями четвертого порядка.

    :param field: Поле
    :param frame: Репер (x, y, λ) → 2 × 2
    :param lam: Спектральный параметр
    :param points: Точки проверки, по умолчанию сетка 5 × 5 на [−5, 5]²
    :param step: Шаг разностей
    :return:
    """

    if points is None:
        axis = np.linspace(-5.0, 5.0, 5)
        points = np.array([(x, y) for x in axis for y in axis])

    def derivative(x: float, y: float, dx: float, dy: float) -> np.ndarray:
        values = [frame(x + k * dx, y + k * dy, lam) for k in (-2, -1, 1, 2)]
        return (values[0] - 8 * values[1] + 8 * values[2] - values[3]) / (12 * step)

    worst = 0.0
    for x, y in points:
        a, b = lax_connection(field, (x, y), lam)
        value = frame(x, y, lam)
        scale = max(1.0, float(np.abs(value).max()))
        defect_x = derivative(x, y, step, 0.0) - a @ value
        defect_y = derivative(x, y, 0.0, step) - b @ value
        worst = max(worst, float(np.abs(defect_x).max()) / scale, float(np.abs(defect_y).max()) / scale)
    return worst
