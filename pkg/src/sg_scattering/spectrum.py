"""
Связанные состояния {λ ∈ S¹ : Im λ > 0, a(λ) = 0} и направления ±R(λ).
"""

import logging
from typing import Sequence

import numpy as np
from scipy.optimize import minimize_scalar

from logger import traced
from sg_scattering.fields import ShiftedField
from sg_scattering.jost import check_field, jost_solve
from sg_scattering.models import CircleSample, ScatteringData, SpectralParam

logger = logging.getLogger(__name__)

BOUND_TOL = 1e-3
THETA_TOL = 1e-8
DUPLICATE_TOL = 1e-6
# грубые минимумы выше порога не уточняются
COARSE_TOL = 0.5


def circle_thetas(n_theta: int) -> np.ndarray:
    """
    Равномерная выборка θ ∈ (δ, π − δ), δ = π/(4·n_theta).

    :param n_theta: Количество точек
    :return:
    """

    margin = np.pi / (4 * n_theta)
    return np.linspace(margin, np.pi - margin, n_theta)


def a_on_circle(field: ShiftedField, theta: float, y0: float = 0.0) -> complex:
    return jost_solve(field, SpectralParam.on_circle(theta), y0, checked=True).a_value


def sample_circle(field: ShiftedField, thetas: Sequence[float], y0: float = 0.0) -> list[CircleSample]:
    check_field(field)
    return [CircleSample(theta=theta, a_value=a_on_circle(field, theta, y0)) for theta in thetas]


def refine_bound_states(
    field: ShiftedField, samples: Sequence[CircleSample], y0: float = 0.0, tol: float = BOUND_TOL
) -> ScatteringData:
    """
    Уточнение локальных минимумов |a| на окружности методом Брента на отрезке между
    соседними узлами; в связанные состояния попадают уточненные минимумы с |a| < tol.

    :param field: Поле
    :param samples: Выборка a(e^{iθ}) по возрастанию θ
    :param y0: Ордината прямых интегрирования
    :param tol: Порог для |a|
    :return:
    """

    thetas = np.array([item.theta for item in samples])
    moduli = np.array([abs(item.a_value) for item in samples])
    left = np.r_[np.inf, moduli[:-1]]
    right = np.r_[moduli[1:], np.inf]
    minima = (moduli <= left) & (moduli <= right) & ((moduli < left) | (moduli < right))
    candidates = np.flatnonzero(minima & (moduli < COARSE_TOL))

    found: list[float] = []
    for index in candidates:
        low = thetas[max(index - 1, 0)] if index > 0 else thetas[0] / 2
        high = thetas[index + 1] if index + 1 < len(samples) else (thetas[-1] + np.pi) / 2
        result = minimize_scalar(
            lambda theta: abs(a_on_circle(field, theta, y0)),
            bounds=(low, high),
            method="bounded",
            options={"xatol": THETA_TOL},
        )
        logger.debug("minimum of |a| near theta=%.6f: %.3e", result.x, result.fun)
        if result.fun < tol and all(abs(result.x - theta) > DUPLICATE_TOL for theta in found):
            found.append(float(result.x))

    bound_states = [complex(np.cos(theta), np.sin(theta)) for theta in sorted(found)]
    directions: list[tuple[float, float]] = []
    for value in bound_states:
        x, y = SpectralParam(value=value).direction()
        directions.extend([(x, y), (-x, -y)])
    return ScatteringData(circle_samples=list(samples), bound_states=bound_states, directions=directions)


@traced("bound_states")
def bound_states(field: ShiftedField, n_theta: int, y0: float = 0.0) -> ScatteringData:
    """
    Выборка a(e^{iθ}) и связанные состояния поля.

    :param field: Поле
    :param n_theta: Количество точек выборки
    :param y0: Ордината прямых интегрирования
    :return:
    """

    return refine_bound_states(field, sample_circle(field, circle_thetas(n_theta), y0), y0)
