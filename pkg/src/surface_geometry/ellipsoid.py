"""
Главные геодезические эллипсоида и подбор метрики с заданными длинами.

Эллипсоид задается коэффициентами: E(a₁, a₂, a₃) = {Σ aᵢxᵢ² = 1}, γᵢ = E ∩ {xᵢ = 0}.
"""

import logging
from typing import Callable

import numpy as np
from scipy.integrate import quad, solve_ivp

from errors import InvalidInput, NewtonNoConverge, UnsupportedRegime
from logger import traced
from settings import NEWTON_MAX_ITER
from surface_geometry.models import PrincipalLengths, TunedEllipsoid
from surface_geometry.surfaces import ELLIPSOID_RANGE

logger = logging.getLogger(__name__)


def _check_regime(coefficients: np.ndarray) -> None:
    low, high = ELLIPSOID_RANGE
    if np.any(coefficients < low) or np.any(coefficients > high):
        raise UnsupportedRegime(
            "Ellipsoid coefficients must lie in [0.5, 2]", {"coefficients": coefficients.tolist()}
        )


def _plane_axes(index: int) -> tuple[int, int]:
    first, second = (axis for axis in range(3) if axis != index)
    return first, second


def ellipse_perimeter(semi_a: float, semi_b: float) -> float:
    """
    Периметр эллипса с полуосями ``semi_a`` и ``semi_b`` адаптивной квадратурой.

    :param semi_a: Первая полуось
    :param semi_b: Вторая полуось
    :return:
    """

    value, _ = quad(
        lambda t: np.sqrt((semi_a * np.sin(t)) ** 2 + (semi_b * np.cos(t)) ** 2),
        0.0,
        np.pi / 2,
        epsabs=0.0,
        epsrel=1e-13,
        limit=200,
    )
    return 4.0 * value


def principal_geodesic_lengths(a1: float, a2: float, a3: float) -> PrincipalLengths:
    """
    Вектор длин ℓ⃗ = (length γ₁, length γ₂, length γ₃).

    :param a1: Коэффициент при x₁²
    :param a2: Коэффициент при x₂²
    :param a3: Коэффициент при x₃²
    :return:
    """

    coefficients = np.array([a1, a2, a3], dtype=float)
    _check_regime(coefficients)
    semi_axes = coefficients**-0.5
    lengths = []
    for index in range(3):
        first, second = _plane_axes(index)
        lengths.append(ellipse_perimeter(semi_axes[first], semi_axes[second]))
    return PrincipalLengths(ell=tuple(lengths))


def _central_jacobian(func: Callable[[np.ndarray], np.ndarray], point: np.ndarray, step: float) -> np.ndarray:
    jacobian = np.empty((3, 3))
    for column in range(3):
        shift = np.zeros(3)
        shift[column] = step
        jacobian[:, column] = (func(point + shift) - func(point - shift)) / (2 * step)
    return jacobian


def length_jacobian(coefficients: np.ndarray, step: float = 1e-5) -> np.ndarray:
    """
    Центральная разностная матрица Якоби ℓ⃗ по коэффициентам (a₁, a₂, a₃).

    В точке (1, 1, 1) равна −(π/2)(𝟙 − I).

    :param coefficients: Коэффициенты эллипсоида
    :param step: Шаг дифференцирования
    :return:
    """

    return _central_jacobian(
        lambda point: principal_geodesic_lengths(*point).as_array(), np.asarray(coefficients, dtype=float), step
    )


def semi_axis_length_jacobian(semi_axes: np.ndarray, step: float = 1e-5) -> np.ndarray:
    """
    Центральная разностная матрица Якоби ℓ⃗ по полуосям bᵢ = aᵢ^(−1/2).

    В точке (1, 1, 1) равна π(𝟙 − I).

    :param semi_axes: Полуоси эллипсоида
    :param step: Шаг дифференцирования
    :return:
    """

    return _central_jacobian(
        lambda point: principal_geodesic_lengths(*(point**-2.0)).as_array(), np.asarray(semi_axes, dtype=float), step
    )


@traced("tune_ellipsoid")
def tune_ellipsoid(mu: float, tol: float = 1e-10) -> TunedEllipsoid:
    """
    Подбор коэффициентов, при которых ℓ⃗ = (2π, 2π + μ, 2π + 2μ).

    Демпфированный метод Ньютона из (1, 1, 1) с разностной матрицей Якоби и
    дроблением шага по норме невязки.

    :param mu: Приращение длин, 0 ≤ μ ≤ 0.1
    :param tol: Допуск на невязку длин в норме max
    :return:
    """

    if not 0.0 <= mu <= 0.1:
        raise InvalidInput("mu must lie in [0, 0.1]", {"mu": mu})

    target = 2 * np.pi + mu * np.arange(3)
    coefficients = np.ones(3)

    def residual_at(point: np.ndarray) -> np.ndarray:
        return principal_geodesic_lengths(*point).as_array() - target

    residual = residual_at(coefficients)
    norm = float(np.max(np.abs(residual)))
    iterations = 0
    while norm >= tol:
        if iterations >= NEWTON_MAX_ITER:
            raise NewtonNoConverge("Ellipsoid tuning did not converge", norm)
        step = np.linalg.solve(length_jacobian(coefficients, step=1e-6), -residual)
        damping = 1.0
        while True:
            candidate = coefficients + damping * step
            candidate_residual = residual_at(candidate)
            candidate_norm = float(np.max(np.abs(candidate_residual)))
            if candidate_norm < norm or damping < 1e-4:
                break
            damping *= 0.5
        coefficients, residual, norm = candidate, candidate_residual, candidate_norm
        iterations += 1
        logger.debug("Tuning iteration %d: residual %.3e, damping %.3g", iterations, norm, damping)

    logger.info("Tuned ellipsoid for mu=%g: %s (residual %.2e)", mu, coefficients, norm)
    return TunedEllipsoid(
        mu=mu,
        coefficients=tuple(float(item) for item in coefficients),
        lengths=principal_geodesic_lengths(*coefficients),
        residual=norm,
        iterations=iterations,
    )


def closed_geodesic_monodromy(coefficients: np.ndarray, index: int) -> np.ndarray:
    """
    Матрица монодромии уравнения Якоби J″ + K·J = 0 вдоль γ_index за один оборот.

    Нетривиальное периодическое нормальное поле Якоби существует, только если
    след монодромии равен 2.

    :param coefficients: Коэффициенты эллипсоида
    :param index: Номер главной геодезической (0, 1, 2)
    :return: Матрица 2 × 2 (столбцы: решения с данными (1, 0) и (0, 1))
    """

    coefficients = np.asarray(coefficients, dtype=float)
    _check_regime(coefficients)
    first, second = _plane_axes(index)
    semi_axes = coefficients**-0.5
    length = ellipse_perimeter(semi_axes[first], semi_axes[second])

    def curvature(angle: float) -> float:
        point = np.zeros(3)
        point[first] = semi_axes[first] * np.cos(angle)
        point[second] = semi_axes[second] * np.sin(angle)
        scaled = coefficients * point
        return float(np.prod(coefficients) / (scaled @ scaled) ** 2)

    def rhs(_: float, state: np.ndarray) -> np.ndarray:
        angle = state[0]
        speed = np.hypot(semi_axes[first] * np.sin(angle), semi_axes[second] * np.cos(angle))
        gauss = curvature(angle)
        return np.array([1.0 / speed, state[2], -gauss * state[1], state[4], -gauss * state[3]])

    initial = np.array([0.0, 1.0, 0.0, 0.0, 1.0])
    solution = solve_ivp(rhs, (0.0, length), initial, method="DOP853", rtol=1e-12, atol=1e-14)
    final = solution.y[:, -1]
    return np.array([[final[1], final[3]], [final[2], final[4]]])
