"""
Оператор Якоби сети: аналитическая сборка по полям Якоби вдоль отрезков
и разностная сборка по массе в калиброванных координатах.
"""

import logging
from typing import Callable, Literal

import numpy as np
from scipy.integrate import solve_ivp
from scipy.interpolate import CubicSpline

from errors import AssemblyMismatch, IntegratorBlowup, InvalidInput, NotStationary
from geodesic_nets.embedding import NetEmbedding, in_plane_normal
from geodesic_nets.models import JacobiOperator
from geodesic_nets.stationarity import stationarity_residual
from settings import KERNEL_TOL
from surface_geometry.base import BaseSurface
from surface_geometry.geodesics import geodesic_between
from surface_geometry.models import GeodesicSegment

logger = logging.getLogger(__name__)

HessianMethod = Literal["gradient", "mass"]

# порог невязки, начиная с которого сеть считается стационарной
STATIONARY_TOL = 1e-8
# допуск на расхождение аналитической и разностной сборок
ASSEMBLY_TOL = 1e-6
# шаги разностных схем
GRADIENT_DIFF_STEP = 1e-4
MASS_DIFF_STEP = 1e-3


def jacobi_fundamental(surface: BaseSurface, segment: GeodesicSegment) -> np.ndarray:
    """
    Значения в конце отрезка фундаментальных решений f″ + K f = 0.

    y₁(0) = 1, y₁′(0) = 0 и y₂(0) = 0, y₂′(0) = 1; кривизна вдоль отрезка
    восстанавливается кубическим сплайном по выборке.

    :param surface: Поверхность
    :param segment: Геодезический отрезок
    :return: (y₁(ℓ), y₁′(ℓ), y₂(ℓ), y₂′(ℓ))
    """

    curvature = CubicSpline(
        segment.arclengths, np.array([surface.gaussian_curvature(point) for point in segment.samples])
    )

    def rhs(time: float, state: np.ndarray) -> np.ndarray:
        gauss = float(curvature(time))
        return np.array([state[1], -gauss * state[0], state[3], -gauss * state[2]])

    solution = solve_ivp(
        rhs, (0.0, segment.length), np.array([1.0, 0.0, 0.0, 1.0]), method="DOP853", rtol=1e-12, atol=1e-14
    )
    if not solution.success:
        raise IntegratorBlowup("Jacobi equation integration failed", {"message": solution.message})
    return solution.y[:, -1]


def edge_hessian(surface: BaseSurface, segment: GeodesicSegment) -> np.ndarray:
    """
    Вторая вариация длины отрезка по нормальным сдвигам концов (α, β).

    Равна [f f′]₀^ℓ для поля Якоби с f(0) = α, f(ℓ) = β; на единичной сфере
    это [[cot ℓ, −1/sin ℓ], [−1/sin ℓ, cot ℓ]].

    :param surface: Поверхность
    :param segment: Геодезический отрезок
    :return: Матрица 2 × 2
    """

    first, first_slope, second, second_slope = jacobi_fundamental(surface, segment)
    if second <= 0:
        raise InvalidInput("segment reaches a conjugate point", {"length": segment.length})
    return np.array([[first / second, -1.0 / second], [-1.0 / second, second_slope / second]])


def assemble_jacobi(embedding: NetEmbedding) -> np.ndarray:
    """
    Аналитическая матрица Σ ω Pᵀ H P, где P переводит калиброванные координаты
    концов ребра в нормальные сдвиги.

    :param embedding: Вложение
    :return:
    """

    surface = embedding.surface
    offsets = embedding.offsets()
    matrix = np.zeros((embedding.dimension, embedding.dimension))
    for (u, v), segment, weight in zip(embedding.graph.edges, embedding.segments, embedding.graph.weights()):
        start_normal = in_plane_normal(surface, segment.start, segment.start_tangent)
        end_normal = in_plane_normal(surface, segment.end, -segment.end_tangent)
        rows = np.zeros((2, embedding.dimension))
        rows[0, offsets[u]] = embedding.basis(u) @ start_normal
        rows[1, offsets[v]] = embedding.basis(v) @ end_normal
        matrix += weight * rows.T @ edge_hessian(surface, segment) @ rows
    return 0.5 * (matrix + matrix.T)


def _edge_length_and_gradient(
    embedding: NetEmbedding, u: int, v: int, coords: np.ndarray, split: int
) -> tuple[float, np.ndarray]:
    start, start_columns = embedding.vertex_chart(u, coords[:split])
    end, end_columns = embedding.vertex_chart(v, coords[split:])
    segment = geodesic_between(embedding.surface, start, end)
    gradient = np.concatenate([-segment.start_tangent @ start_columns, -segment.end_tangent @ end_columns])
    return segment.length, gradient


def _richardson(estimate: Callable[[float], np.ndarray], step: float) -> np.ndarray:
    return (4 * estimate(step / 2) - estimate(step)) / 3


def _edge_block(embedding: NetEmbedding, u: int, v: int, method: HessianMethod, step: float) -> np.ndarray:
    split = embedding.basis(u).shape[0]
    size = split + embedding.basis(v).shape[0]
    identity = np.eye(size)

    def length(coords: np.ndarray) -> float:
        return _edge_length_and_gradient(embedding, u, v, coords, split)[0]

    def gradient(coords: np.ndarray) -> np.ndarray:
        return _edge_length_and_gradient(embedding, u, v, coords, split)[1]

    def by_gradient(width: float) -> np.ndarray:
        columns = [(gradient(width * axis) - gradient(-width * axis)) / (2 * width) for axis in identity]
        return np.column_stack(columns) if columns else np.zeros((0, 0))

    def by_mass(width: float) -> np.ndarray:
        block = np.zeros((size, size))
        centre = length(np.zeros(size))
        for i in range(size):
            block[i, i] = (length(width * identity[i]) - 2 * centre + length(-width * identity[i])) / width**2
            for j in range(i + 1, size):
                value = (
                    length(width * (identity[i] + identity[j]))
                    - length(width * (identity[i] - identity[j]))
                    - length(width * (identity[j] - identity[i]))
                    + length(-width * (identity[i] + identity[j]))
                ) / (4 * width**2)
                block[i, j] = block[j, i] = value
        return block

    block = _richardson(by_gradient if method == "gradient" else by_mass, step)
    return 0.5 * (block + block.T)


def numeric_hessian(embedding: NetEmbedding, method: HessianMethod = "gradient", step: float = 0.0) -> np.ndarray:
    """
    Разностная матрица вторых производных массы в калиброванных координатах.

    Собирается по ребрам: ``gradient`` дифференцирует точную первую вариацию длины,
    ``mass`` берет вторые разности самой длины. Обе схемы уточняются по Ричардсону.

    :param embedding: Вложение
    :param method: Схема
    :param step: Шаг (0 означает шаг по умолчанию для схемы)
    :return:
    """

    if method not in ("gradient", "mass"):
        raise InvalidInput("unknown difference scheme", {"method": method})
    step = step or (GRADIENT_DIFF_STEP if method == "gradient" else MASS_DIFF_STEP)
    offsets = embedding.offsets()
    matrix = np.zeros((embedding.dimension, embedding.dimension))
    for (u, v), weight in zip(embedding.graph.edges, embedding.graph.weights()):
        block = _edge_block(embedding, u, v, method, step)
        indices = np.r_[offsets[u], offsets[v]]
        matrix[np.ix_(indices, indices)] += weight * block
    return matrix


def jacobi_operator(
    embedding: NetEmbedding,
    verify: bool = True,
    method: HessianMethod = "gradient",
    tol: float = ASSEMBLY_TOL,
    kernel_tol: float = KERNEL_TOL,
) -> JacobiOperator:
    """
    Оператор Якоби стационарной сети с проверкой по разностной сборке.

    :param embedding: Стационарное вложение
    :param verify: Сравнивать ли с разностной сборкой
    :param method: Разностная схема проверки
    :param tol: Допуск на расхождение сборок
    :param kernel_tol: Относительный порог ядра
    :return:
    """

    residual = stationarity_residual(embedding).max_norm
    if residual >= STATIONARY_TOL:
        raise NotStationary("net is not stationary", {"residual": residual})

    matrix = assemble_jacobi(embedding)
    deviation = 0.0
    if verify:
        deviation = float(np.max(np.abs(matrix - numeric_hessian(embedding, method)), initial=0.0))
        logger.debug("Jacobi assembly deviation %.3e (%s)", deviation, method)
        if deviation >= tol:
            raise AssemblyMismatch("analytic and finite-difference assemblies disagree", {"deviation": deviation})
    return JacobiOperator(matrix=matrix, dofs=embedding.dofs, kernel_tol=kernel_tol, deviation=deviation)


def kernel_dimension(operator: JacobiOperator) -> int:
    """
    Количество собственных значений, меньших kernel_tol·(спектральный радиус) по модулю.

    :param operator: Оператор Якоби
    :return:
    """

    if operator.matrix.size == 0:
        return 0
    eigenvalues = np.abs(np.linalg.eigvalsh(operator.matrix))
    radius = float(eigenvalues.max())
    if radius == 0.0:
        return int(eigenvalues.size)
    return int(np.count_nonzero(eigenvalues < operator.kernel_tol * radius))
