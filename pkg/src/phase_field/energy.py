"""
Энергия фазового перехода, невязка уравнения ε²Δu = W′(u) и масса варифолда.

Одномерные операторы консервативные: потоки через грани ячеек с весами
aᵢ₊½ = 2π sin θᵢ₊½ / h и массы ячеек mᵢ = 2π(cos θᵢ₋½ − cos θᵢ₊½) на сфере
(a = 1/h, m = h на отрезке). Поток через полюс равен нулю, что заменяет
регуляризацию 2u″ в полюсах и условие Неймана на концах отрезка.
"""

from functools import lru_cache
from typing import Union

import numpy as np
from scipy import sparse

from phase_field.models import FieldState1D, FieldState2D
from phase_field.potentials import Potential, PotentialKind, h0

FieldState = Union[FieldState1D, FieldState2D]

NORMALIZED = Potential(kind="SineGordonNormalized")


def cell_weights(state: FieldState1D) -> tuple[np.ndarray, np.ndarray]:
    """
    Веса граней и массы ячеек одномерной сетки.

    :param state: Состояние
    :return: (a, m) длины N − 1 и N
    """

    size, step = state.grid.size, state.spacing
    if state.geometry == "flat":
        return np.full(size - 1, 1.0 / step), np.full(size, step)
    faces = np.arange(size + 1) * step
    faces[-1] = np.pi
    return 2 * np.pi * np.sin(faces[1:-1]) / step, 2 * np.pi * (np.cos(faces[:-1]) - np.cos(faces[1:]))


def laplacian_1d(values: np.ndarray, faces: np.ndarray, masses: np.ndarray) -> np.ndarray:
    flux = faces * np.diff(values)
    divergence = np.zeros_like(values)
    divergence[:-1] += flux
    divergence[1:] -= flux
    return divergence / masses


def stencil_1d(size: int, step: float, order: int) -> sparse.csr_matrix:
    """
    Одномерная вторая производная по узлам с нулевыми строками в граничных узлах.

    Четвертый порядок (−1, 16, −30, 16, −1)/12h² с переходом на (1, −2, 1)/h² рядом с границей.

    :param size: Количество узлов
    :param step: Шаг сетки
    :param order: Порядок, 2 или 4
    :return:
    """

    matrix = sparse.lil_matrix((size, size))
    for row in range(1, size - 1):
        if order == 4 and 2 <= row <= size - 3:
            for offset, weight in zip(range(-2, 3), (-1.0, 16.0, -30.0, 16.0, -1.0)):
                matrix[row, row + offset] = weight / (12 * step**2)
        else:
            for offset, weight in zip(range(-1, 2), (1.0, -2.0, 1.0)):
                matrix[row, row + offset] = weight / step**2
    return matrix.tocsr()


def laplacian_2d(size: int, step: float, order: int) -> sparse.csr_matrix:
    """
    Лапласиан на сетке n × n (порядок ``ij`` при разворачивании), строки граничных узлов нулевые.

    :param size: Количество узлов по стороне
    :param step: Шаг сетки
    :param order: Порядок, 2 или 4
    :return:
    """

    second = stencil_1d(size, step, order)
    identity = sparse.identity(size, format="csr")
    interior = sparse.diags(np.r_[0.0, np.ones(size - 2), 0.0])
    # строки кронекеровых произведений обнуляются в узлах, граничных по другой оси
    return (sparse.kron(second, interior) + sparse.kron(interior, second)).tocsr()


def equation_defect(state: FieldState) -> np.ndarray:
    """
    Поточечная невязка ε²Δu − W′(u) во всех узлах (в граничных узлах 2D-сетки равна нулю).

    :param state: Состояние
    :return:
    """

    if isinstance(state, FieldState1D):
        faces, masses = cell_weights(state)
        return state.eps**2 * laplacian_1d(state.values, faces, masses) - NORMALIZED.first(state.values)

    potential = Potential(kind=state.kind)
    laplacian = laplacian_2d(state.size, state.spacing, state.order) @ state.values.ravel()
    defect = (state.eps**2 * laplacian).reshape(state.values.shape) - potential.first(state.values)
    defect[state.boundary] = 0.0
    return defect


def pde_residual(state: FieldState, collar: float = 0.0) -> float:
    """
    Максимум модуля невязки по внутренним узлам.

    Для отрезка исключаются две крайние ячейки (условие Неймана на концах обрезанной
    области), для квадрата исключается полоса ширины ``collar`` у границы.

    :param state: Состояние
    :param collar: Ширина исключаемой полосы у границы квадрата
    :return:
    """

    defect = np.abs(equation_defect(state))
    if isinstance(state, FieldState1D):
        return float(defect[1:-1].max() if state.geometry == "flat" else defect.max())

    x, y = state.mesh()
    inner = state.half_width - collar
    mask = (np.abs(x) < inner - 1e-12) & (np.abs(y) < inner - 1e-12) & ~state.boundary
    return float(defect[mask].max()) if mask.any() else 0.0


def energy_split(state: FieldState) -> tuple[float, float]:
    """
    Градиентная ∫(ε/2)|∇u|² и потенциальная ∫ε⁻¹W(u) части энергии.

    :param state: Состояние
    :return:
    """

    eps = state.eps
    if isinstance(state, FieldState1D):
        faces, masses = cell_weights(state)
        gradient = 0.5 * eps * np.sum(faces * np.diff(state.values) ** 2)
        return float(gradient), float(np.sum(masses * NORMALIZED.value(state.values)) / eps)

    values, step = state.values, state.spacing
    potential = Potential(kind=state.kind)
    trapezoid = np.ones(state.size)
    trapezoid[[0, -1]] = 0.5
    # разности вдоль одной оси взвешены по формуле трапеций вдоль другой
    gradient = 0.5 * eps * (
        np.sum(np.diff(values, axis=0) ** 2 * trapezoid[None, :])
        + np.sum(np.diff(values, axis=1) ** 2 * trapezoid[:, None])
    )
    bulk = np.sum(np.outer(trapezoid, trapezoid) * potential.value(values)) * step**2 / eps
    return float(gradient), float(bulk)


def energy(state: FieldState) -> float:
    """
    Энергия фазового перехода E_ε[u] = ∫ (ε/2)|∇u|² + ε⁻¹W(u).

    :param state: Состояние
    :return:
    """

    return float(sum(energy_split(state)))


@lru_cache(maxsize=2)
def cached_h0(kind: PotentialKind) -> float:
    return h0(kind)


def varifold_mass(state: FieldState) -> float:
    """
    Масса варифолда h₀⁻¹·E_ε[u].

    :param state: Состояние
    :return:
    """

    kind = state.kind if isinstance(state, FieldState2D) else "SineGordonNormalized"
    return energy(state) / cached_h0(kind)
