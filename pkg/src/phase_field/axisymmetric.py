"""
Осесимметричное решение на S² (критическая точка для p = 1), плоская гетероклиника и индекс Морса.
"""

import logging

import numpy as np
from scipy.linalg import eigvalsh_tridiagonal, solve_banded

from errors import InvalidInput, NewtonNoConverge, NotASolution
from logger import traced
from phase_field.energy import NORMALIZED, cell_weights, equation_defect, pde_residual
from phase_field.models import FieldState1D
from phase_field.potentials import HeteroclinicProfile
from settings import NEWTON_MAX_ITER

logger = logging.getLogger(__name__)

PROFILE = HeteroclinicProfile(kind="SineGordonNormalized")

NEWTON_TOL = 1e-11
INDEX_THRESHOLD = 1e-9


def latitude_grid(size: int) -> np.ndarray:
    return (np.arange(size) + 0.5) * np.pi / size


def equatorial_ansatz(eps: float, size: int) -> FieldState1D:
    """
    Начальное приближение h((θ − π/2)/ε).

    :param eps: Параметр ε
    :param size: Количество ячеек
    :return:
    """

    grid = latitude_grid(size)
    return FieldState1D(geometry="sphere", grid=grid, values=PROFILE.value((grid - np.pi / 2) / eps), eps=eps)


def flat_kink(eps: float, half_length: float, size: int) -> FieldState1D:
    """
    Точная гетероклиника h(x/ε) на ячейках отрезка [−L, L].

    :param eps: Параметр ε
    :param half_length: Полудлина отрезка
    :param size: Количество ячеек
    :return:
    """

    grid = -half_length + (np.arange(size) + 0.5) * 2 * half_length / size
    return FieldState1D(geometry="flat", grid=grid, values=PROFILE.value(grid / eps), eps=eps, half_length=half_length)


def _jacobian_bands(state: FieldState1D, values: np.ndarray) -> np.ndarray:
    faces, masses = cell_weights(state)
    scale = state.eps**2
    bands = np.zeros((3, values.size))
    bands[0, 1:] = scale * faces / masses[:-1]
    bands[2, :-1] = scale * faces / masses[1:]
    outflow = np.zeros_like(values)
    outflow[:-1] += faces
    outflow[1:] += faces
    bands[1] = -scale * outflow / masses - NORMALIZED.second(values)
    return bands


def newton_1d(state: FieldState1D, tol: float = NEWTON_TOL, max_iter: int = NEWTON_MAX_ITER) -> FieldState1D:
    """
    Демпфированный метод Ньютона с трехдиагональным якобианом.

    После каждого шага решение симметризуется u ← (u − u[::-1])/2, что сохраняет
    нечетность относительно середины сетки и убирает сдвиговую моду.

    :param state: Начальное приближение
    :param tol: Допуск на максимум невязки
    :param max_iter: Наибольшее число итераций
    :return:
    """

    values = state.values.copy()
    defect = equation_defect(state)
    norm = float(np.abs(defect).max())
    iterations = 0
    while norm >= tol:
        if iterations == max_iter:
            raise NewtonNoConverge("Latitude Newton did not converge", norm, {"eps": state.eps})
        step = solve_banded((1, 1), _jacobian_bands(state, values), -defect)
        damping = 1.0
        while True:
            trial = values + damping * step
            trial = np.clip(0.5 * (trial - trial[::-1]), -1.0, 1.0)
            trial_defect = equation_defect(state.with_values(trial))
            trial_norm = float(np.abs(trial_defect).max())
            if trial_norm < (1 - 1e-4 * damping) * norm or damping < 1e-4:
                break
            damping /= 2
        values, defect, norm = trial, trial_defect, trial_norm
        iterations += 1
        logger.debug("newton iteration %d: residual %.3e, damping %.3g", iterations, norm, damping)

    return state.with_values(values, residual=norm, iterations=iterations)


def morse_index(state: FieldState1D) -> int:
    """
    Количество отрицательных собственных чисел второй вариации ∫ ε|∇ζ|² + ε⁻¹W″(u)ζ²
    на сетке относительно массовой матрицы.

    :param state: Приближенное решение
    :return:
    """

    residual = pde_residual(state)
    if residual >= 1e-8:
        raise NotASolution("Morse index needs an approximate solution", {"residual": residual})

    faces, masses = cell_weights(state)
    stiffness = np.zeros_like(masses)
    stiffness[:-1] += faces
    stiffness[1:] += faces
    diagonal = (state.eps * stiffness + masses * NORMALIZED.second(state.values) / state.eps) / masses
    off_diagonal = -state.eps * faces / np.sqrt(masses[:-1] * masses[1:])
    eigenvalues = eigvalsh_tridiagonal(diagonal, off_diagonal)
    scale = float(np.abs(eigenvalues).max())
    return int(np.count_nonzero(eigenvalues < -INDEX_THRESHOLD * scale))


@traced("solve_axisymmetric")
def solve_axisymmetric(eps: float, size: int) -> FieldState1D:
    """
    Осесимметричное решение ε²(u″ + cot θ·u′) = W′(u) на S², нечетное относительно экватора.

    :param eps: Параметр ε из [0.005, 0.2]
    :param size: Количество ячеек по широте, не менее 1024
    :return:
    """

    if not 0.005 <= eps <= 0.2:
        raise InvalidInput("eps must lie in [0.005, 0.2]", {"eps": eps})
    if size < 1024:
        raise InvalidInput("at least 1024 latitude cells are required", {"size": size})

    solved = newton_1d(equatorial_ansatz(eps, size))
    index = morse_index(solved)
    if index != 1:
        logger.warning("IndexUnexpected: eps=%s has Morse index %d", eps, index)
    logger.info("eps=%s solved in %d iterations, residual %.2e", eps, solved.iterations, solved.residual)
    return solved.with_values(solved.values, residual=solved.residual, iterations=solved.iterations, index=index)


def solve_flat_kink(eps: float = 1.0, half_length: float = 10.0, size: int = 4096) -> FieldState1D:
    """
    Гетероклиника на отрезке с условием Неймана, уточненная методом Ньютона.

    :param eps: Параметр ε
    :param half_length: Полудлина отрезка
    :param size: Количество ячеек
    :return:
    """

    return newton_1d(flat_kink(eps, half_length, size))
