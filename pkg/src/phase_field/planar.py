"""
Склеенные гетероклиники на квадрате [−L, L]² и их релаксация методом Ньютона.
"""

import logging
from typing import Optional, Sequence

import numpy as np
from scipy import sparse
from scipy.sparse.linalg import spsolve

from errors import EndsLost, InvalidInput, NewtonNoConverge
from logger import traced
from phase_field.energy import equation_defect, laplacian_2d
from phase_field.models import FieldState2D
from phase_field.potentials import HeteroclinicProfile, Potential
from settings import NEWTON_MAX_ITER

logger = logging.getLogger(__name__)

PLANAR_TOL = 1e-10
LOCALIZATION_TOL = 1e-3


def normalize_directions(directions: Sequence[Sequence[float]]) -> np.ndarray:
    """
    Единичные направления, упорядоченные по углу из [0, 2π).

    :param directions: Направления концов
    :return: Массив 2m × 2
    """

    vectors = np.asarray(directions, dtype=float).reshape(-1, 2)
    norms = np.linalg.norm(vectors, axis=1)
    if np.any(norms == 0):
        raise InvalidInput("directions must be nonzero", {"directions": vectors.tolist()})
    vectors = vectors / norms[:, None]
    if vectors.shape[0] not in (2, 4, 6):
        raise InvalidInput("2m directions with m in {1, 2, 3} are required", {"count": vectors.shape[0]})

    angles = np.mod(np.arctan2(vectors[:, 1], vectors[:, 0]), 2 * np.pi)
    order = np.argsort(angles)
    gaps = np.diff(np.r_[angles[order], angles[order][0] + 2 * np.pi])
    if gaps.min() < 1e-6:
        raise InvalidInput("directions must be distinct", {"directions": vectors.tolist()})
    return vectors[order]


def distance_to_rays(x: np.ndarray, y: np.ndarray, directions: np.ndarray) -> np.ndarray:
    """
    Расстояние d до объединения лучей {t·v : t ≥ 0}.

    :param x: Абсциссы
    :param y: Ординаты
    :param directions: Единичные направления лучей
    :return:
    """

    result = np.full(np.shape(x), np.inf)
    for vx, vy in directions:
        along = x * vx + y * vy
        across = np.abs(x * vy - y * vx)
        result = np.minimum(result, np.where(along >= 0, across, np.hypot(x, y)))
    return result


def glued_ansatz(
    directions: Sequence[Sequence[float]], half_width: float, eps: float, size: int, order: int = 4
) -> FieldState2D:
    """
    Склейка гетероклиник: в секторе k между соседними лучами (по возрастанию угла от 0)
    ũ = (−1)^(k+1)·|h(d/ε)|, значения обрезаны до отрезка между ямами.

    :param directions: Направления концов, 2m штук
    :param half_width: Полуширина квадрата L
    :param eps: Параметр ε
    :param size: Количество узлов по стороне
    :param order: Порядок разностного лапласиана
    :return:
    """

    rays = normalize_directions(directions)
    axis = np.linspace(-half_width, half_width, size)
    x, y = np.meshgrid(axis, axis, indexing="ij")

    ray_angles = np.mod(np.arctan2(rays[:, 1], rays[:, 0]), 2 * np.pi)
    angles = np.mod(np.arctan2(y, x), 2 * np.pi)
    sector = np.mod(np.searchsorted(ray_angles, angles, side="right") - 1, rays.shape[0])
    signs = np.where(sector % 2 == 0, -1.0, 1.0)

    profile = HeteroclinicProfile(kind="SineGordonNormalized")
    values = np.clip(signs * np.abs(profile.value(distance_to_rays(x, y, rays) / eps)), -1.0, 1.0)
    return FieldState2D(half_width=half_width, values=values, eps=eps, order=order)


def crossing_half_angle(rays: np.ndarray) -> Optional[float]:
    """
    Половина угла α сектора между первыми двумя лучами, если четыре луча лежат на двух
    пересекающихся прямых; иначе None.

    :param rays: Упорядоченные по углу единичные направления
    :return:
    """

    if rays.shape[0] != 4 or not np.allclose(rays[2:], -rays[:2], atol=1e-9):
        return None
    return float(np.arccos(np.clip(rays[0] @ rays[1], -1.0, 1.0)) / 2)


def crossing_ansatz(
    directions: Sequence[Sequence[float]], half_width: float, eps: float, size: int, order: int = 4
) -> FieldState2D:
    """
    Решение с четырьмя концами вдоль двух пересекающихся прямых:
    ũ = (2/π)·arcsin(th r), r = ln tg α + ln ch(x′ cos α/ε) − ln ch(y′ sin α/ε),
    где ось y′ делит пополам сектор между первыми двумя лучами.

    Знаки секторов совпадают с :func:`glued_ansatz`. Противоположные концы параллельны,
    но сдвинуты на ε·|ln tg α| от прямых через начало координат.

    :param directions: Направления концов, две антиподальные пары
    :param half_width: Полуширина квадрата L
    :param eps: Параметр ε
    :param size: Количество узлов по стороне
    :param order: Порядок разностного лапласиана
    :return:
    """

    rays = normalize_directions(directions)
    alpha = crossing_half_angle(rays)
    if alpha is None:
        raise InvalidInput("two antipodal pairs of directions are required", {"directions": rays.tolist()})

    bisector = np.arctan2(rays[0, 1] + rays[1, 1], rays[0, 0] + rays[1, 0])
    turn_x, turn_y = np.sin(bisector), -np.cos(bisector)
    axis = np.linspace(-half_width, half_width, size)
    x, y = np.meshgrid(axis, axis, indexing="ij")
    along = (turn_x * x + turn_y * y) * np.cos(alpha) / eps
    across = (-turn_y * x + turn_x * y) * np.sin(alpha) / eps

    # логарифмы гиперболических косинусов без переполнения
    ratio = np.log(np.tan(alpha)) + np.logaddexp(along, -along) - np.logaddexp(across, -across)
    values = 2 / np.pi * np.arcsin(np.tanh(ratio))
    return FieldState2D(half_width=half_width, values=values, eps=eps, order=order)


def _interior_system(state: FieldState2D) -> tuple[sparse.csr_matrix, np.ndarray]:
    laplacian = laplacian_2d(state.size, state.spacing, state.order)
    interior = np.flatnonzero(~state.boundary.ravel())
    return laplacian[interior][:, interior].tocsc(), interior


def newton_2d(state: FieldState2D, tol: float = PLANAR_TOL, max_iter: int = NEWTON_MAX_ITER) -> FieldState2D:
    """
    Демпфированный метод Ньютона с разреженным прямым решателем; граничные значения
    не меняются.

    :param state: Начальное приближение
    :param tol: Допуск на максимум невязки
    :param max_iter: Наибольшее число итераций
    :return:
    """

    potential = Potential(kind=state.kind)
    block, interior = _interior_system(state)
    scaled = state.eps**2 * block

    values = state.values.ravel().copy()
    defect = equation_defect(state).ravel()[interior]
    norm = float(np.abs(defect).max())
    iterations = 0
    while norm >= tol:
        if iterations == max_iter:
            raise NewtonNoConverge("Planar Newton did not converge", norm, {"eps": state.eps, "size": state.size})
        jacobian = scaled - sparse.diags(potential.second(values[interior]), format="csc")
        step = spsolve(jacobian, -defect)
        damping = 1.0
        while True:
            trial = values.copy()
            trial[interior] += damping * step
            candidate = state.copy(update={"values": trial.reshape(state.values.shape)})
            trial_defect = equation_defect(candidate).ravel()[interior]
            trial_norm = float(np.abs(trial_defect).max())
            if trial_norm < (1 - 1e-4 * damping) * norm or damping < 1e-4:
                break
            damping /= 2
        values, defect, norm = trial, trial_defect, trial_norm
        iterations += 1
        logger.debug("planar newton iteration %d: residual %.3e, damping %.3g", iterations, norm, damping)

    return FieldState2D(
        half_width=state.half_width,
        values=values.reshape(state.values.shape),
        eps=state.eps,
        kind=state.kind,
        order=state.order,
        residual=norm,
        iterations=iterations,
    )


@traced("relax_glued_kinks")
def relax_glued_kinks(
    directions: Sequence[Sequence[float]], half_width: float, eps: float, size: int, order: int = 4
) -> FieldState2D:
    """
    Релаксация склеенных гетероклиник с граничными значениями, замороженными по начальному приближению.

    Для двух пересекающихся прямых начальным приближением служит :func:`crossing_ansatz`,
    иначе :func:`glued_ansatz`. Результат проверяется на локализацию вдали от заявленных лучей.

    :param directions: Направления концов, 2m штук, m ∈ {1, 2, 3}
    :param half_width: Полуширина квадрата L (L/ε ≥ 20)
    :param eps: Параметр ε
    :param size: Количество узлов по стороне
    :param order: Порядок разностного лапласиана, 2 или 4
    :return:
    :raises EndsLost: Поле не локализовано вдоль заявленных концов
    """

    if half_width / eps < 20:
        raise InvalidInput("L/eps must be at least 20", {"L": half_width, "eps": eps})
    if order not in (2, 4):
        raise InvalidInput("stencil order must be 2 or 4", {"order": order})

    if crossing_half_angle(normalize_directions(directions)) is None:
        initial = glued_ansatz(directions, half_width, eps, size, order)
    else:
        initial = crossing_ansatz(directions, half_width, eps, size, order)
    relaxed = newton_2d(initial)
    logger.info("glued %d ends in %d iterations, residual %.2e", len(directions), relaxed.iterations, relaxed.residual)

    defect = localization_defect(relaxed, directions)
    if defect >= LOCALIZATION_TOL:
        logger.warning("relaxed field is not localized along the declared ends: defect %.2e", defect)
        raise EndsLost(
            "Relaxed field lost the declared ends",
            {"defect": defect, "directions": normalize_directions(directions).tolist()},
        )
    return relaxed


def localization_defect(state: FieldState2D, directions: Sequence[Sequence[float]], factor: float = 10.0) -> float:
    """
    Максимум max(1 − u², |∇u|) по узлам, удаленным от лучей более чем на factor·ε.

    :param state: Поле в нормированной форме
    :param directions: Направления концов
    :param factor: Порог в единицах ε
    :return:
    """

    x, y = state.mesh()
    far = distance_to_rays(x, y, normalize_directions(directions)) > factor * state.eps
    gradient_x, gradient_y = np.gradient(state.values, state.spacing)
    defect = np.maximum(1 - state.values**2, np.hypot(gradient_x, gradient_y))
    return float(defect[far].max()) if far.any() else 0.0


def boundary_sign_changes(state: FieldState2D) -> int:
    """
    Количество пересечений множества {u = 0} (середина между ямами) с границей квадрата.

    :param state: Поле
    :return:
    """

    values = state.values
    middle = 0.0 if state.kind == "SineGordonNormalized" else np.pi
    ring = np.concatenate([values[:-1, 0], values[-1, :-1], values[:0:-1, -1], values[0, :0:-1]]) - middle
    upper = ring >= 0
    return int(np.count_nonzero(upper != np.roll(upper, -1)))
