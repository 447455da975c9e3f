"""
Готовые сети: главные замкнутые геодезические и тэта-сеть.
"""

import numpy as np
from scipy.integrate import quad
from scipy.optimize import brentq

from errors import InvalidInput
from geodesic_nets.embedding import NetEmbedding
from geodesic_nets.graph import GraphStructure
from surface_geometry.base import BaseSurface
from surface_geometry.surfaces import Ellipsoid, RoundSphere

PRESETS: tuple[str, ...] = ("equator", "theta", "gamma1", "gamma2", "gamma3")


def semi_axes(surface: BaseSurface) -> np.ndarray:
    if isinstance(surface, RoundSphere):
        return np.ones(3)
    if isinstance(surface, Ellipsoid):
        return surface.coefficients**-0.5
    raise InvalidInput("net presets need a sphere or an ellipsoid", {"surface": surface.to_dict()})


def ellipse_points(first: np.ndarray, second: np.ndarray, stop: float, count: int, closed: bool) -> np.ndarray:
    """
    Точки дуги c(t) = cos t·first + sin t·second, t ∈ [0, stop], на равных расстояниях по длине.

    :param first: Вектор c(0)
    :param second: Вектор c(π/2)
    :param stop: Конец параметра
    :param count: Количество точек
    :param closed: Замкнутая дуга (последняя точка не совпадает с первой)
    :return: Массив count × 3
    """

    def speed(time: float) -> float:
        return float(np.linalg.norm(-np.sin(time) * first + np.cos(time) * second))

    def arclength(time: float) -> float:
        return quad(speed, 0.0, time, epsabs=0.0, epsrel=1e-13, limit=200)[0]

    total = arclength(stop)
    targets = total * np.arange(count) / (count if closed else count - 1)
    times = [0.0]
    for target in targets[1:]:
        times.append(brentq(lambda time, goal=target: arclength(time) - goal, 0.0, stop, xtol=1e-14))
    if not closed:
        times[-1] = stop
    times = np.array(times)
    return np.cos(times)[:, None] * first + np.sin(times)[:, None] * second


def principal_loop(surface: BaseSurface, axis: int, q: int, weight: int = 1) -> NetEmbedding:
    """
    Цикл из Q + 1 вершин на сечении {x_axis = 0}.

    :param surface: Поверхность
    :param axis: Номер координаты (0, 1, 2)
    :param q: Число подразбиений Q
    :param weight: Вес ребер
    :return:
    """

    if q < 2:
        raise InvalidInput("a loop needs Q >= 2", {"Q": q})
    axes = semi_axes(surface)
    first, second = (index for index in range(3) if index != axis)
    points = ellipse_points(axes[first] * np.eye(3)[first], axes[second] * np.eye(3)[second], 2 * np.pi, q + 1, True)
    edges = [(index, (index + 1) % (q + 1)) for index in range(q + 1)]
    graph = GraphStructure(edges, [weight] * len(edges))
    return NetEmbedding(graph, surface, np.array([surface.project(point) for point in points]))


def theta_net(surface: BaseSurface, q: int, weight: int = 1) -> NetEmbedding:
    """
    Три меридиана между полюсами ±x₃ на долготах 0, 2π/3, 4π/3.

    Вершины 0 и 1 являются полюсами, далее внутренние вершины цепочек подряд.

    :param surface: Поверхность
    :param q: Число подразбиений Q
    :param weight: Вес ребер
    :return:
    """

    if q < 1:
        raise InvalidInput("theta net needs Q >= 1", {"Q": q})
    axes = semi_axes(surface)
    north = axes[2] * np.eye(3)[2]
    positions = [north, -north]
    edges = []
    for chain in range(3):
        longitude = 2 * np.pi * chain / 3
        direction = np.array([np.cos(longitude), np.sin(longitude), 0.0])
        radius = 1.0 / np.sqrt(np.sum(direction**2 / axes**2))
        points = ellipse_points(north, radius * direction, np.pi, q + 2, False)
        first = len(positions)
        positions.extend(points[1:-1])
        path = [0] + list(range(first, first + q)) + [1]
        edges.extend(zip(path[:-1], path[1:]))
    graph = GraphStructure(edges, [weight] * len(edges))
    return NetEmbedding(graph, surface, np.array([surface.project(point) for point in positions]))


def preset_net(surface: BaseSurface, name: str, q: int, weight: int = 1) -> NetEmbedding:
    """
    Q-подразбитая сеть по имени: ``equator`` (сечение x₃ = 0), ``theta``, ``gamma1..3`` (сечения xᵢ = 0).

    :param surface: Сфера или эллипсоид
    :param name: Имя сети
    :param q: Число подразбиений Q
    :param weight: Вес ребер
    :return:
    """

    if name == "theta":
        return theta_net(surface, q, weight)
    if name == "equator":
        return principal_loop(surface, 2, q, weight)
    if name in ("gamma1", "gamma2", "gamma3"):
        return principal_loop(surface, int(name[-1]) - 1, q, weight)
    raise InvalidInput("unknown net preset", {"name": name, "presets": list(PRESETS)})
