"""
Геодезические запросы к поверхностям.
"""

from typing import Optional

import numpy as np

from surface_geometry.base import BaseSurface
from surface_geometry.models import GeodesicSegment


def geodesic_between(
    surface: BaseSurface, start: np.ndarray, end: np.ndarray, launch: Optional[np.ndarray] = None
) -> GeodesicSegment:
    """
    Единственный минимизирующий геодезический отрезок ниже радиуса инъективности.

    :param surface: Поверхность
    :param start: Начальная точка
    :param end: Конечная точка
    :param launch: Начальное приближение касательного вектора для метода стрельбы
    :return:
    """

    return surface.geodesic_between(start, end, launch=launch)


def exp_map(surface: BaseSurface, point: np.ndarray, vector: np.ndarray) -> np.ndarray:
    """
    Экспоненциальное отображение exp_p(v).

    :param surface: Поверхность
    :param point: Точка поверхности
    :param vector: Касательный вектор
    :return:
    """

    return surface.exp_map(point, vector)


def log_map(surface: BaseSurface, start: np.ndarray, end: np.ndarray) -> np.ndarray:
    """
    Касательный вектор в ``start``, переводимый exp_map в ``end``.

    :param surface: Поверхность
    :param start: Начальная точка
    :param end: Конечная точка
    :return:
    """

    return surface.log_map(start, end)


def point_along(surface: BaseSurface, segment: GeodesicSegment, arclength: float) -> np.ndarray:
    """
    Точка отрезка на заданном расстоянии от начала.

    :param surface: Поверхность
    :param segment: Геодезический отрезок
    :param arclength: Расстояние от начала отрезка
    :return:
    """

    if arclength <= 0.0:
        return segment.start.copy()
    if arclength >= segment.length:
        return segment.end.copy()
    return surface.exp_map(segment.start, arclength * segment.start_tangent)
