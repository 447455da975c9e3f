"""
Базовые функции поверхностей.
"""

from abc import ABC, abstractmethod
from typing import Any, Optional

import numpy as np

from errors import InvalidInput, PointsCoincide
from surface_geometry.models import GeodesicSegment

# количество точек, сохраняемых вдоль геодезического отрезка
SEGMENT_SAMPLES = 64
# допуск на уравнение поверхности
POINT_TOL = 1e-12


class BaseSurface(ABC):
    """
    Базовый класс, реализующий интерфейс поверхностей с геодезическими запросами.
    """

    #: название семейства поверхностей для сериализации
    kind: str = ""
    #: размерность объемлющего пространства
    dim: int = 3

    @property
    @abstractmethod
    def params(self) -> tuple[float, ...]:
        """
        Параметры поверхности в порядке сериализации.

        :return:
        """

    @property
    @abstractmethod
    def inj_lower_bound(self) -> float:
        """
        Консервативная нижняя граница радиуса инъективности.

        :return:
        """

    @abstractmethod
    def defect(self, point: np.ndarray) -> float:
        """
        Невязка уравнения поверхности в точке.

        :param point: Координаты точки
        :return:
        """

    @abstractmethod
    def project(self, point: np.ndarray) -> np.ndarray:
        """
        Проекция точки объемлющего пространства на поверхность.

        :param point: Координаты точки
        :return:
        """

    @abstractmethod
    def projection_differential(self, point: np.ndarray) -> np.ndarray:
        """
        Матрица Якоби отображения :meth:`project` в точке объемлющего пространства.

        :param point: Координаты точки
        :return:
        """

    @abstractmethod
    def normal(self, point: np.ndarray) -> Optional[np.ndarray]:
        """
        Единичная нормаль к поверхности (``None`` для плоских областей).

        :param point: Точка поверхности
        :return:
        """

    @abstractmethod
    def gaussian_curvature(self, point: np.ndarray) -> float:
        """
        Гауссова кривизна в точке.

        :param point: Точка поверхности
        :return:
        """

    @abstractmethod
    def exp_map(self, point: np.ndarray, vector: np.ndarray) -> np.ndarray:
        """
        Экспоненциальное отображение.

        :param point: Точка поверхности
        :param vector: Касательный вектор в точке
        :return:
        """

    @abstractmethod
    def geodesic_between(
        self, start: np.ndarray, end: np.ndarray, launch: Optional[np.ndarray] = None
    ) -> GeodesicSegment:
        """
        Единственный минимизирующий геодезический отрезок между точками.

        :param start: Начальная точка
        :param end: Конечная точка
        :param launch: Начальное приближение касательного вектора (для метода стрельбы)
        :return:
        """

    def to_dict(self) -> dict[str, Any]:
        """
        Сериализация поверхности в вид ``{kind, params}``.

        :return:
        """

        return {"kind": self.kind, "params": list(self.params)}

    def check_point(self, point: np.ndarray) -> np.ndarray:
        """
        Проверка принадлежности точки поверхности.

        :param point: Координаты точки
        :return: Точка в виде массива numpy
        """

        point = np.asarray(point, dtype=float)
        if point.shape != (self.dim,):
            raise InvalidInput(f"Point must have {self.dim} coordinates", {"shape": point.shape})
        if abs(self.defect(point)) > POINT_TOL:
            raise InvalidInput("Point is off the surface", {"defect": self.defect(point)})
        return point

    def tangent_basis(self, point: np.ndarray) -> np.ndarray:
        """
        Ортонормированный базис касательной плоскости (строки массива 2 × dim).

        Первый вектор получается проекцией координатной оси, наименее коллинеарной нормали.

        :param point: Точка поверхности
        :return:
        """

        normal = self.normal(point)
        if normal is None:
            return np.eye(self.dim)[:2]

        axis = np.eye(3)[int(np.argmin(np.abs(normal)))]
        first = axis - (axis @ normal) * normal
        first /= np.linalg.norm(first)
        second = np.cross(normal, first)
        return np.vstack([first, second])

    def project_tangent(self, point: np.ndarray, vector: np.ndarray) -> np.ndarray:
        """
        Ортогональная проекция вектора на касательную плоскость.

        :param point: Точка поверхности
        :param vector: Вектор объемлющего пространства
        :return:
        """

        normal = self.normal(point)
        if normal is None:
            return np.asarray(vector, dtype=float)
        return vector - (vector @ normal) * normal

    def distance(self, start: np.ndarray, end: np.ndarray) -> float:
        """
        Геодезическое расстояние (ниже радиуса инъективности).

        :param start: Начальная точка
        :param end: Конечная точка
        :return:
        """

        return self.geodesic_between(start, end).length

    def log_map(self, start: np.ndarray, end: np.ndarray) -> np.ndarray:
        """
        Обратное к экспоненциальному отображение: вектор в ``start`` длины dist(start, end).

        :param start: Начальная точка
        :param end: Конечная точка
        :return:
        """

        try:
            segment = self.geodesic_between(start, end)
        except PointsCoincide:
            return np.zeros(self.dim)
        return segment.length * segment.start_tangent

    def __eq__(self, other: object) -> bool:
        return isinstance(other, BaseSurface) and self.to_dict() == other.to_dict()

    def __hash__(self) -> int:
        return hash((self.kind, self.params))

    def __repr__(self) -> str:
        params = ", ".join(f"{item:g}" for item in self.params)
        return f"{type(self).__name__}({params})"
