"""
Вложения сетей в поверхность и порождаемые ими варифолды.

Калибровка: вершина степени 2 сдвигается только вдоль своего трансверсального
направления (нормаль к исходной сети), остальные вершины свободны в касательной
плоскости, закрепленные вершины неподвижны. Координаты вершины y ∈ ℝᵏ переходят
в точку поверхности ретракцией p ↦ project(p + Σ yₖ eₖ).
"""

import logging
from functools import cached_property
from typing import Optional, Sequence

import numpy as np
from scipy.spatial.distance import cdist, pdist

from errors import BeyondInjectivityRadius, ImmersionViolated, InvalidInput, PointsCoincide, SegmentsOverlap
from geodesic_nets.graph import GraphStructure
from geodesic_nets.models import NetReport, NetVarifold
from surface_geometry.base import BaseSurface
from surface_geometry.geodesics import geodesic_between
from surface_geometry.models import GeodesicSegment

logger = logging.getLogger(__name__)

# минимальное расстояние между различными вершинами (I₁)
INJECTIVE_TOL = 1e-9
# минимальное расстояние между внутренностями сегментов (E₂)
OVERLAP_TOL = 1e-6
# допуск на равенство длин у вершины степени 2 (E₃)
BALANCE_TOL = 1e-9
# количество хорд вокруг ближайших точек при проверке пересечения
CROSS_WINDOW = 3


def _unit(vector: np.ndarray) -> np.ndarray:
    return vector / np.linalg.norm(vector)


def in_plane_normal(surface: BaseSurface, point: np.ndarray, tangent: np.ndarray) -> np.ndarray:
    """
    Единичная нормаль к кривой в касательной плоскости: N × t (поворот на π/2 в плоском случае).

    :param surface: Поверхность
    :param point: Точка поверхности
    :param tangent: Единичный касательный вектор кривой
    :return:
    """

    normal = surface.normal(point)
    if normal is None:
        return np.array([-tangent[1], tangent[0]])
    return np.cross(normal, tangent)


class NetEmbedding:
    """
    Положения вершин графа на поверхности вместе с калибровкой.
    """

    def __init__(
        self,
        graph: GraphStructure,
        surface: BaseSurface,
        positions: np.ndarray,
        slices: Optional[dict[int, np.ndarray]] = None,
        pinned: Sequence[int] = (),
    ) -> None:
        """
        Конструктор.

        :param graph: Граф сети
        :param surface: Поверхность
        :param positions: Координаты вершин (строки в порядке номеров вершин)
        :param slices: Трансверсальные направления вершин степени 2 (по умолчанию нормали к сети)
        :param pinned: Закрепленные вершины
        """

        positions = np.array(positions, dtype=float)
        if positions.shape != (len(graph.vertices), surface.dim):
            raise InvalidInput(
                "one surface point per vertex is required",
                {"shape": positions.shape, "vertices": len(graph.vertices)},
            )
        for point in positions:
            surface.check_point(point)
        pinned = tuple(sorted({int(item) for item in pinned}))
        if any(item not in graph.vertices for item in pinned):
            raise InvalidInput("pinned vertices must belong to the graph", {"pinned": list(pinned)})

        self.graph = graph
        self.surface = surface
        self.positions = positions
        self.positions.setflags(write=False)
        self.pinned = pinned
        self._edge_index = {edge: index for index, edge in enumerate(graph.edges)}
        if slices is None:
            slices = {u: self.net_normal(u) for u in graph.vertices if graph.degree(u) == 2}
        self.slices = {int(u): np.asarray(vector, dtype=float) for u, vector in slices.items()}

    @cached_property
    def segments(self) -> list[GeodesicSegment]:
        """
        Минимизирующие отрезки ребер, ориентированные от меньшей вершины к большей.

        Проверяет условия погружения (I₁) и (I₂).

        :return:
        """

        distances = pdist(self.positions)
        if distances.size and distances.min() <= INJECTIVE_TOL:
            first, second = np.triu_indices(len(self.positions), k=1)
            index = int(np.argmin(distances))
            raise ImmersionViolated("I1", (int(first[index]), int(second[index])))

        segments = []
        for u, v in self.graph.edges:
            try:
                segment = geodesic_between(self.surface, self.positions[u], self.positions[v])
            except PointsCoincide as error:
                raise ImmersionViolated("I1", (u, v)) from error
            except BeyondInjectivityRadius as error:
                raise ImmersionViolated("I2", (u, v)) from error
            if segment.length >= self.surface.inj_lower_bound:
                raise ImmersionViolated("I2", (u, v))
            segments.append(segment)
        return segments

    def segment(self, u: int, v: int) -> GeodesicSegment:
        """
        Отрезок ребра {u, v}, ориентированный от u к v.

        :param u: Начальная вершина
        :param v: Конечная вершина
        :return:
        """

        segment = self.segments[self._edge_index[(min(u, v), max(u, v))]]
        return segment if u < v else segment.reversed()

    def tangent_towards(self, u: int, v: int) -> np.ndarray:
        """
        Единичный касательный вектор τ(u → v) в вершине u, направленный вдоль ребра к v.

        :param u: Вершина
        :param v: Соседняя вершина
        :return:
        """

        segment = self.segments[self._edge_index[(min(u, v), max(u, v))]]
        return segment.start_tangent if u < v else segment.end_tangent

    def net_normal(self, u: int) -> np.ndarray:
        """
        Нормаль к сети в вершине степени 2.

        :param u: Вершина
        :return:
        """

        first, second = self.graph.neighbors(u)
        direction = self.tangent_towards(u, second) - self.tangent_towards(u, first)
        return in_plane_normal(self.surface, self.positions[u], _unit(direction))

    def basis(self, u: int) -> np.ndarray:
        """
        Направления калиброванных координат вершины (строки массива k × dim).

        :param u: Вершина
        :return:
        """

        point = self.positions[u]
        if u in self.pinned:
            return np.zeros((0, self.surface.dim))
        if u not in self.slices:
            return self.surface.tangent_basis(point)
        direction = self.surface.project_tangent(point, self.slices[u])
        norm = float(np.linalg.norm(direction))
        if norm < 1e-8:
            raise InvalidInput("slice direction is normal to the surface", {"vertex": u})
        return (direction / norm)[None, :]

    @cached_property
    def dofs(self) -> list[tuple[int, int]]:
        return [(u, k) for u in self.graph.vertices for k in range(self.basis(u).shape[0])]

    @property
    def dimension(self) -> int:
        return len(self.dofs)

    def offsets(self) -> dict[int, slice]:
        """
        Срезы калиброванного вектора, относящиеся к каждой вершине.

        :return:
        """

        result, start = {}, 0
        for u in self.graph.vertices:
            count = self.basis(u).shape[0]
            result[u] = slice(start, start + count)
            start += count
        return result

    def vertex_chart(self, u: int, coords: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        """
        Точка ретракции и ее производная по координатам вершины.

        :param u: Вершина
        :param coords: Координаты вершины (длины k)
        :return: (точка, матрица dim × k)
        """

        basis = self.basis(u)
        if basis.shape[0] == 0:
            return self.positions[u].copy(), np.zeros((self.surface.dim, 0))
        ambient = self.positions[u] + np.asarray(coords, dtype=float) @ basis
        return self.surface.project(ambient), self.surface.projection_differential(ambient) @ basis.T

    def retract(self, step: np.ndarray) -> np.ndarray:
        """
        Координаты вершин после сдвига на калиброванный вектор.

        :param step: Калиброванный вектор
        :return:
        """

        step = np.asarray(step, dtype=float)
        if step.shape != (self.dimension,):
            raise InvalidInput("step must match the gauged dimension", {"shape": step.shape, "dim": self.dimension})
        positions = np.array(self.positions)
        for u, part in self.offsets().items():
            if part.stop > part.start:
                positions[u] = self.vertex_chart(u, step[part])[0]
        return positions

    def moved(self, step: np.ndarray) -> "NetEmbedding":
        """
        Сдвинутое вложение с той же калибровкой.

        :param step: Калиброванный вектор
        :return:
        """

        return NetEmbedding(self.graph, self.surface, self.retract(step), slices=self.slices, pinned=self.pinned)

    def regauged(self) -> "NetEmbedding":
        return NetEmbedding(self.graph, self.surface, self.positions, pinned=self.pinned)

    def pinned_at(self, vertices: Sequence[int]) -> "NetEmbedding":
        return NetEmbedding(self.graph, self.surface, self.positions, slices=self.slices, pinned=vertices)

    def with_weights_scaled(self, factor: int) -> "NetEmbedding":
        return NetEmbedding(
            self.graph.scaled(factor), self.surface, self.positions, slices=self.slices, pinned=self.pinned
        )

    @property
    def mass(self) -> float:
        """
        Масса ℒ = Σ ω·длина.

        :return:
        """

        return float(sum(weight * item.length for weight, item in zip(self.graph.weights(), self.segments)))

    def is_balanced(self, tol: float = BALANCE_TOL) -> bool:
        """
        Условие (E₃): у каждой вершины степени 2 длины двух отрезков совпадают.

        :param tol: Допуск
        :return:
        """

        for u in self.graph.vertices:
            if self.graph.degree(u) != 2:
                continue
            first, second = (self.segment(u, v).length for v in self.graph.neighbors(u))
            if abs(first - second) > tol:
                return False
        return True

    def to_report(self, residual: float, kernel_dim: int) -> NetReport:
        return NetReport(
            surface=self.surface.to_dict(),
            graph=self.graph.to_dict(),
            vertex_positions=self.positions.tolist(),
            mass=self.mass,
            residual=residual,
            kernel_dim=kernel_dim,
        )

    def __repr__(self) -> str:
        return f"NetEmbedding({self.graph!r}, {self.surface!r})"


def _side(first: np.ndarray, second: np.ndarray, point: np.ndarray) -> int:
    chord, offset = second - first, point - first
    value = float(chord[0] * offset[1] - chord[1] * offset[0])
    if abs(value) <= 1e-10 * float(np.linalg.norm(chord) * np.linalg.norm(offset)):
        return 0
    return 1 if value > 0 else -1


def polylines_cross(surface: BaseSurface, first: np.ndarray, second: np.ndarray, window: int = CROSS_WINDOW) -> bool:
    """
    Трансверсальное пересечение ломаных вблизи их ближайших выборочных точек.

    Хорды проецируются на касательную плоскость в ближайшей точке и проверяются
    на собственное пересечение; касание в общем конце пересечением не считается.

    :param surface: Поверхность
    :param first: Выборка первого отрезка
    :param second: Выборка второго отрезка
    :param window: Количество хорд по обе стороны от ближайших точек
    :return:
    """

    distances = cdist(first, second)
    near_first, near_second = np.unravel_index(int(np.argmin(distances)), distances.shape)
    spacing = max(float(np.linalg.norm(np.diff(item, axis=0), axis=1).max()) for item in (first, second))
    if distances[near_first, near_second] > 2 * spacing:
        return False

    centre = first[near_first]
    basis = surface.tangent_basis(centre)
    left = (first[max(near_first - window, 0) : near_first + window + 1] - centre) @ basis.T
    right = (second[max(near_second - window, 0) : near_second + window + 1] - centre) @ basis.T
    for start, stop in zip(left[:-1], left[1:]):
        for begin, end in zip(right[:-1], right[1:]):
            if (
                _side(start, stop, begin) * _side(start, stop, end) < 0
                and _side(begin, end, start) * _side(begin, end, stop) < 0
            ):
                return True
    return False


def check_disjoint(embedding: NetEmbedding) -> None:
    """
    Условие (E₂): внутренности отрезков не пересекаются.

    Несмежные отрезки не сближаются по выборкам и не пересекаются трансверсально,
    смежные касаются только в общей вершине.

    :param embedding: Вложение
    :return:
    """

    edges = embedding.graph.edges
    segments = embedding.segments
    for first in range(len(edges)):
        for second in range(first + 1, len(edges)):
            left, right = segments[first].samples, segments[second].samples
            crossing = polylines_cross(embedding.surface, left, right)
            shared = set(edges[first]) & set(edges[second])
            if shared:
                vertex = shared.pop()
                left = left[1:] if edges[first][0] == vertex else left[:-1]
                right = right[1:] if edges[second][0] == vertex else right[:-1]
            distance = float(cdist(left, right).min())
            if crossing or distance <= OVERLAP_TOL:
                raise SegmentsOverlap(
                    "segment interiors intersect",
                    {"edges": [list(edges[first]), list(edges[second])], "distance": distance},
                )


def net_varifold(embedding: NetEmbedding) -> NetVarifold:
    """
    Варифолд сети: отрезки с кратностями, масса и особые вершины.

    :param embedding: Вложение
    :return:
    """

    segments = embedding.segments
    check_disjoint(embedding)
    graph = embedding.graph
    singular = graph.anchors()
    return NetVarifold(
        surface=embedding.surface,
        edges=graph.edges,
        segments=segments,
        multiplicities=graph.weights(),
        total_mass=embedding.mass,
        singular_vertices=singular,
        singular_points=embedding.positions[singular].reshape(-1, embedding.surface.dim),
    )
