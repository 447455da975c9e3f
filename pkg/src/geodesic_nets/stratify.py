"""
Перестроение варифолда сети в Q-подразбитое сбалансированное вложение.
"""

import logging
from typing import NamedTuple

import numpy as np
from scipy.spatial.distance import cdist

from errors import InvalidInput, MassNotPreserved, QTooSmall
from geodesic_nets.embedding import NetEmbedding
from geodesic_nets.graph import GraphStructure
from geodesic_nets.models import NetVarifold
from surface_geometry.geodesics import point_along
from surface_geometry.models import GeodesicSegment

logger = logging.getLogger(__name__)

# расстояние, на котором концы отрезков считаются одной точкой
MERGE_TOL = 1e-8
# допуск на гладкость в точке степени 2
SMOOTH_TOL = 1e-6
# относительный допуск на сохранение массы при подразбиении
MASS_TOL = 1e-9


class Arc(NamedTuple):
    """
    Регулярная дуга варифолда: ориентированные отрезки между особыми точками или петля.
    """

    points: list[int]
    segments: list[GeodesicSegment]
    multiplicity: int
    closed: bool

    @property
    def length(self) -> float:
        return float(sum(segment.length for segment in self.segments))


def _merge_endpoints(net: NetVarifold) -> tuple[np.ndarray, list[tuple[int, int]]]:
    endpoints = np.array([point for segment in net.segments for point in (segment.start, segment.end)])
    labels = -np.ones(len(endpoints), dtype=int)
    points = []
    for index, point in enumerate(endpoints):
        if labels[index] >= 0:
            continue
        close = np.flatnonzero(cdist(point[None, :], endpoints)[0] <= MERGE_TOL)
        labels[close[labels[close] < 0]] = len(points)
        points.append(point)
    return np.array(points), [(int(labels[2 * i]), int(labels[2 * i + 1])) for i in range(len(net.segments))]


def regular_arcs(net: NetVarifold) -> tuple[np.ndarray, list[int], list[Arc]]:
    """
    Разбиение варифолда на дуги между особыми точками и петли.

    Особая точка: степень ≠ 2, смена кратности или излом.

    :param net: Варифолд сети
    :return: (точки, номера особых точек, дуги)
    """

    points, ends = _merge_endpoints(net)
    incident: dict[int, list[tuple[int, int]]] = {index: [] for index in range(len(points))}
    for index, (start, end) in enumerate(ends):
        incident[start].append((index, end))
        incident[end].append((index, start))

    def oriented(index: int, start: int) -> GeodesicSegment:
        segment = net.segments[index]
        return segment if ends[index][0] == start else segment.reversed()

    def regular(point: int) -> bool:
        if len(incident[point]) != 2:
            return False
        (first, _), (second, _) = incident[point]
        if net.multiplicities[first] != net.multiplicities[second]:
            return False
        tangents = oriented(first, point).start_tangent + oriented(second, point).start_tangent
        return bool(np.linalg.norm(tangents) < SMOOTH_TOL)

    singular = [point for point in range(len(points)) if not regular(point)]
    used: set[int] = set()
    arcs = []

    def walk(start: int, index: int) -> Arc:
        path, segments, current = [start], [], start
        while True:
            used.add(index)
            segments.append(oriented(index, current))
            current = ends[index][1] if ends[index][0] == current else ends[index][0]
            path.append(current)
            if current == start or current in singular:
                break
            index = next(item for item, _ in incident[current] if item not in used)
        closed = current == start and start not in singular
        return Arc(path[:-1] if closed else path, segments, net.multiplicities[index], closed)

    for point in singular:
        for index, _ in incident[point]:
            if index not in used:
                arcs.append(walk(point, index))
    for index in range(len(ends)):
        if index not in used:
            arcs.append(walk(ends[index][0], index))
    return points, singular, arcs


def stratify(net: NetVarifold, q: int) -> tuple[GraphStructure, NetEmbedding]:
    """
    Q-подразбитое вложение с тем же варифолдом: одна вершина на особую точку,
    Q равноотстоящих внутренних вершин на дугу и Q + 1 вершина на петлю.

    :param net: Варифолд сети
    :param q: Число подразбиений Q
    :return:
    :raises MassNotPreserved: Масса вложения отличается от массы варифолда
    """

    surface = net.surface
    if q < 1:
        raise InvalidInput("Q must be positive", {"Q": q})
    if q * surface.inj_lower_bound <= net.total_mass:
        raise QTooSmall(
            "Q times the injectivity radius must exceed the mass",
            {"Q": q, "inj": surface.inj_lower_bound, "mass": net.total_mass},
        )

    points, singular, arcs = regular_arcs(net)
    positions = [points[point] for point in singular]
    vertex_of = {point: vertex for vertex, point in enumerate(singular)}
    edges, weights = [], []
    for arc in arcs:
        starts = np.concatenate([[0.0], np.cumsum([segment.length for segment in arc.segments])])
        count = q + 1 if arc.closed else q + 2
        divisions = count if arc.closed else count - 1
        path = [] if arc.closed else [vertex_of[arc.points[0]]]
        first = 0 if arc.closed else 1
        for index in range(first, first + (q + 1 if arc.closed else q)):
            target = index * arc.length / divisions
            position = min(int(np.searchsorted(starts, target, side="right")) - 1, len(arc.segments) - 1)
            path.append(len(positions))
            positions.append(point_along(surface, arc.segments[position], target - starts[position]))
        if arc.closed:
            path.append(path[0])
        else:
            path.append(vertex_of[arc.points[-1]])
        edges.extend(zip(path[:-1], path[1:]))
        weights.extend([arc.multiplicity] * (len(path) - 1))

    graph = GraphStructure(edges, weights)
    embedding = NetEmbedding(graph, surface, np.array(positions))
    if abs(embedding.mass - net.total_mass) > MASS_TOL * max(1.0, net.total_mass):
        raise MassNotPreserved(
            "Stratified mass differs from the varifold mass",
            {"mass": embedding.mass, "expected": net.total_mass, "Q": q},
        )
    logger.debug("Stratified net with Q=%d: %d vertices, %d edges", q, len(graph.vertices), len(graph.edges))
    return graph, embedding
