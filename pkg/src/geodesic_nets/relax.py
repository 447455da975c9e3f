"""
Релаксация сети к стационарной и выравнивание цепочек.
"""

import logging

import numpy as np

from errors import ImmersionViolated, InvalidInput, LeftEmbeddingClass, NewtonNoConverge, SegmentsOverlap
from geodesic_nets.embedding import NetEmbedding, net_varifold
from geodesic_nets.jacobi import assemble_jacobi
from geodesic_nets.stationarity import gauged_residual
from logger import traced
from settings import NEWTON_MAX_ITER
from surface_geometry.geodesics import point_along

logger = logging.getLogger(__name__)

RELAX_TOL = 1e-10
MIN_DAMPING = 1e-4


def rebalance(embedding: NetEmbedding) -> NetEmbedding:
    """
    Равномерная расстановка вершин степени 2 вдоль их цепочек.

    Опорные вершины и первая вершина каждого цикла остаются на месте; носитель
    сети не меняется, калибровка пересчитывается по новым нормалям.

    :param embedding: Вложение с геодезическими цепочками
    :return:
    """

    positions = np.array(embedding.positions)
    for chain in embedding.graph.chains():
        path = chain.vertices + chain.vertices[:1] if chain.closed else chain.vertices
        segments = [embedding.segment(first, second) for first, second in zip(path[:-1], path[1:])]
        starts = np.concatenate([[0.0], np.cumsum([segment.length for segment in segments])])
        total = starts[-1]
        for index, vertex in enumerate(path[1:-1], start=1):
            if vertex in embedding.pinned:
                continue
            target = index * total / (len(path) - 1)
            position = min(int(np.searchsorted(starts, target, side="right")) - 1, len(segments) - 1)
            positions[vertex] = point_along(embedding.surface, segments[position], target - starts[position])
    return NetEmbedding(embedding.graph, embedding.surface, positions, pinned=embedding.pinned)


def _step(embedding: NetEmbedding, gradient: np.ndarray) -> np.ndarray:
    """
    Шаг Левенберга-Марквардта (JᵀJ + ‖g‖² I) s = −Jᵀg, где J матрица Якоби сети, g калиброванная невязка.

    Слагаемое ‖g‖² I допускает вырожденный оператор (симметрии сети).

    :param embedding: Текущее вложение
    :param gradient: Калиброванная невязка
    :return:
    """

    matrix = assemble_jacobi(embedding)
    normal = matrix.T @ matrix + float(gradient @ gradient) * np.eye(matrix.shape[0])
    return np.linalg.solve(normal, -matrix.T @ gradient)


@traced("relax_to_stationary")
def relax_to_stationary(
    embedding: NetEmbedding, max_iter: int = NEWTON_MAX_ITER, tol: float = RELAX_TOL
) -> NetEmbedding:
    """
    Демпфированный метод Ньютона по калиброванным координатам до ‖g‖∞ < tol,
    затем выравнивание цепочек.

    :param embedding: Начальное вложение
    :param max_iter: Максимальное количество итераций
    :param tol: Допуск на калиброванную невязку
    :return:
    """

    current = embedding
    gradient = gauged_residual(current)
    norm = float(np.max(np.abs(gradient), initial=0.0))
    if not np.isfinite(norm):
        raise InvalidInput("initial residual is not finite", {"residual": norm})

    iterations = 0
    while norm >= tol:
        if iterations >= max_iter:
            raise NewtonNoConverge("Net relaxation did not converge", norm, {"iterations": iterations})
        step = _step(current, gradient)
        damping = 1.0
        while True:
            try:
                candidate = current.moved(damping * step)
                net_varifold(candidate)
                candidate_gradient = gauged_residual(candidate)
            except (ImmersionViolated, SegmentsOverlap) as error:
                if damping < MIN_DAMPING:
                    raise LeftEmbeddingClass("relaxation left the embedding class", error.details) from error
                damping *= 0.5
                continue
            candidate_norm = float(np.max(np.abs(candidate_gradient), initial=0.0))
            if candidate_norm < norm or damping < MIN_DAMPING:
                break
            damping *= 0.5
        current, gradient, norm = candidate, candidate_gradient, candidate_norm
        iterations += 1
        logger.debug("Relaxation iteration %d: residual %.3e, damping %.3g", iterations, norm, damping)

    relaxed = rebalance(current)
    logger.info("Relaxed net %r in %d iterations, mass %.12f", relaxed, iterations, relaxed.mass)
    return relaxed
