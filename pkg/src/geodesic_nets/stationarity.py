"""
Невязка стационарности сети и проверка первой вариации массы.
"""

import numpy as np

from geodesic_nets.embedding import NetEmbedding
from geodesic_nets.models import MassGradientCheck, StationarityReport

# шаг разностной производной массы
GRADIENT_STEP = 1e-5


def residual_vectors(embedding: NetEmbedding) -> np.ndarray:
    """
    r(u) = −Σ ω(u, v)·τ(u → v) по соседям v вершины u, во всех вершинах.

    :param embedding: Вложение
    :return: Массив |V| × dim
    """

    graph = embedding.graph
    vectors = np.zeros_like(embedding.positions)
    for u in graph.vertices:
        for v in graph.neighbors(u):
            vectors[u] -= graph.weight(u, v) * embedding.tangent_towards(u, v)
    return vectors


def gauged_residual(embedding: NetEmbedding) -> np.ndarray:
    """
    Калиброванная невязка: проекции r(u) на направления координат вершин.

    Совпадает с градиентом массы в калиброванных координатах.

    :param embedding: Вложение
    :return:
    """

    vectors = residual_vectors(embedding)
    parts = [embedding.basis(u) @ vectors[u] for u in embedding.graph.vertices]
    return np.concatenate(parts) if parts else np.zeros(0)


def stationarity_residual(embedding: NetEmbedding) -> StationarityReport:
    """
    Невязка стационарности с максимальными нормами.

    :param embedding: Вложение
    :return:
    """

    vectors = residual_vectors(embedding)
    gauged = gauged_residual(embedding)
    return StationarityReport(
        vectors=vectors,
        max_norm=float(np.max(np.linalg.norm(vectors, axis=1))),
        gauged=gauged,
        gauged_max=float(np.max(np.abs(gauged))) if gauged.size else 0.0,
    )


def mass_gradient_check(
    embedding: NetEmbedding, direction: np.ndarray, step: float = GRADIENT_STEP
) -> MassGradientCheck:
    """
    Сравнение ⟨g, q⟩ для калиброванной невязки g с центральной разностью массы вдоль q.

    :param embedding: Вложение
    :param direction: Калиброванный вектор q
    :param step: Шаг разности
    :return:
    """

    direction = np.asarray(direction, dtype=float)
    analytic = float(gauged_residual(embedding) @ direction)
    forward = embedding.moved(step * direction).mass
    backward = embedding.moved(-step * direction).mass
    numeric = (forward - backward) / (2 * step)
    return MassGradientCheck(analytic=analytic, numeric=numeric, deviation=abs(analytic - numeric))
