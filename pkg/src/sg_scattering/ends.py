"""
Асимптотические направления поля по линии уровня {u = π} и их антиподальное сопоставление.
"""

from typing import Sequence

import numpy as np
from scipy.optimize import brentq

from errors import NoCrossings, OddCount
from sg_scattering.fields import ShiftedField
from sg_scattering.models import PairingReport

SQUARE_FRACTION = 0.8
MERGE_DEG = 2.0


def square_loop(half_side: float, parameter: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """
    Точки границы квадрата [−s, s]² по параметру t ∈ [0, 4) против часовой стрелки от (s, −s).

    :param half_side: Полусторона s
    :param parameter: Параметр t
    :return:
    """

    side = np.floor(parameter).astype(int) % 4
    offset = (parameter - np.floor(parameter)) * 2 * half_side - half_side
    x = np.choose(side, [np.full_like(offset, half_side), -offset, np.full_like(offset, -half_side), offset])
    y = np.choose(side, [offset, np.full_like(offset, half_side), -offset, np.full_like(offset, -half_side)])
    return x, y


def _merge(angles: list[float]) -> list[float]:
    if not angles:
        return []
    angles = sorted(np.mod(angles, 2 * np.pi))
    groups = [[angles[0]]]
    for angle in angles[1:]:
        if np.rad2deg(angle - groups[-1][-1]) < MERGE_DEG:
            groups[-1].append(angle)
        else:
            groups.append([angle])
    if len(groups) > 1 and np.rad2deg(groups[0][0] + 2 * np.pi - groups[-1][-1]) < MERGE_DEG:
        groups[0] = [angle - 2 * np.pi for angle in groups.pop()] + groups[0]
    return [float(np.mean(group)) for group in groups]


def detect_ends_geometric(field: ShiftedField) -> list[tuple[float, float]]:
    """
    Пересечения {u = π} с границей квадрата [−0.8L, 0.8L]², нормированные в направления.

    :param field: Поле
    :return:
    """

    half_side = SQUARE_FRACTION * field.half_width
    parameter = np.linspace(0.0, 4.0, 32 * field.size + 1)[:-1]
    levels = field.evaluate(*square_loop(half_side, parameter))[0] - np.pi

    def level(t: float) -> float:
        x, y = square_loop(half_side, np.array([t]))
        return float(field.evaluate(x, y)[0][0] - np.pi)

    angles = []
    following = np.roll(levels, -1)
    for index in np.flatnonzero(np.signbit(levels) != np.signbit(following)):
        start = parameter[index]
        stop = parameter[index + 1] if index + 1 < parameter.size else 4.0
        root = brentq(level, start, stop, xtol=1e-12) if level(start) * level(stop) < 0 else start
        x, y = square_loop(half_side, np.array([root]))
        angles.append(float(np.arctan2(y[0], x[0])))

    if not angles:
        raise NoCrossings("level set u = pi does not reach the square", {"half_side": half_side})
    return [(float(np.cos(angle)), float(np.sin(angle))) for angle in _merge(angles)]


def angle_between(first: Sequence[float], second: Sequence[float]) -> float:
    cosine = np.dot(first, second) / (np.linalg.norm(first) * np.linalg.norm(second))
    return float(np.rad2deg(np.arccos(np.clip(cosine, -1.0, 1.0))))


def verify_antipodal_pairing(directions: Sequence[Sequence[float]], tol_deg: float) -> PairingReport:
    """
    Жадное сопоставление каждого направления с ближайшим к его антиподу свободным направлением.

    :param directions: Направления
    :param tol_deg: Допуск в градусах
    :return:
    """

    if len(directions) == 0:
        raise OddCount("at least one pair of directions is required", {"count": 0})
    if len(directions) % 2:
        raise OddCount("number of directions must be even", {"count": len(directions)})

    vectors = [np.asarray(item, dtype=float) for item in directions]
    free = set(range(len(vectors)))
    pairs: list[tuple[int, int, float]] = []
    unmatched: list[int] = []
    for index in range(len(vectors)):
        if index not in free:
            continue
        free.discard(index)
        errors = {other: angle_between(-vectors[index], vectors[other]) for other in free}
        partner = min(errors, key=errors.get) if errors else None  # type: ignore[arg-type]
        if partner is not None and errors[partner] <= tol_deg:
            free.discard(partner)
            pairs.append((index, partner, errors[partner]))
        else:
            unmatched.append(index)

    return PairingReport(paired=not unmatched, pairs=pairs, unmatched=unmatched, tol_deg=tol_deg)
