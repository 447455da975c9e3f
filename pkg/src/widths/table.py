"""
Таблица ширин ω_p = 2π⌊√p⌋ круглой сферы и константа закона Вейля.
"""

import logging
import math
from collections import defaultdict
from typing import Literal, Sequence

import numpy as np

from crofton_sweepout.sweepout import width_upper_bound
from errors import CountMismatch, InvalidInput, TableTooSmall
from logger import traced
from widths.lattice import check_increasing, pinch_from_values, quantization_values
from widths.models import Length2Pi, PinchInterval, Rational, WidthTable, as_fraction

logger = logging.getLogger(__name__)

# значения μ → 0 для проверки сжатия интервалов
PINCH_MUS: tuple[str, ...] = ("0.1", "0.01", "0.001")
# интервалы сжатия строятся только для p не больше этого значения
PINCH_P_MAX = 10_000
# минимальный размер таблицы для оценки константы Вейля
WEYL_P_MIN = 10_000
SPHERE_AREA = 4 * math.pi

WeylSampling = Literal["squares", "all"]


def exact_turns(p_max: int) -> np.ndarray:
    """
    Целые ⌊√p⌋ для p = 1..p_max.

    :param p_max: Размер таблицы
    :return:
    """

    p = np.arange(1, p_max + 1, dtype=np.int64)
    turns = np.floor(np.sqrt(p)).astype(np.int64)
    turns -= turns * turns > p
    turns += (turns + 1) ** 2 <= p
    return turns


def pinch_intervals(p_top: int, mus: Sequence[Rational]) -> list[PinchInterval]:
    """
    Интервалы сжатия для p ≤ p_top при каждом μ, для которых μ < 1/(2⌊√p⌋).

    :param p_top: Наибольший номер ширины
    :param mus: Значения μ
    :return:
    """

    intervals = []
    for mu in mus:
        mu = as_fraction(mu)
        m_top = min(math.isqrt(p_top), math.ceil(1 / (2 * mu)) - 1)
        if m_top < 1:
            continue
        count = min(p_top, (m_top + 1) ** 2 - 1)
        values = quantization_values(mu, Length2Pi(turns=m_top, offset=1))
        check_increasing(values, count, mu)
        intervals.extend(pinch_from_values(values, p, mu) for p in range(1, count + 1))
    return intervals


def check_nesting(intervals: Sequence[PinchInterval]) -> None:
    """
    Проверка вложенности интервалов при μ → 0 вокруг точного значения 2π⌊√p⌋.

    :param intervals: Интервалы сжатия
    :return:
    """

    by_p: dict[int, list[PinchInterval]] = defaultdict(list)
    for interval in intervals:
        by_p[interval.p].append(interval)
    for p, group in by_p.items():
        group.sort(key=lambda item: item.mu, reverse=True)
        exact = Length2Pi(turns=math.isqrt(p))
        for wider, narrower in zip(group, group[1:]):
            if not (wider.lower <= narrower.lower and narrower.upper <= wider.upper):
                raise CountMismatch("pinching intervals are not nested", {"p": p, "mu": str(narrower.mu)})
        if any(not item.contains(exact) for item in group):
            raise CountMismatch("pinching interval misses 2π⌊√p⌋", {"p": p})


@traced("width_table")
def width_table(p_max: int, mus: Sequence[Rational] = PINCH_MUS, pinch_limit: int = PINCH_P_MAX) -> WidthTable:
    """
    Таблица ω_p = 2π⌊√p⌋, сверенная с верхней оценкой Крофтона и интервалами сжатия.

    .. code-block::

        width_table(100).width(24)  # 2π·4

    :param p_max: Размер таблицы
    :param mus: Значения μ → 0 для интервалов сжатия
    :param pinch_limit: Наибольший p, для которого строятся интервалы сжатия
    :return:
    """

    if p_max < 1:
        raise InvalidInput("p_max must be positive", {"p_max": p_max})

    turns = exact_turns(p_max)
    upper = 2 * np.pi * turns
    for m in range(1, int(turns[-1]) + 1):
        for p in (m * m, min((m + 1) ** 2 - 1, p_max)):
            if width_upper_bound(p) != upper[p - 1]:
                raise CountMismatch("width differs from the Crofton upper bound", {"p": p})

    intervals = pinch_intervals(min(p_max, pinch_limit), mus)
    check_nesting(intervals)
    logger.info("Width table up to p=%d with %d pinching intervals", p_max, len(intervals))
    return WidthTable(p_max=p_max, turns=turns, upper=upper, pinches=intervals)


def weyl_constant(table: WidthTable, sampling: WeylSampling = "squares") -> float:
    """
    Предел ω_p p^{−1/2} / √(4π).

    При выборке p = m² пол вычисляется точно, и экстраполяция Ричардсона по m и m/2
    с ошибкой порядка 1/m дает √π с машинной точностью. Выборка ``all`` усредняет
    отношение по верхней половине таблицы.

    :param table: Таблица ширин
    :param sampling: Выборка номеров p
    :return:
    """

    if table.p_max < WEYL_P_MIN:
        raise TableTooSmall("table must cover p_max ≥ 10⁴", {"p_max": table.p_max, "required": WEYL_P_MIN})

    values = table.values()
    if sampling == "all":
        p = np.arange(table.p_max // 2, table.p_max + 1)
        return float(np.mean(values[p - 1] / np.sqrt(p)) / math.sqrt(SPHERE_AREA))

    top = math.isqrt(table.p_max)
    half = top // 2

    def ratio(m: int) -> float:
        return float(values[m * m - 1]) / m / math.sqrt(SPHERE_AREA)

    return (top * ratio(top) - half * ratio(half)) / (top - half)
