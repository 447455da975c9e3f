"""
Оценка длины нулевых множеств по формуле Крофтона и граница ширин сферы.

Нормировка Length = π·E[#(γ ∩ C_ξ)] при равномерном ξ ∈ S² фиксируется тем, что
большая окружность пересекает почти любую C_ξ ровно в двух точках.
"""

import logging
import math

import numpy as np

from crofton_sweepout.models import CroftonEstimate, MassBoundReport
from crofton_sweepout.polynomials import SpherePolynomial
from crofton_sweepout.roots import count_zeros_batch
from crofton_sweepout.sampling import POLYNOMIAL_STREAM, REDRAW_STREAM, chunk_sizes, stream, uniform_directions
from errors import IdenticallyZeroOnCircle, InvalidInput, MassBoundViolated
from logger import traced
from settings import SAMPLES_CHUNK

logger = logging.getLogger(__name__)

# максимальное количество повторных розыгрышей одного элемента выборки
MAX_REDRAWS = 16


def count_chunk(poly: SpherePolynomial, seed: int, block: int, size: int) -> tuple[np.ndarray, int, list[int]]:
    """
    Количества нулей для одного блока выборки.

    Окружности, на которых ограничение тождественно нулевое, разыгрываются заново из
    отдельного потока того же блока. Элементы, для которых все ``MAX_REDRAWS`` попыток
    вырождены, возвращаются списком и в оценку не входят.

    :param poly: Многочлен
    :param seed: Ключ генератора
    :param block: Номер блока
    :param size: Размер блока
    :return: Количества нулей, число повторных розыгрышей и номера исчерпанных элементов блока
    """

    counts, degenerate = count_zeros_batch(poly, uniform_directions(stream(seed, block), size))
    redraw_generator = stream(seed, block, REDRAW_STREAM)
    rejected = 0
    exhausted = []
    for index in np.flatnonzero(degenerate):
        for _ in range(MAX_REDRAWS):
            rejected += 1
            value, again = count_zeros_batch(poly, uniform_directions(redraw_generator, 1))
            if not again[0]:
                counts[index] = value[0]
                break
        else:
            exhausted.append(int(index))
    if exhausted:
        logger.warning("block %d: %d circles stayed degenerate after %d redraws", block, len(exhausted), MAX_REDRAWS)
    return counts, rejected, exhausted


@traced("crofton_length")
def crofton_length(poly: SpherePolynomial, n_samples: int, seed: int) -> CroftonEstimate:
    """
    Монте-Карло оценка длины нулевого множества многочлена на S².

    :param poly: Многочлен
    :param n_samples: Объем выборки (не менее 100)
    :param seed: Ключ счетчикового генератора
    :return:
    :raises IdenticallyZeroOnCircle: Почти все окружности выборки вырождены
    """

    if n_samples < 100:
        raise InvalidInput("At least 100 samples are required", {"n_samples": n_samples})

    blocks = [count_chunk(poly, seed, block, size) for block, size in enumerate(chunk_sizes(n_samples))]
    counts = np.concatenate([item[0] for item in blocks])
    rejected = sum(item[1] for item in blocks)
    exhausted = [block * SAMPLES_CHUNK + index for block, item in enumerate(blocks) for index in item[2]]
    if rejected:
        logger.info("Redrew %d degenerate circles", rejected)

    counted = np.delete(counts, exhausted)
    if counted.size < 2:
        raise IdenticallyZeroOnCircle(
            "Polynomial vanishes on almost every sampled circle", {"exhausted": len(exhausted), "n_samples": n_samples}
        )
    return CroftonEstimate(
        length_mean=float(np.pi * counted.mean()),
        std_error=float(np.pi * counted.std(ddof=1) / np.sqrt(counted.size)),
        n_samples=n_samples,
        seed=seed,
        rejected=rejected,
        exhausted=exhausted,
    )


def merge_estimates(first: CroftonEstimate, second: CroftonEstimate) -> CroftonEstimate:
    """
    Объединение оценок по непересекающимся частям выборки (слияние среднего и дисперсии).

    :param first: Первая оценка
    :param second: Вторая оценка
    :return:
    """

    total = first.counted + second.counted
    delta = second.length_mean - first.length_mean
    mean = first.length_mean + delta * second.counted / total

    def scatter(item: CroftonEstimate) -> float:
        # сумма квадратов отклонений, восстановленная по стандартной ошибке
        return item.std_error**2 * item.counted * (item.counted - 1)

    combined = scatter(first) + scatter(second) + delta**2 * first.counted * second.counted / total
    return CroftonEstimate(
        length_mean=mean,
        std_error=float(np.sqrt(combined / (total - 1) / total)),
        n_samples=first.n_samples + second.n_samples,
        seed=first.seed,
        rejected=first.rejected + second.rejected,
        exhausted=first.exhausted + [first.n_samples + index for index in second.exhausted],
    )


def width_upper_bound(p: int) -> float:
    """
    Верхняя граница p-ширины круглой сферы 2π⌊√p⌋.

    :param p: Номер ширины
    :return:
    """

    if p < 1:
        raise InvalidInput("p must be positive", {"p": p})
    return 2 * math.pi * math.isqrt(p)


def random_trial_polynomial(k: int, seed: int, trial: int) -> SpherePolynomial:
    """
    Случайный многочлен испытания ``trial`` (детерминирован по seed).

    :param k: Степень
    :param seed: Ключ генератора
    :param trial: Номер испытания
    :return:
    """

    return SpherePolynomial.random(k, stream(seed, trial, POLYNOMIAL_STREAM))


def mass_bound_report(k: int, estimates: list[CroftonEstimate]) -> MassBoundReport:
    """
    Сводка по испытаниям и проверка границы 2πk.

    :param k: Степень
    :param estimates: Оценки длины по испытаниям
    :return:
    """

    worst = max(estimates, key=lambda item: item.length_mean)
    max_std_error = max(item.std_error for item in estimates)
    bound = 2 * math.pi * k
    report = MassBoundReport(
        k=k,
        trials=len(estimates),
        per_trial=estimates,
        max=worst.length_mean,
        max_std_error=max_std_error,
        bound=bound,
        margin=bound - worst.length_mean,
    )
    if report.margin <= -3 * max_std_error:
        raise MassBoundViolated("Crofton length exceeds 2πk", {"k": k, "max": report.max, "bound": bound})
    return report


@traced("verify_mass_bound")
def verify_mass_bound(k: int, trials: int, n_samples: int, seed: int) -> MassBoundReport:
    """
    Проверка границы 2πk для длин нулевых множеств случайных многочленов степени k.

    Испытание t использует многочлен из потока (seed, t) и полюса с ключом seed + t + 1.

    :param k: Степень, от 1 до 6
    :param trials: Количество испытаний
    :param n_samples: Объем выборки в каждом испытании
    :param seed: Ключ генератора
    :return:
    """

    if not 1 <= k <= 6:
        raise InvalidInput("k must lie in [1, 6]", {"k": k})

    estimates = [
        crofton_length(random_trial_polynomial(k, seed, trial), n_samples, seed + trial + 1) for trial in range(trials)
    ]
    return mass_bound_report(k, estimates)
