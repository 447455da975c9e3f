"""
Счетчиковые генераторы случайных чисел для воспроизводимых выборок.

Выборка делится на блоки по ``SAMPLES_CHUNK`` элементов; блок с номером c читается из
потока Philox с ключом seed и старшим словом счетчика c, поэтому любой блок можно
получить независимо от остальных и в любом порядке.
"""

import numpy as np

from settings import SAMPLES_CHUNK

# слово счетчика, различающее основные, повторные и служебные потоки
MAIN_STREAM = 0
REDRAW_STREAM = 1
POLYNOMIAL_STREAM = 2


def stream(seed: int, block: int, purpose: int = MAIN_STREAM) -> np.random.Generator:
    """
    Генератор для блока ``block`` потока ``purpose``.

    :param seed: Ключ генератора (неотрицательное целое)
    :param block: Номер блока
    :param purpose: Назначение потока
    :return:
    """

    counter = np.array([0, 0, purpose, block], dtype=np.uint64)
    return np.random.Generator(np.random.Philox(key=seed, counter=counter))


def uniform_directions(generator: np.random.Generator, count: int) -> np.ndarray:
    """
    Равномерно распределенные на S² направления (нормированные гауссовы векторы).

    :param generator: Генератор
    :param count: Количество направлений
    :return:
    """

    vectors = generator.standard_normal((count, 3))
    return vectors / np.linalg.norm(vectors, axis=1, keepdims=True)


def chunk_sizes(n_samples: int) -> list[int]:
    """
    Размеры блоков выборки объема ``n_samples``.

    :param n_samples: Объем выборки
    :return:
    """

    full, rest = divmod(n_samples, SAMPLES_CHUNK)
    return [SAMPLES_CHUNK] * full + ([rest] if rest else [])


def sample_poles(seed: int, n_samples: int) -> np.ndarray:
    """
    Полюса окружностей для всей выборки (без учета повторных розыгрышей).

    :param seed: Ключ генератора
    :param n_samples: Объем выборки
    :return: Массив n × 3
    """

    return np.concatenate(
        [uniform_directions(stream(seed, block), size) for block, size in enumerate(chunk_sizes(n_samples))]
    )
