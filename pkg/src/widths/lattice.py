"""
Решетка длин {2π(n₁ + n₂ + n₃) + μ(n₂ + 2n₃)} и проверка подсчета значений.

Все значения хранятся точно: целое число оборотов 2π и рациональный сдвиг,
кратный μ. Два значения с разными парами (обороты, сдвиг) различны, так как π
иррационально.
"""

import itertools
import logging
import math
from fractions import Fraction
from typing import Optional, Union

from errors import CountMismatch, InvalidInput, MuTooLarge
from widths.models import Length2Pi, LatticeStratum, PinchInterval, QuantizationReport, Rational, as_fraction

logger = logging.getLogger(__name__)

Bound = Union[Length2Pi, Rational]


def _bound(bound: Bound) -> Length2Pi:
    if isinstance(bound, Length2Pi):
        return bound
    return Length2Pi(turns=0, offset=as_fraction(bound))


def _checked_mu(mu: Rational) -> Fraction:
    value = as_fraction(mu)
    if value <= 0:
        raise InvalidInput("mu must be positive", {"mu": str(value)})
    return value


def stratum_steps(turns: int) -> list[int]:
    """
    Сдвиги n₂ + 2n₃ по всем тройкам с n₁ + n₂ + n₃ = turns (без повторов, по возрастанию).

    :param turns: Количество оборотов j
    :return:
    """

    return sorted({n2 + 2 * n3 for n3 in range(turns + 1) for n2 in range(turns - n3 + 1)})


def quantization_values(mu: Rational, bound: Bound) -> list[Length2Pi]:
    """
    Значения решетки в (0, bound] по возрастанию.

    .. code-block::

        quantization_values("0.1", Length2Pi(turns=1, offset=1))

    :param mu: Параметр μ > 0
    :param bound: Верхняя граница (точная или рациональная)
    :return:
    """

    mu = _checked_mu(mu)
    limit = _bound(bound)
    if limit.sign() <= 0:
        raise InvalidInput("bound must be positive", {"bound": str(limit)})

    values = []
    turns = 1
    while Length2Pi(turns=turns) <= limit:
        for steps in stratum_steps(turns):
            value = Length2Pi(turns=turns, offset=steps * mu)
            if value <= limit:
                values.append(value)
        turns += 1
    return sorted(values)


def brute_force_values(mu: Rational, bound: Bound) -> list[Length2Pi]:
    """
    Независимый перебор троек n₁, n₂, n₃ ≤ ⌈bound/2π⌉ + 1.

    :param mu: Параметр μ > 0
    :param bound: Верхняя граница
    :return:
    """

    mu = _checked_mu(mu)
    limit = _bound(bound)
    top = math.ceil(limit.value / (2 * math.pi)) + 1
    found = set()
    for n1, n2, n3 in itertools.product(range(top + 1), repeat=3):
        value = Length2Pi(turns=n1 + n2 + n3, offset=(n2 + 2 * n3) * mu)
        if value.sign() > 0 and value <= limit:
            found.add(value)
    return sorted(found)


def lattice_strata(mu: Rational, m: int) -> list[LatticeStratum]:
    """
    Слои j = 1..m значений решетки до 2πm + 1.

    :param mu: Параметр μ
    :param m: Количество слоев
    :return:
    """

    if m < 1:
        raise InvalidInput("m must be positive", {"m": m})
    values = quantization_values(mu, Length2Pi(turns=m, offset=1))
    mu = as_fraction(mu)
    return [
        LatticeStratum(turns=j, steps=[int(item.offset / mu) for item in values if item.turns == j])
        for j in range(1, m + 1)
    ]


def _check_mu(mu: Rational, m: int) -> None:
    if as_fraction(mu) >= Fraction(1, 2 * m):
        raise MuTooLarge("mu must be below 1/(2m)", {"mu": str(as_fraction(mu)), "m": m})


def count_check(m: int, mu: Rational) -> int:
    """
    Подсчет значений решетки в (0, 2πm + 1]: ровно (m + 1)² − 1 при 0 < μ < 1/(2m).

    Проверяет, что слой j равен {0, μ, …, 2jμ}, и сверяет перечисление с полным перебором.

    :param m: Количество слоев
    :param mu: Параметр μ
    :return: Количество значений
    """

    if m < 1:
        raise InvalidInput("m must be positive", {"m": m})
    _checked_mu(mu)
    _check_mu(mu, m)

    bound = Length2Pi(turns=m, offset=1)
    values = quantization_values(mu, bound)
    for stratum in lattice_strata(mu, m):
        if stratum.steps != list(range(2 * stratum.turns + 1)):
            raise CountMismatch(
                "lattice stratum is not {0, μ, …, 2jμ}",
                {"stratum": stratum.turns, "expected": 2 * stratum.turns + 1, "found": stratum.size},
            )
    if values != brute_force_values(mu, bound):
        raise CountMismatch("lattice enumeration differs from the brute-force triple loop", {"m": m})

    expected = (m + 1) ** 2 - 1
    if len(values) != expected:
        raise CountMismatch("lattice count differs from (m+1)²−1", {"m": m, "expected": expected, "found": len(values)})
    logger.debug("Counted %d lattice values for m=%d, mu=%s", len(values), m, as_fraction(mu))
    return len(values)


def check_increasing(values: list[Length2Pi], count: int, mu: Rational) -> None:
    """
    Проверка строгого возрастания первых count значений решетки.

    :param values: Значения решетки по возрастанию
    :param count: Количество проверяемых значений
    :param mu: Параметр μ (для отчета)
    :return:
    """

    for index, (first, second) in enumerate(zip(values[: count - 1], values[1:count]), start=1):
        if not first < second:
            raise CountMismatch(
                "lattice values are not strictly increasing", {"index": index, "mu": str(as_fraction(mu))}
            )


def pinch_from_values(values: list[Length2Pi], p: int, mu: Rational) -> PinchInterval:
    """
    Интервал [2πm, (2π + 2μ)m] для p, проверенный по p-му значению упорядоченной решетки.

    :param values: Значения решетки до 2πm + 1 по возрастанию
    :param p: Номер ширины
    :param mu: Параметр μ
    :return:
    """

    m = math.isqrt(p)
    mu = as_fraction(mu)
    if len(values) < p:
        raise InvalidInput("not enough lattice values for p", {"p": p, "values": len(values)})

    interval = PinchInterval(
        p=p,
        m=m,
        mu=mu,
        lower=Length2Pi(turns=m),
        upper=Length2Pi(turns=m, offset=2 * m * mu),
        lattice_value=values[p - 1],
    )
    if not interval.contains(interval.lattice_value):
        raise CountMismatch(
            "p-th lattice value escapes the pinching interval",
            {"p": p, "mu": str(mu), "value": str(interval.lattice_value)},
        )
    return interval


def pinch_bounds(p: int, mu: Rational, values: Optional[list[Length2Pi]] = None) -> PinchInterval:
    """
    Границы 2πm ≤ ω_p ≤ (2π + 2μ)m при m = ⌊√p⌋ и μ < 1/(2m).

    :param p: Номер ширины
    :param mu: Параметр μ
    :param values: Готовые значения решетки (по умолчанию перечисляются до 2πm + 1)
    :return:
    """

    if p < 1:
        raise InvalidInput("p must be positive", {"p": p})
    m = math.isqrt(p)
    _checked_mu(mu)
    _check_mu(mu, m)
    if values is None:
        values = quantization_values(mu, Length2Pi(turns=m, offset=1))
    check_increasing(values, p, mu)
    return pinch_from_values(values, p, mu)


def quantization_report(mu: Rational, m: int) -> QuantizationReport:
    """
    Значения решетки до 2πm + 1 вместе с проверкой подсчета.

    :param mu: Параметр μ
    :param m: Количество слоев
    :return:
    """

    count = count_check(m, mu)
    return QuantizationReport(
        mu=as_fraction(mu),
        m=m,
        values=quantization_values(mu, Length2Pi(turns=m, offset=1)),
        count=count,
        expected=(m + 1) ** 2 - 1,
        strata=[stratum.size for stratum in lattice_strata(mu, m)],
    )
