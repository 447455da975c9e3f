"""
Описание моделей данных решетки длин и таблицы ширин.
"""

import functools
import math
from fractions import Fraction
from typing import Any, Union

import numpy as np
from pydantic import BaseModel, Field, validator

# рациональные границы π (50 знаков): π ∈ (PI_LOWER, PI_UPPER)
PI_LOWER = Fraction("3.14159265358979323846264338327950288419716939937510")
PI_UPPER = PI_LOWER + Fraction(1, 10**50)

Rational = Union[Fraction, int, float, str]


def as_fraction(value: Rational) -> Fraction:
    """
    Точное рациональное значение: десятичная запись float, а не его двоичное представление.

    :param value: Число или строка
    :return:
    """

    if isinstance(value, float):
        return Fraction(repr(value))
    return Fraction(value)


def exact_sign(turns: int, offset: Fraction) -> int:
    """
    Точный знак 2π·turns + offset по рациональным границам π.

    :param turns: Количество оборотов
    :param offset: Рациональный сдвиг
    :return: −1, 0 или 1
    """

    if turns == 0:
        return (offset > 0) - (offset < 0)
    bounds = (2 * PI_LOWER * turns + offset, 2 * PI_UPPER * turns + offset)
    if min(bounds) > 0:
        return 1
    if max(bounds) < 0:
        return -1
    # π иррационально, при turns ≠ 0 значение не может быть нулем
    raise ArithmeticError("value is indistinguishable from zero at 50 digits of π")


@functools.total_ordering
class Length2Pi(BaseModel):
    """
    Точное значение 2π·turns + offset с рациональным offset.

    .. code-block::

        Length2Pi(
            turns=2,
            offset=Fraction(1, 10),
        )
    """

    turns: int
    offset: Fraction = Fraction(0)

    class Config:
        allow_mutation = False
        arbitrary_types_allowed = True
        json_encoders = {Fraction: str}

    @validator("offset", pre=True)
    def _rational(cls, value: Rational) -> Fraction:  # pylint: disable=no-self-argument
        return as_fraction(value)

    @property
    def value(self) -> float:
        return 2 * math.pi * self.turns + float(self.offset)

    def sign(self) -> int:
        return exact_sign(self.turns, self.offset)

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, Length2Pi):
            return NotImplemented
        return self.turns == other.turns and self.offset == other.offset

    def __lt__(self, other: "Length2Pi") -> bool:
        if self.turns == other.turns:
            return self.offset < other.offset
        return exact_sign(self.turns - other.turns, self.offset - other.offset) < 0

    def __hash__(self) -> int:
        return hash((self.turns, self.offset))

    def __str__(self) -> str:
        if not self.offset:
            return f"2π·{self.turns}"
        if not self.turns:
            return str(self.offset)
        return f"2π·{self.turns} + {self.offset}"


class LatticeStratum(BaseModel):
    """
    Слой решетки n₁ + n₂ + n₃ = turns: сдвиги n₂ + 2n₃ в единицах μ.

    .. code-block::

        LatticeStratum(
            turns=2,
            steps=[0, 1, 2, 3, 4],
        )
    """

    turns: int = Field(ge=1)
    steps: list[int]

    class Config:
        allow_mutation = False

    @property
    def size(self) -> int:
        return len(self.steps)


class PinchInterval(BaseModel):
    """
    Границы 2πm ≤ ω_p ≤ (2π + 2μ)m и p-е значение решетки внутри них.

    .. code-block::

        PinchInterval(
            p=8,
            m=2,
            mu=Fraction(1, 100),
            lower=Length2Pi(turns=2),
            upper=Length2Pi(turns=2, offset=Fraction(1, 25)),
            lattice_value=Length2Pi(turns=2, offset=Fraction(1, 25)),
        )
    """

    p: int = Field(ge=1)
    m: int = Field(ge=1)
    mu: Fraction
    lower: Length2Pi
    upper: Length2Pi
    lattice_value: Length2Pi

    class Config:
        allow_mutation = False
        arbitrary_types_allowed = True
        json_encoders = {Fraction: str}

    @property
    def width(self) -> float:
        return float(self.upper.offset - self.lower.offset)

    def contains(self, value: Length2Pi) -> bool:
        return self.lower <= value <= self.upper

    def row(self) -> dict[str, Any]:
        return {
            "p": self.p,
            "mu": str(self.mu),
            "lower": self.lower.value,
            "upper": self.upper.value,
            "lattice_value": str(self.lattice_value),
        }


class WidthTable(BaseModel):
    """
    Таблица ω_p = 2π⌊√p⌋ для p = 1..p_max с верхними оценками Крофтона и интервалами сжатия.

    .. code-block::

        WidthTable(
            p_max=3,
            turns=np.array([1, 1, 1]),
            upper=np.array([6.283185307179586] * 3),
            pinches=[PinchInterval(...), ...],
        )
    """

    p_max: int = Field(ge=1)
    turns: np.ndarray
    upper: np.ndarray
    pinches: list[PinchInterval] = []

    class Config:
        allow_mutation = False
        arbitrary_types_allowed = True

    @validator("turns")
    def _stratified(cls, value: np.ndarray, values: dict[str, Any]) -> np.ndarray:  # pylint: disable=no-self-argument
        if "p_max" in values and value.shape != (values["p_max"],):
            raise ValueError("one entry per p is required")
        if np.any(np.diff(value) < 0):
            raise ValueError("widths must be nondecreasing in p")
        p_max = len(value)
        for m in range(1, math.isqrt(p_max) + 1):
            last = min((m + 1) ** 2 - 1, p_max)
            if value[m * m - 1] != value[last - 1]:
                raise ValueError(f"widths must be constant on [{m * m}, {last}]")
        return value

    def width(self, p: int) -> Length2Pi:
        return Length2Pi(turns=int(self.turns[p - 1]))

    def values(self) -> np.ndarray:
        return 2 * np.pi * self.turns

    def rows(self) -> list[dict[str, Any]]:
        return [
            {"p": p, "omega": str(self.width(p)), "value": float(value), "upper": float(upper)}
            for p, value, upper in zip(range(1, self.p_max + 1), self.values(), self.upper)
        ]


class QuantizationReport(BaseModel):
    """
    Значения решетки до 2πm + 1 и результат проверки подсчета.

    .. code-block::

        QuantizationReport(
            mu=Fraction(1, 10),
            m=1,
            values=[Length2Pi(turns=1), ...],
            count=3,
            expected=3,
            strata=[3],
        )
    """

    mu: Fraction
    m: int
    values: list[Length2Pi]
    count: int
    expected: int
    strata: list[int]

    class Config:
        allow_mutation = False
        arbitrary_types_allowed = True

    def rows(self) -> list[dict[str, Any]]:
        return [
            {"index": index, "symbolic": str(item), "value": item.value} for index, item in enumerate(self.values, 1)
        ]
