"""
Описание моделей данных геометрии поверхностей.
"""

import numpy as np
from pydantic import BaseModel, validator


class GeodesicSegment(BaseModel):
    """
    Минимизирующий геодезический отрезок между двумя точками поверхности.

    Касательные в концах направлены внутрь отрезка: ``start_tangent`` в точке
    ``start`` смотрит на ``end``, ``end_tangent`` в точке ``end`` смотрит на ``start``.

    .. code-block::

        GeodesicSegment(
            start=np.array([1.0, 0.0, 0.0]),
            end=np.array([0.0, 1.0, 0.0]),
            samples=np.array([[1.0, 0.0, 0.0], ..., [0.0, 1.0, 0.0]]),
            arclengths=np.array([0.0, ..., 1.5707963267948966]),
            length=1.5707963267948966,
            start_tangent=np.array([0.0, 1.0, 0.0]),
            end_tangent=np.array([1.0, 0.0, 0.0]),
        )
    """

    start: np.ndarray
    end: np.ndarray
    samples: np.ndarray
    arclengths: np.ndarray
    length: float
    start_tangent: np.ndarray
    end_tangent: np.ndarray

    class Config:
        arbitrary_types_allowed = True
        allow_mutation = False

    @validator("length")
    def _positive_length(cls, value: float) -> float:  # pylint: disable=no-self-argument
        if value <= 0:
            raise ValueError("segment length must be positive")
        return value

    def reversed(self) -> "GeodesicSegment":
        """
        Тот же отрезок с обратной ориентацией.

        :return:
        """

        return GeodesicSegment(
            start=self.end,
            end=self.start,
            samples=self.samples[::-1].copy(),
            arclengths=self.length - self.arclengths[::-1],
            length=self.length,
            start_tangent=self.end_tangent,
            end_tangent=self.start_tangent,
        )


class PrincipalLengths(BaseModel):
    """
    Длины главных геодезических γ₁, γ₂, γ₃ эллипсоида.

    .. code-block::

        PrincipalLengths(
            ell=(6.283185307179586, 6.283185307179586, 6.283185307179586),
        )
    """

    ell: tuple[float, float, float]

    class Config:
        allow_mutation = False

    @validator("ell")
    def _positive(  # pylint: disable=no-self-argument
        cls, value: tuple[float, float, float]
    ) -> tuple[float, float, float]:
        if any(item <= 0 for item in value):
            raise ValueError("principal lengths must be positive")
        return value

    def as_array(self) -> np.ndarray:
        """
        Длины в виде массива numpy.

        :return:
        """

        return np.array(self.ell, dtype=float)


class TunedEllipsoid(BaseModel):
    """
    Результат подбора эллипсоида с длинами (2π, 2π + μ, 2π + 2μ).

    .. code-block::

        TunedEllipsoid(
            mu=0.01,
            coefficients=(0.99045, 0.99681, 1.00317),
            lengths=PrincipalLengths(ell=(6.283185, 6.293185, 6.303185)),
            residual=3.1e-13,
            iterations=3,
        )
    """

    mu: float
    coefficients: tuple[float, float, float]
    lengths: PrincipalLengths
    residual: float
    iterations: int

    class Config:
        allow_mutation = False

    @property
    def semi_axes(self) -> tuple[float, float, float]:
        """
        Полуоси эллипсоида bᵢ = aᵢ^(−1/2).

        :return:
        """

        return tuple(float(item**-0.5) for item in self.coefficients)  # type: ignore[return-value]
