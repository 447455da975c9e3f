"""
Описание моделей данных фазовых переходов.
"""

from typing import Literal, Optional

import numpy as np
from pydantic import BaseModel, root_validator

from phase_field.potentials import PotentialKind

Geometry = Literal["sphere", "flat"]


class FieldState1D(BaseModel):
    """
    Одномерное (осесимметричное на S² или плоское) дискретное поле.

    Сетка ячеечная: для сферы θᵢ = (i + ½)·π/N, для отрезка [−L, L] узлы
    xᵢ = −L + (i + ½)·2L/N.

    .. code-block::

        FieldState1D(
            geometry="sphere",
            grid=np.array([0.0015, ..., 3.1401]),
            values=np.array([-0.99999, ..., 0.99999]),
            eps=0.05,
        )
    """

    geometry: Geometry = "sphere"
    grid: np.ndarray
    values: np.ndarray
    eps: float
    half_length: Optional[float] = None
    residual: Optional[float] = None
    iterations: Optional[int] = None
    index: Optional[int] = None

    class Config:
        arbitrary_types_allowed = True
        allow_mutation = False

    @root_validator(skip_on_failure=True)
    def _check(cls, values: dict) -> dict:  # pylint: disable=no-self-argument
        grid, field = values["grid"], values["values"]
        if grid.shape != field.shape or grid.ndim != 1:
            raise ValueError("grid and values must be 1D arrays of equal length")
        if grid.size < 64:
            raise ValueError("at least 64 grid points are required")
        if values["eps"] <= 0 or (values["geometry"] == "sphere" and values["eps"] >= 1):
            raise ValueError("eps must be positive and below 1 on the sphere")
        if np.max(np.abs(field)) > 1.0 + 1e-12:
            raise ValueError("values must lie in [-1, 1]")
        if values["geometry"] == "flat" and values["half_length"] is None:
            raise ValueError("flat states need half_length")
        return values

    @property
    def spacing(self) -> float:
        if self.geometry == "sphere":
            return np.pi / self.grid.size
        return 2 * self.half_length / self.grid.size  # type: ignore[operator]

    def with_values(self, values: np.ndarray, **extra) -> "FieldState1D":
        """
        Копия состояния с новыми значениями на той же сетке.

        :param values: Новые значения
        :return:
        """

        return FieldState1D(
            geometry=self.geometry,
            grid=self.grid,
            values=values,
            eps=self.eps,
            half_length=self.half_length,
            **extra,
        )


class FieldState2D(BaseModel):
    """
    Поле на квадрате [−L, L]² на равномерной сетке n × n (индексация ``ij``: первый
    индекс по x). Граничные значения фиксированы при построении.

    .. code-block::

        FieldState2D(
            half_width=25.0,
            values=np.zeros((256, 256)),
            eps=1.0,
            kind="SineGordonNormalized",
            order=4,
        )
    """

    half_width: float
    values: np.ndarray
    eps: float
    kind: PotentialKind = "SineGordonNormalized"
    order: Literal[2, 4] = 2
    residual: Optional[float] = None
    iterations: Optional[int] = None

    class Config:
        arbitrary_types_allowed = True
        allow_mutation = False

    @root_validator(skip_on_failure=True)
    def _check(cls, values: dict) -> dict:  # pylint: disable=no-self-argument
        field = values["values"]
        if field.ndim != 2 or field.shape[0] != field.shape[1] or field.shape[0] < 8:
            raise ValueError("values must be a square n x n array with n >= 8")
        if values["half_width"] <= 0 or values["eps"] <= 0:
            raise ValueError("half_width and eps must be positive")
        field.setflags(write=False)
        return values

    @property
    def size(self) -> int:
        return int(self.values.shape[0])

    @property
    def axis(self) -> np.ndarray:
        return np.linspace(-self.half_width, self.half_width, self.size)

    @property
    def spacing(self) -> float:
        return 2 * self.half_width / (self.size - 1)

    @property
    def boundary(self) -> np.ndarray:
        """
        Маска граничных узлов.

        :return:
        """

        mask = np.zeros(self.values.shape, dtype=bool)
        mask[0, :] = mask[-1, :] = mask[:, 0] = mask[:, -1] = True
        return mask

    def mesh(self) -> tuple[np.ndarray, np.ndarray]:
        return np.meshgrid(self.axis, self.axis, indexing="ij")


class MinMaxRow(BaseModel):
    """
    Строка отчета по осесимметричному решению на S².

    .. code-block::

        MinMaxRow(
            eps=0.05,
            energy=5.07,
            mass=6.25,
            index=1,
            residual=3.2e-12,
        )
    """

    eps: float
    energy: float
    mass: float
    index: int
    residual: float
