"""
Описание моделей данных заметаний многочленами.
"""

import numpy as np
from pydantic import BaseModel, Field, validator


class GreatCircle(BaseModel):
    """
    Большая окружность C_ξ = S² ∩ ξ^⊥.

    .. code-block::

        GreatCircle(
            pole=(0.0, 0.0, 1.0),
        )
    """

    pole: tuple[float, float, float]

    class Config:
        allow_mutation = False

    @validator("pole")
    def _unit_pole(  # pylint: disable=no-self-argument
        cls, value: tuple[float, float, float]
    ) -> tuple[float, float, float]:
        if abs(float(np.linalg.norm(value)) - 1.0) > 1e-12:
            raise ValueError("pole must be a unit vector")
        return value

    def basis(self) -> np.ndarray:
        """
        Ортонормированный базис (e₁, e₂) плоскости окружности, параметризация cos θ·e₁ + sin θ·e₂.

        e₁ – проекция координатной оси, наименее коллинеарной полюсу; e₂ = ξ × e₁.

        :return: Массив 2 × 3
        """

        return circle_bases(np.array([self.pole]))[0]


def circle_bases(poles: np.ndarray) -> np.ndarray:
    """
    Базисы плоскостей больших окружностей для набора полюсов.

    :param poles: Массив n × 3 единичных векторов
    :return: Массив n × 2 × 3
    """

    axes = np.eye(3)[np.argmin(np.abs(poles), axis=1)]
    first = axes - np.sum(axes * poles, axis=1, keepdims=True) * poles
    first /= np.linalg.norm(first, axis=1, keepdims=True)
    second = np.cross(poles, first)
    return np.stack([first, second], axis=1)


class TrigPolynomial(BaseModel):
    """
    Тригонометрический многочлен Σⱼ (cⱼ cos jθ + sⱼ sin jθ), 0 ≤ j ≤ k.

    .. code-block::

        TrigPolynomial(
            cos_coeffs=(0.0, 0.0, 0.0),
            sin_coeffs=(0.0, 0.0, 0.5),
        )
    """

    cos_coeffs: tuple[float, ...]
    sin_coeffs: tuple[float, ...]

    class Config:
        allow_mutation = False

    @property
    def degree(self) -> int:
        return len(self.cos_coeffs) - 1

    def __call__(self, theta: np.ndarray) -> np.ndarray:
        orders = np.arange(self.degree + 1)
        angles = np.multiply.outer(np.asarray(theta, dtype=float), orders)
        return np.cos(angles) @ np.array(self.cos_coeffs) + np.sin(angles) @ np.array(self.sin_coeffs)


class CroftonEstimate(BaseModel):
    """
    Оценка длины нулевого множества по формуле Крофтона.

    .. code-block::

        CroftonEstimate(
            length_mean=6.283185307179586,
            std_error=0.0,
            n_samples=100000,
            seed=20240229,
            rejected=0,
            exhausted=[],
        )
    """

    length_mean: float
    std_error: float = Field(ge=0.0)
    n_samples: int = Field(ge=1)
    seed: int
    # количество отвергнутых окружностей, на которых многочлен тождественно равен нулю
    rejected: int = 0
    # номера элементов выборки, для которых все повторные розыгрыши вырождены; в оценку не входят
    exhausted: list[int] = []

    @property
    def counted(self) -> int:
        return self.n_samples - len(self.exhausted)

    class Config:
        allow_mutation = False


class MassBoundReport(BaseModel):
    """
    Результат проверки границы sup M ≤ 2πk на случайных многочленах.

    .. code-block::

        MassBoundReport(
            k=1,
            trials=50,
            per_trial=[CroftonEstimate(...), ...],
            max=6.283185307179586,
            max_std_error=0.0,
            bound=6.283185307179586,
            margin=0.0,
        )
    """

    k: int
    trials: int
    per_trial: list[CroftonEstimate]
    max: float
    max_std_error: float
    bound: float
    margin: float

    class Config:
        allow_mutation = False
