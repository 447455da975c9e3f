"""
Многочлены f(x, y) + z·g(x, y) на S², deg f ≤ k, deg g ≤ k − 1.
"""

from functools import lru_cache
from typing import Callable, Mapping, Optional

import numpy as np
from pydantic import BaseModel, root_validator

from errors import InvalidInput


@lru_cache(maxsize=None)
def graded_monomials(degree: int) -> tuple[tuple[int, int], ...]:
    """
    Показатели (a, b) мономов xᵃyᵇ степени ≤ degree в градуированном порядке.

    Внутри одной степени d порядок x^d, x^(d−1)y, …, y^d.

    :param degree: Максимальная степень
    :return:
    """

    return tuple((total - power, power) for total in range(degree + 1) for power in range(total + 1))


def monomial_count(degree: int) -> int:
    """
    Количество мономов от x, y степени ≤ degree.

    :param degree: Максимальная степень
    :return:
    """

    return 0 if degree < 0 else (degree + 1) * (degree + 2) // 2


@lru_cache(maxsize=None)
def fibonacci_sphere(count: int) -> np.ndarray:
    """
    Почти равномерная сетка точек на S² (спираль Фибоначчи).

    :param count: Количество точек
    :return:
    """

    index = np.arange(count) + 0.5
    heights = 1.0 - 2.0 * index / count
    radius = np.sqrt(1.0 - heights**2)
    angles = np.pi * (1.0 + np.sqrt(5.0)) * index
    return np.stack([radius * np.cos(angles), radius * np.sin(angles), heights], axis=1)


def basis_values(k: int, points: np.ndarray) -> np.ndarray:
    """
    Значения базисных функций степени k в точках (столбцы: мономы f, затем z·мономы g).

    :param k: Степень
    :param points: Массив (..., 3)
    :return: Массив (..., (k+1)²)
    """

    x, y, z = points[..., 0], points[..., 1], points[..., 2]
    columns = [x**a * y**b for a, b in graded_monomials(k)]
    columns += [z * x**a * y**b for a, b in graded_monomials(k - 1)] if k >= 1 else []
    return np.stack(columns, axis=-1)


class SpherePolynomial(BaseModel):
    """
    Многочлен f(x, y) + z·g(x, y) степени k, ограниченный на S².

    .. code-block::

        # многочлен xy степени 2
        SpherePolynomial(
            k=2,
            f_coeffs=(0.0, 0.0, 0.0, 0.0, 1.0, 0.0),
            g_coeffs=(0.0, 0.0, 0.0),
        )
    """

    k: int
    f_coeffs: tuple[float, ...]
    g_coeffs: tuple[float, ...]

    class Config:
        allow_mutation = False

    @root_validator(skip_on_failure=True)
    def _check_shape(cls, values: dict) -> dict:  # pylint: disable=no-self-argument
        k = values["k"]
        if k < 1:
            raise ValueError("degree bound must be positive")
        if len(values["f_coeffs"]) != monomial_count(k) or len(values["g_coeffs"]) != monomial_count(k - 1):
            raise ValueError("coefficient vector length must equal (k+1)²")
        if not any(values["f_coeffs"]) and not any(values["g_coeffs"]):
            raise ValueError("polynomial must not be identically zero")
        return values

    @classmethod
    def from_vector(cls, k: int, vector: np.ndarray) -> "SpherePolynomial":
        """
        Построение по вектору коэффициентов длины (k+1)².

        :param k: Степень
        :param vector: Коэффициенты f, затем g
        :return:
        """

        split = monomial_count(k)
        return cls(
            k=k,
            f_coeffs=tuple(float(item) for item in vector[:split]),
            g_coeffs=tuple(float(item) for item in vector[split:]),
        )

    @classmethod
    def from_terms(
        cls, k: int, f: Mapping[tuple[int, int], float], g: Optional[Mapping[tuple[int, int], float]] = None
    ) -> "SpherePolynomial":
        """
        Построение по словарям {(a, b): коэффициент при xᵃyᵇ}.

        :param k: Степень
        :param f: Мономы f
        :param g: Мономы g (при множителе z)
        :return:
        """

        f_order = {item: index for index, item in enumerate(graded_monomials(k))}
        g_order = {item: index for index, item in enumerate(graded_monomials(k - 1))}
        vector = np.zeros(monomial_count(k) + monomial_count(k - 1))
        try:
            for exponent, value in f.items():
                vector[f_order[exponent]] = value
            for exponent, value in (g or {}).items():
                vector[monomial_count(k) + g_order[exponent]] = value
        except KeyError as error:
            raise InvalidInput("Monomial exceeds the degree bound", {"monomial": error.args[0]}) from error
        return cls.from_vector(k, vector)

    @classmethod
    def fit(cls, k: int, func: Callable[[np.ndarray], np.ndarray]) -> "SpherePolynomial":
        """
        Представление функции на S² (многочлена степени ≤ k от x, y, z) многочленом вида f + z·g.

        Коэффициенты находятся методом наименьших квадратов по точкам сетки Фибоначчи.

        :param k: Степень
        :param func: Функция от массива точек (n, 3)
        :return:
        """

        points = fibonacci_sphere(4 * (k + 1) ** 2)
        vector, *_ = np.linalg.lstsq(basis_values(k, points), func(points), rcond=None)
        return cls.from_vector(k, vector)

    @classmethod
    def from_planes(cls, normals: np.ndarray) -> "SpherePolynomial":
        """
        Произведение линейных форм ⟨n, x⟩: нулевое множество – объединение больших окружностей.

        :param normals: Массив m × 3 нормалей плоскостей
        :return:
        """

        normals = np.atleast_2d(np.asarray(normals, dtype=float))
        return cls.fit(len(normals), lambda points: np.prod(points @ normals.T, axis=1))

    @classmethod
    def random(cls, k: int, generator: np.random.Generator) -> "SpherePolynomial":
        """
        Случайный многочлен с гауссовыми коэффициентами, нормированный на единицу.

        :param k: Степень
        :param generator: Генератор случайных чисел
        :return:
        """

        vector = generator.standard_normal((k + 1) ** 2)
        return cls.from_vector(k, vector / np.linalg.norm(vector))

    @property
    def vector(self) -> np.ndarray:
        """
        Вектор коэффициентов (f, затем g).

        :return:
        """

        return np.array(self.f_coeffs + self.g_coeffs, dtype=float)

    def normalized(self) -> "SpherePolynomial":
        """
        Тот же проективный класс с единичной нормой коэффициентов.

        :return:
        """

        vector = self.vector
        return self.from_vector(self.k, vector / np.linalg.norm(vector))

    def scaled(self, factor: float) -> "SpherePolynomial":
        """
        Умножение на ненулевую константу.

        :param factor: Множитель
        :return:
        """

        if factor == 0:
            raise InvalidInput("Scale factor must be nonzero")
        return self.from_vector(self.k, factor * self.vector)

    def rotated(self, rotation: np.ndarray) -> "SpherePolynomial":
        """
        Композиция x ↦ P(Rx) с поворотом пространства.

        :param rotation: Ортогональная матрица 3 × 3
        :return:
        """

        return self.fit(self.k, lambda points: self(points @ np.asarray(rotation).T))

    def __call__(self, points: np.ndarray) -> np.ndarray:
        return basis_values(self.k, np.asarray(points, dtype=float)) @ self.vector
