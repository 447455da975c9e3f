"""
Ограничение многочленов на большие окружности и подсчет нулей.

Тригонометрический многочлен степени k после замены w = e^(iθ) и умножения на w^k
становится алгебраическим многочленом степени 2k; его корни ищутся как собственные
значения сопровождающей матрицы, нули на окружности отвечают корням с |w| = 1.
"""

import numpy as np

from crofton_sweepout.models import GreatCircle, TrigPolynomial, circle_bases
from crofton_sweepout.polynomials import SpherePolynomial
from errors import IdenticallyZeroOnCircle, MassBoundViolated

# порог тождественного нуля для коэффициентов ограничения
ZERO_TOL = 1e-13
# допуск на модуль корня
UNIT_TOL = 1e-8
# угловое расстояние, в пределах которого корни склеиваются
CLUSTER_TOL = 1e-7


def restriction_coefficients(poly: SpherePolynomial, poles: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """
    Коэффициенты ограничений многочлена на окружности C_ξ для набора полюсов.

    :param poly: Многочлен
    :param poles: Массив n × 3 единичных полюсов
    :return: Массивы (n, k+1) коэффициентов при cos jθ и sin jθ
    """

    count = 4 * poly.k + 4
    theta = 2 * np.pi * np.arange(count) / count
    bases = circle_bases(np.atleast_2d(poles))
    points = np.cos(theta)[None, :, None] * bases[:, None, 0, :] + np.sin(theta)[None, :, None] * bases[:, None, 1, :]
    spectrum = np.fft.rfft(poly(points), axis=1)[:, : poly.k + 1] / count

    cos_coeffs = 2 * spectrum.real
    sin_coeffs = -2 * spectrum.imag
    cos_coeffs[:, 0] = spectrum[:, 0].real
    sin_coeffs[:, 0] = 0.0
    return cos_coeffs, sin_coeffs


def restrict_to_circle(poly: SpherePolynomial, circle: GreatCircle) -> TrigPolynomial:
    """
    Ограничение многочлена на большую окружность.

    :param poly: Многочлен
    :param circle: Окружность
    :return:
    """

    cos_coeffs, sin_coeffs = restriction_coefficients(poly, np.array([circle.pole]))
    return TrigPolynomial(
        cos_coeffs=tuple(float(item) for item in cos_coeffs[0]),
        sin_coeffs=tuple(float(item) for item in sin_coeffs[0]),
    )


def _distinct_angles(angles: np.ndarray) -> int:
    if angles.size == 0:
        return 0
    angles = np.sort(np.mod(angles, 2 * np.pi))
    gaps = np.diff(np.append(angles, angles[0] + 2 * np.pi))
    return max(1, int(np.count_nonzero(gaps > CLUSTER_TOL)))


def _count_group(cos_coeffs: np.ndarray, sin_coeffs: np.ndarray, degree: int) -> np.ndarray:
    """
    Подсчет различных нулей на окружности для многочленов одной эффективной степени.

    :param cos_coeffs: Коэффициенты при cos (n, degree+1)
    :param sin_coeffs: Коэффициенты при sin (n, degree+1)
    :param degree: Эффективная степень
    :return: Количество нулей для каждой строки
    """

    size = 2 * degree
    coeffs = np.zeros((len(cos_coeffs), size + 1), dtype=complex)
    coeffs[:, degree] = cos_coeffs[:, 0]
    orders = np.arange(1, degree + 1)
    coeffs[:, degree + orders] = (cos_coeffs[:, orders] - 1j * sin_coeffs[:, orders]) / 2
    coeffs[:, degree - orders] = (cos_coeffs[:, orders] + 1j * sin_coeffs[:, orders]) / 2

    companion = np.zeros((len(coeffs), size, size), dtype=complex)
    companion[:, np.arange(1, size), np.arange(size - 1)] = 1.0
    companion[:, :, -1] = -coeffs[:, :size] / coeffs[:, size : size + 1]
    roots = np.linalg.eigvals(companion)

    counts = np.empty(len(coeffs), dtype=int)
    for row, values in enumerate(roots):
        on_circle = values[np.abs(np.abs(values) - 1.0) < UNIT_TOL]
        counts[row] = _distinct_angles(np.angle(on_circle))
    return counts


def count_zeros_batch(poly: SpherePolynomial, poles: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """
    Количество нулей многочлена на окружностях C_ξ для набора полюсов.

    :param poly: Многочлен
    :param poles: Массив n × 3 единичных полюсов
    :return: Количества нулей и маска окружностей, на которых ограничение тождественно нулевое
    """

    poly = poly.normalized()
    cos_coeffs, sin_coeffs = restriction_coefficients(poly, poles)
    magnitude = np.maximum(np.abs(cos_coeffs), np.abs(sin_coeffs))
    significant = magnitude >= ZERO_TOL
    degrees = np.where(significant.any(axis=1), poly.k - np.argmax(significant[:, ::-1], axis=1), -1)

    counts = np.zeros(len(poles), dtype=int)
    for degree in np.unique(degrees):
        if degree <= 0:
            continue
        rows = degrees == degree
        counts[rows] = _count_group(cos_coeffs[rows, : degree + 1], sin_coeffs[rows, : degree + 1], int(degree))

    if np.any(counts > 2 * poly.k):
        raise MassBoundViolated("Zero count exceeds 2k on a circle", {"k": poly.k, "max": int(counts.max())})
    return counts, degrees < 0


def count_zeros_on_circle(poly: SpherePolynomial, circle: GreatCircle) -> int:
    """
    Количество различных нулей многочлена на большой окружности.

    :param poly: Многочлен
    :param circle: Окружность
    :return:
    """

    counts, degenerate = count_zeros_batch(poly, np.array([circle.pole]))
    if degenerate[0]:
        raise IdenticallyZeroOnCircle("Restriction vanishes identically", {"pole": circle.pole})
    return int(counts[0])
