"""
Решения Йоста на прямой y = y0 и вронскиан a(λ) = det(Φ₊,₁, Φ₋,₂).

Вместо итераций Пикара интегрируется эквивалентная калиброванная система:
для ψ = e^{(i/4)Kx}·e^{−(J/4)y0}·Φ₋,₂

    ψ′ = diag(iK/2, 0)·ψ + Δ(x)·ψ,  ψ(−X) = (0, 1),

где Δ = A − A⁰; для χ = e^{−(i/4)Kx}·e^{(J/4)y0}·Φ₊,₁ симметрично
χ′ = diag(0, −iK/2)·χ + Δ·χ, χ(X) = (1, 0). Тогда a = det(χ, ψ). Вдоль прямой
интегрируется и мажоранта Q′ = Σ|Δᵢⱼ|; оценки |ψ₁| ≤ e^Q − 1, |ψ₂| ≤ e^Q
проверяются в ходе решения.
"""

import logging
from typing import Callable

import numpy as np
from scipy.integrate import solve_ivp
from scipy.interpolate import CubicSpline

from errors import IntegratorBlowup, InvalidInput, JostCheckFailed, PreconditionDecayFailed
from sg_scattering.fields import ShiftedField
from sg_scattering.lax import Lambda, as_lambda
from sg_scattering.models import JostPair, SpectralParam
from settings import END_WINDOW

logger = logging.getLogger(__name__)

DECAY_TOL = 1e-6
EDGE_TOL = 1e-8
WRONSKIAN_TOL = 1e-8
BLOWUP = 1e12
REAL_AXIS_TOL = 1e-6
HORIZONTAL_TOL = 1e-3
RTOL = 1e-11
ATOL = 1e-13

# коэффициенты (1 − cos u, sin u, ∂ₓu − i∂ᵧu) вдоль прямой
LineData = Callable[[float], tuple[float, float, complex]]


def check_field(field: ShiftedField) -> None:
    """
    Предусловия: ни один конец не равен ±(1, 0), поле затухает к ямам на границе вне окон концов.

    :param field: Поле
    :return:
    """

    for end_x, end_y in field.ends:
        if abs(end_y) < HORIZONTAL_TOL * np.hypot(end_x, end_y):
            raise InvalidInput("rotate the field so that no end is horizontal", {"end": (end_x, end_y)})
    decay = field.boundary_decay(END_WINDOW)
    if decay >= DECAY_TOL:
        raise PreconditionDecayFailed("field does not decay to the wells on the boundary", {"decay": decay})


def edge_deviation(field: ShiftedField, x: float, y0: float) -> float:
    u, u_x, u_y = field.evaluate(np.array([-x, x]), np.array([y0, y0]))
    return float(np.max(np.maximum.reduce([np.abs(np.sin(u)), 1 - np.cos(u), np.hypot(u_x, u_y)])))


def choose_half_length(field: ShiftedField, y0: float) -> float:
    """
    Наименьшее X из лестницы значений, при котором отклонение от ям на концах отрезка < 1e−8.

    :param field: Поле
    :param y0: Ордината прямой
    :return:
    """

    limit = field.half_width - (0.0 if field.profile is not None else 2 * field.spacing)
    for candidate in np.linspace(0.4, 1.0, 13) * limit:
        if edge_deviation(field, candidate, y0) < EDGE_TOL:
            return float(candidate)
    logger.warning(
        "edge deviation %.2e exceeds %.0e at X=%.3f", edge_deviation(field, limit, y0), EDGE_TOL, limit
    )
    return float(limit)


def line_data(field: ShiftedField, y0: float, half_length: float) -> LineData:
    """
    Коэффициенты вдоль прямой: точный профиль либо кубический сплайн по плотной выборке.

    :param field: Поле
    :param y0: Ордината прямой
    :param half_length: Полудлина отрезка интегрирования
    :return:
    """

    if field.profile is not None:
        profile = field.profile

        def exact(x: float) -> tuple[float, float, complex]:
            u, u_x, u_y = profile(np.array(x), np.array(y0))
            return float(1 - np.cos(u)), float(np.sin(u)), complex(u_x - 1j * u_y)

        return exact

    positions = np.linspace(-half_length, half_length, 8 * field.size + 1)
    u, u_x, u_y = field.evaluate(positions, np.full_like(positions, y0))
    spline = CubicSpline(positions, np.stack([1 - np.cos(u), np.sin(u), u_x, u_y], axis=1))

    def sampled(x: float) -> tuple[float, float, complex]:
        one_minus_cos, sin_u, gradient_x, gradient_y = spline(x)
        return float(one_minus_cos), float(sin_u), complex(gradient_x - 1j * gradient_y)

    return sampled


def perturbation(data: tuple[float, float, complex], lam: complex) -> np.ndarray:
    """
    Δ = A − A⁰ = (i/4)[((1 − cos u)/λ)σ₃ − (∂ₓu − i∂ᵧu)σ₂ − (sin u/λ)σ₁].

    :param data: Коэффициенты в точке прямой
    :param lam: Спектральный параметр
    :return:
    """

    one_minus_cos, sin_u, twist = data
    first = -0.25j * sin_u / lam
    second = -0.25j * twist
    third = 0.25j * one_minus_cos / lam
    return np.array([[third, first - 1j * second], [first + 1j * second, -third]])


def _integrate(data: LineData, lam: complex, start: float, stop: float, growing: int) -> Callable:
    rate = 0.5j * (lam - 1 / lam)
    sign = 1.0 if stop > start else -1.0
    initial = np.array([0, 1, 0], dtype=complex) if growing == 0 else np.array([1, 0, 0], dtype=complex)

    def rhs(x: float, state: np.ndarray) -> np.ndarray:
        delta = perturbation(data(x), lam)
        vector = state[:2]
        derivative = delta @ vector
        if growing == 0:
            derivative[0] += rate * vector[0]
        else:
            derivative[1] -= rate * vector[1]
        return np.array([derivative[0], derivative[1], sign * np.abs(delta).sum()])

    solution = solve_ivp(rhs, (start, stop), initial, method="DOP853", rtol=RTOL, atol=ATOL, dense_output=True)
    if not solution.success:
        raise IntegratorBlowup("Jost integration failed", {"message": solution.message})
    if np.abs(solution.y[:2]).max() > BLOWUP:
        raise IntegratorBlowup("Jost solution norm exceeded 1e12", {"lambda": str(lam)})
    return solution.sol


def _check_majorant(solution: Callable, positions: np.ndarray, growing: int) -> None:
    states = solution(positions)
    bound = np.exp(states[2].real)
    decaying, constant = (states[0], states[1]) if growing == 0 else (states[1], states[0])
    slack = 1e-9 * bound
    if np.any(np.abs(decaying) > bound - 1 + slack) or np.any(np.abs(constant) > bound + slack):
        raise JostCheckFailed("Picard majorant violated", {"max_q": float(states[2].real.max())})


def jost_solve(field: ShiftedField, lam: Lambda, y0: float = 0.0, checked: bool = False) -> JostPair:
    """
    Решения Йоста Φ₋,₂ (слева) и Φ₊,₁ (справа) на прямой y = y0 и вронскиан a(λ).

    :param field: Поле
    :param lam: Спектральный параметр, Im λ > 0
    :param y0: Ордината прямой
    :param checked: Предусловия поля уже проверены
    :return:
    """

    param: SpectralParam = as_lambda(lam)
    value = param.value
    if value.imag < 0:
        raise InvalidInput("lambda must lie in the closed upper half-plane", {"lambda": str(value)})
    if value.imag < REAL_AXIS_TOL:
        raise InvalidInput("lambda is too close to the real axis", {"lambda": str(value)})
    if not checked:
        check_field(field)

    half_length = choose_half_length(field, y0)
    data = line_data(field, y0, half_length)
    left = _integrate(data, value, -half_length, half_length, growing=0)
    right = _integrate(data, value, half_length, -half_length, growing=1)

    checks = np.linspace(-half_length, half_length, 257)
    _check_majorant(left, checks, growing=0)
    _check_majorant(right, checks, growing=1)

    positions = np.linspace(-half_length / 2, half_length / 2, 5)
    psi, chi = left(positions)[:2], right(positions)[:2]
    wronskian = chi[0] * psi[1] - chi[1] * psi[0]
    a_value = complex(wronskian.mean())
    spread = float(np.abs(wronskian - a_value).max())
    if spread >= WRONSKIAN_TOL:
        raise JostCheckFailed("Wronskian is not constant along the line", {"spread": spread})

    phase = np.exp(0.25j * param.k * positions)
    height = np.exp(0.25 * param.j * y0)
    return JostPair(
        lam=param,
        y0=y0,
        half_length=half_length,
        positions=positions,
        phi_p1=(chi * phase / height).T,
        phi_m2=(psi * height / phase).T,
        a_value=a_value,
        a_spread=spread,
    )
