"""
Поверхности: круглая сфера, эллипсоиды и плоский прямоугольник.
"""

import logging
from typing import Any, Optional

import numpy as np
from scipy.integrate import solve_ivp

from errors import (
    BeyondInjectivityRadius,
    InvalidInput,
    PointsCoincide,
    ShootingNoConverge,
    UnsupportedRegime,
    VectorTooLong,
)
from settings import NEWTON_MAX_ITER
from surface_geometry.base import SEGMENT_SAMPLES, BaseSurface
from surface_geometry.models import GeodesicSegment

logger = logging.getLogger(__name__)

# поддерживаемый диапазон коэффициентов эллипсоида
ELLIPSOID_RANGE = (0.5, 2.0)


def _unit(vector: np.ndarray) -> np.ndarray:
    return vector / np.linalg.norm(vector)


class RoundSphere(BaseSurface):
    """
    Единичная сфера в ℝ³.
    """

    kind = "RoundSphere"

    @property
    def params(self) -> tuple[float, ...]:
        return ()

    @property
    def inj_lower_bound(self) -> float:
        return float(np.pi)

    def defect(self, point: np.ndarray) -> float:
        return float(np.linalg.norm(point) - 1.0)

    def project(self, point: np.ndarray) -> np.ndarray:
        return _unit(np.asarray(point, dtype=float))

    def projection_differential(self, point: np.ndarray) -> np.ndarray:
        point = np.asarray(point, dtype=float)
        norm = float(np.linalg.norm(point))
        unit = point / norm
        return (np.eye(3) - np.outer(unit, unit)) / norm

    def normal(self, point: np.ndarray) -> Optional[np.ndarray]:
        return _unit(np.asarray(point, dtype=float))

    def gaussian_curvature(self, point: np.ndarray) -> float:
        return 1.0

    def exp_map(self, point: np.ndarray, vector: np.ndarray) -> np.ndarray:
        point = self.check_point(point)
        vector = self.project_tangent(point, np.asarray(vector, dtype=float))
        norm = float(np.linalg.norm(vector))
        if norm >= self.inj_lower_bound:
            raise VectorTooLong("Tangent vector reaches the injectivity radius", {"norm": norm})
        if norm == 0.0:
            return point.copy()
        return np.cos(norm) * point + np.sin(norm) * vector / norm

    def geodesic_between(
        self, start: np.ndarray, end: np.ndarray, launch: Optional[np.ndarray] = None
    ) -> GeodesicSegment:
        start, end = self.check_point(start), self.check_point(end)
        angle = float(np.arctan2(np.linalg.norm(np.cross(start, end)), start @ end))
        if angle < 1e-14:
            raise PointsCoincide("Segment endpoints coincide")
        if angle >= self.inj_lower_bound - 1e-9:
            raise BeyondInjectivityRadius("Antipodal points have no unique geodesic", {"distance": angle})

        start_tangent = _unit(end - (start @ end) * start)
        end_tangent = _unit(start - (start @ end) * end)
        arclengths = np.linspace(0.0, angle, SEGMENT_SAMPLES)
        samples = np.cos(arclengths)[:, None] * start + np.sin(arclengths)[:, None] * start_tangent
        samples[-1] = end
        return GeodesicSegment(
            start=start,
            end=end,
            samples=samples,
            arclengths=arclengths,
            length=angle,
            start_tangent=start_tangent,
            end_tangent=end_tangent,
        )


class Ellipsoid(BaseSurface):
    """
    Эллипсоид E(a₁, a₂, a₃) = {a₁x₁² + a₂x₂² + a₃x₃² = 1}.

    Геодезические строятся интегрированием уравнения x″ = −(x′ᵀAx′ / |Ax|²)·Ax
    в объемлющем пространстве, краевая задача решается методом стрельбы.
    """

    kind = "Ellipsoid"

    def __init__(self, a1: float, a2: float, a3: float) -> None:
        """
        Конструктор.

        :param a1: Коэффициент при x₁²
        :param a2: Коэффициент при x₂²
        :param a3: Коэффициент при x₃²
        """

        coefficients = np.array([a1, a2, a3], dtype=float)
        low, high = ELLIPSOID_RANGE
        if np.any(coefficients < low) or np.any(coefficients > high):
            raise UnsupportedRegime(
                "Ellipsoid coefficients must lie in [0.5, 2]", {"coefficients": coefficients.tolist()}
            )
        self.coefficients = coefficients

    @property
    def params(self) -> tuple[float, ...]:
        return tuple(float(item) for item in self.coefficients)

    @property
    def inj_lower_bound(self) -> float:
        return float(np.pi / 2)

    def defect(self, point: np.ndarray) -> float:
        return float(np.asarray(point) @ (self.coefficients * np.asarray(point)) - 1.0)

    def project(self, point: np.ndarray) -> np.ndarray:
        point = np.asarray(point, dtype=float)
        return point / np.sqrt(point @ (self.coefficients * point))

    def projection_differential(self, point: np.ndarray) -> np.ndarray:
        point = np.asarray(point, dtype=float)
        scaled = self.coefficients * point
        scale = float(np.sqrt(point @ scaled))
        return np.eye(3) / scale - np.outer(point, scaled) / scale**3

    def normal(self, point: np.ndarray) -> Optional[np.ndarray]:
        return _unit(self.coefficients * np.asarray(point, dtype=float))

    def gaussian_curvature(self, point: np.ndarray) -> float:
        scaled = self.coefficients * np.asarray(point, dtype=float)
        return float(np.prod(self.coefficients) / (scaled @ scaled) ** 2)

    def _rhs(self, _: float, state: np.ndarray) -> np.ndarray:
        position, velocity = state[:3], state[3:]
        scaled = self.coefficients * position
        factor = (velocity @ (self.coefficients * velocity)) / (scaled @ scaled)
        return np.concatenate([velocity, -factor * scaled])

    def _shoot(self, point: np.ndarray, vector: np.ndarray, dense: bool = False) -> Any:
        """
        Интегрирование геодезической единичной скорости на длину ``|vector|``.

        :param point: Начальная точка
        :param vector: Касательный вектор (направление и длина)
        :param dense: Сохранять ли плотный вывод решения
        :return: Результат :func:`scipy.integrate.solve_ivp`
        """

        length = float(np.linalg.norm(vector))
        state = np.concatenate([point, vector / length])
        solution = solve_ivp(
            self._rhs,
            (0.0, length),
            state,
            method="DOP853",
            rtol=1e-13,
            atol=1e-15,
            dense_output=dense,
        )
        if not solution.success:
            raise ShootingNoConverge("Geodesic integration failed", {"message": solution.message})
        return solution

    def exp_map(self, point: np.ndarray, vector: np.ndarray) -> np.ndarray:
        point = self.check_point(point)
        vector = self.project_tangent(point, np.asarray(vector, dtype=float))
        norm = float(np.linalg.norm(vector))
        if norm >= self.inj_lower_bound:
            raise VectorTooLong("Tangent vector reaches the injectivity radius", {"norm": norm})
        if norm == 0.0:
            return point.copy()
        return self.project(self._shoot(point, vector).y[:3, -1])

    def _initial_launch(self, start: np.ndarray, end: np.ndarray) -> np.ndarray:
        """
        Начальное приближение по хорде круглой сферы среднего радиуса.

        :param start: Начальная точка
        :param end: Конечная точка
        :return:
        """

        radius = 0.5 * (np.linalg.norm(start) + np.linalg.norm(end))
        chord = float(np.linalg.norm(end - start))
        arc = 2.0 * radius * np.arcsin(min(1.0, chord / (2.0 * radius)))
        direction = self.project_tangent(start, end - start)
        return arc * _unit(direction)

    def geodesic_between(
        self, start: np.ndarray, end: np.ndarray, launch: Optional[np.ndarray] = None
    ) -> GeodesicSegment:
        start, end = self.check_point(start), self.check_point(end)
        if np.linalg.norm(end - start) < 1e-13:
            raise PointsCoincide("Segment endpoints coincide")

        guess = self._initial_launch(start, end) if launch is None else np.asarray(launch, dtype=float)
        if np.linalg.norm(guess) >= self.inj_lower_bound:
            raise BeyondInjectivityRadius(
                "Points are too far apart for a unique geodesic", {"estimate": float(np.linalg.norm(guess))}
            )

        basis_start, basis_end = self.tangent_basis(start), self.tangent_basis(end)
        coords = basis_start @ guess
        residual = np.inf
        for iteration in range(NEWTON_MAX_ITER):
            arrival = self.project(self._shoot(start, coords @ basis_start).y[:3, -1])
            miss = arrival - end
            residual = float(np.linalg.norm(miss))
            if residual < 1e-14:
                break

            step_size = 1e-7 * max(1.0, float(np.linalg.norm(coords)))
            jacobian = np.empty((2, 2))
            for column in range(2):
                shifted = coords.copy()
                shifted[column] += step_size
                moved = self.project(self._shoot(start, shifted @ basis_start).y[:3, -1])
                jacobian[:, column] = basis_end @ (moved - arrival) / step_size
            step = np.linalg.solve(jacobian, -(basis_end @ miss))

            # затухание шага, чтобы не выйти за радиус инъективности
            while np.linalg.norm(coords + step) >= self.inj_lower_bound and np.linalg.norm(step) > 1e-16:
                step *= 0.5
            coords = coords + step
            logger.debug("Shooting iteration %d, miss %.3e", iteration, residual)
            if np.linalg.norm(step) < 1e-16:
                break

        if residual > 1e-11:
            raise ShootingNoConverge("Geodesic shooting did not converge", {"residual": residual})

        launch_vector = coords @ basis_start
        length = float(np.linalg.norm(launch_vector))
        if length >= self.inj_lower_bound:
            raise BeyondInjectivityRadius("Geodesic reaches the injectivity radius", {"length": length})

        solution = self._shoot(start, launch_vector, dense=True)
        final_velocity = solution.y[3:, -1]
        # поправка первого порядка на остаточный промах вдоль геодезической
        length += float((end - self.project(solution.y[:3, -1])) @ _unit(final_velocity))

        arclengths = np.linspace(0.0, float(solution.t[-1]), SEGMENT_SAMPLES)
        samples = np.array([self.project(item) for item in solution.sol(arclengths)[:3].T])
        samples[0], samples[-1] = start, end
        return GeodesicSegment(
            start=start,
            end=end,
            samples=samples,
            arclengths=arclengths * (length / arclengths[-1]),
            length=length,
            start_tangent=_unit(launch_vector),
            end_tangent=-_unit(self.project_tangent(end, final_velocity)),
        )


class FlatRect(BaseSurface):
    """
    Плоский прямоугольник [−w/2, w/2] × [−h/2, h/2].
    """

    kind = "FlatRect"
    dim = 2

    def __init__(self, width: float, height: float) -> None:
        """
        Конструктор.

        :param width: Ширина
        :param height: Высота
        """

        if width <= 0 or height <= 0:
            raise InvalidInput("Rectangle sides must be positive", {"width": width, "height": height})
        self.width = float(width)
        self.height = float(height)

    @property
    def params(self) -> tuple[float, ...]:
        return self.width, self.height

    @property
    def inj_lower_bound(self) -> float:
        return 0.5 * min(self.width, self.height)

    def defect(self, point: np.ndarray) -> float:
        half = np.array([self.width, self.height]) / 2
        return float(np.max(np.maximum(np.abs(np.asarray(point)) - half, 0.0)))

    def project(self, point: np.ndarray) -> np.ndarray:
        half = np.array([self.width, self.height]) / 2
        return np.clip(np.asarray(point, dtype=float), -half, half)

    def projection_differential(self, point: np.ndarray) -> np.ndarray:
        half = np.array([self.width, self.height]) / 2
        return np.diag((np.abs(np.asarray(point, dtype=float)) <= half).astype(float))

    def normal(self, point: np.ndarray) -> Optional[np.ndarray]:
        return None

    def gaussian_curvature(self, point: np.ndarray) -> float:
        return 0.0

    def exp_map(self, point: np.ndarray, vector: np.ndarray) -> np.ndarray:
        point = self.check_point(point)
        vector = np.asarray(vector, dtype=float)
        if np.linalg.norm(vector) >= self.inj_lower_bound:
            raise VectorTooLong(
                "Tangent vector reaches the injectivity radius", {"norm": float(np.linalg.norm(vector))}
            )
        return self.check_point(point + vector)

    def geodesic_between(
        self, start: np.ndarray, end: np.ndarray, launch: Optional[np.ndarray] = None
    ) -> GeodesicSegment:
        start, end = self.check_point(start), self.check_point(end)
        length = float(np.linalg.norm(end - start))
        if length < 1e-14:
            raise PointsCoincide("Segment endpoints coincide")
        if length >= self.inj_lower_bound:
            raise BeyondInjectivityRadius("Points are too far apart", {"distance": length})

        arclengths = np.linspace(0.0, length, SEGMENT_SAMPLES)
        direction = (end - start) / length
        samples = start + arclengths[:, None] * direction
        samples[-1] = end
        return GeodesicSegment(
            start=start,
            end=end,
            samples=samples,
            arclengths=arclengths,
            length=length,
            start_tangent=direction,
            end_tangent=-direction,
        )


def surface_from_dict(data: dict[str, Any]) -> BaseSurface:
    """
    Восстановление поверхности из вида ``{kind, params}``.

    :param data: Сериализованная поверхность
    :return:
    """

    kind = data.get("kind")
    params = [float(item) for item in data.get("params", [])]
    if kind == RoundSphere.kind and not params:
        return RoundSphere()
    if kind == Ellipsoid.kind and len(params) == 3:
        return Ellipsoid(*params)
    if kind == FlatRect.kind and len(params) == 2:
        return FlatRect(*params)
    raise InvalidInput("Unknown surface description", {"surface": data})
