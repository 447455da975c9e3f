"""
Поля в сдвинутой форме Δu = sin u (ямы 0 и 2π) и их преобразования.
"""

from typing import Callable, Optional, Sequence

import numpy as np
from scipy.interpolate import RectBivariateSpline

from errors import InvalidInput, OutOfDomain
from phase_field.models import FieldState2D
from phase_field.potentials import HeteroclinicProfile

# профиль возвращает (u, ∂ₓu, ∂ᵧu) в точках (x, y)
Profile = Callable[[np.ndarray, np.ndarray], tuple[np.ndarray, np.ndarray, np.ndarray]]

SHIFTED = HeteroclinicProfile(kind="SineGordonShifted")
DOMAIN_TOL = 1e-9


def gradient4(values: np.ndarray, step: float, axis: int) -> np.ndarray:
    """
    Производная по оси: центральные разности четвертого порядка внутри, второго у края.

    :param values: Значения на сетке
    :param step: Шаг сетки
    :param axis: Ось дифференцирования
    :return:
    """

    result = np.gradient(values, step, axis=axis, edge_order=2)
    moved = np.moveaxis(values, axis, 0)
    inner = (-moved[4:] + 8 * moved[3:-1] - 8 * moved[1:-3] + moved[:-4]) / (12 * step)
    np.moveaxis(result, axis, 0)[2:-2] = inner
    return result


class ShiftedField:
    """
    Поле u на квадрате [−L, L]² с равномерной сеткой n × n (индексация ``ij``).

    Вне узлов поле вычисляется точным профилем, если он задан, иначе кубическими
    сплайнами значений и разностных производных. ``ends`` хранит заявленные
    асимптотические направления.
    """

    def __init__(
        self,
        half_width: float,
        values: np.ndarray,
        ends: Sequence[Sequence[float]] = (),
        profile: Optional[Profile] = None,
    ) -> None:
        values = np.array(values, dtype=float)
        if values.ndim != 2 or values.shape[0] != values.shape[1] or values.shape[0] < 8:
            raise InvalidInput("field values must be a square n x n array", {"shape": values.shape})
        if not np.all(np.isfinite(values)):
            raise InvalidInput("field values must be finite")

        self.half_width = float(half_width)
        self.values = values
        self.values.setflags(write=False)
        self.ends = [tuple(float(item) for item in end) for end in ends]
        self.profile = profile
        self._splines: Optional[tuple[RectBivariateSpline, ...]] = None
        self._derivatives: Optional[tuple[np.ndarray, np.ndarray, np.ndarray]] = None

    @classmethod
    def from_profile(
        cls, profile: Profile, half_width: float, size: int, ends: Sequence[Sequence[float]] = ()
    ) -> "ShiftedField":
        axis = np.linspace(-half_width, half_width, size)
        x, y = np.meshgrid(axis, axis, indexing="ij")
        return cls(half_width, profile(x, y)[0], ends, profile)

    @classmethod
    def from_normalized(cls, state: FieldState2D, ends: Sequence[Sequence[float]] = ()) -> "ShiftedField":
        """
        Перевод нормированного поля ũ в сдвинутую форму u = π(1 + ũ).

        :param state: Поле с ямами ±1
        :param ends: Направления концов
        :return:
        """

        if state.kind != "SineGordonNormalized":
            raise InvalidInput("expected a normalized field", {"kind": state.kind})
        return cls(state.half_width, np.pi * (1.0 + state.values), ends)

    @property
    def size(self) -> int:
        return int(self.values.shape[0])

    @property
    def axis(self) -> np.ndarray:
        return np.linspace(-self.half_width, self.half_width, self.size)

    @property
    def spacing(self) -> float:
        return 2 * self.half_width / (self.size - 1)

    def mesh(self) -> tuple[np.ndarray, np.ndarray]:
        return np.meshgrid(self.axis, self.axis, indexing="ij")

    def grid_derivatives(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """
        (u, ∂ₓu, ∂ᵧu) в узлах сетки.

        :return:
        """

        if self._derivatives is None:
            if self.profile is not None:
                self._derivatives = self.profile(*self.mesh())
            else:
                self._derivatives = (
                    self.values,
                    gradient4(self.values, self.spacing, 0),
                    gradient4(self.values, self.spacing, 1),
                )
        return self._derivatives

    def contains(self, x: np.ndarray, y: np.ndarray) -> bool:
        bound = self.half_width + DOMAIN_TOL
        return bool(np.all(np.abs(x) <= bound) and np.all(np.abs(y) <= bound))

    def evaluate(self, x: np.ndarray, y: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """
        (u, ∂ₓu, ∂ᵧu) в произвольных точках области.

        :param x: Абсциссы
        :param y: Ординаты
        :return:
        """

        x, y = np.asarray(x, dtype=float), np.asarray(y, dtype=float)
        if not self.contains(x, y):
            raise OutOfDomain("point outside the field domain", {"half_width": self.half_width})
        if self.profile is not None:
            return self.profile(x, y)
        if self._splines is None:
            axis = self.axis
            self._splines = tuple(RectBivariateSpline(axis, axis, item) for item in self.grid_derivatives())
        return tuple(spline.ev(x, y) for spline in self._splines)  # type: ignore[return-value]

    def boundary_decay(self, window: float) -> float:
        """
        Максимум max(|sin u|, |∇u|) по граничным узлам вне полос полуширины ``window``
        вокруг заявленных концов.

        :param window: Полуширина окна вокруг каждого луча конца
        :return:
        """

        values, gradient_x, gradient_y = self.grid_derivatives()
        x, y = self.mesh()
        boundary = np.zeros(values.shape, dtype=bool)
        boundary[0, :] = boundary[-1, :] = boundary[:, 0] = boundary[:, -1] = True
        for end_x, end_y in self.ends:
            along = x * end_x + y * end_y
            across = np.abs(x * end_y - y * end_x)
            boundary &= ~((along > 0) & (across < window))
        defect = np.maximum(np.abs(np.sin(values)), np.hypot(gradient_x, gradient_y))
        return float(defect[boundary].max()) if boundary.any() else 0.0

    def to_dict(self) -> dict:
        return {
            "half_width": self.half_width,
            "size": self.size,
            "values": self.values.ravel().tolist(),
            "ends": [list(end) for end in self.ends],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "ShiftedField":
        size = int(data["size"])
        values = np.asarray(data["values"], dtype=float).reshape(size, size)
        return cls(float(data["half_width"]), values, data.get("ends", ()))


def constant_field(value: float, half_width: float = 10.0, size: int = 64) -> ShiftedField:
    def profile(x: np.ndarray, y: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        zeros = np.zeros(np.broadcast(x, y).shape)
        return zeros + value, zeros, zeros

    return ShiftedField.from_profile(profile, half_width, size)


def kink_field(half_width: float = 40.0, size: int = 256, normal: Sequence[float] = (1.0, 0.0)) -> ShiftedField:
    """
    Гетероклиника s(px + qy) для единичной нормали (p, q); концы ±(−q, p).

    :param half_width: Полуширина квадрата
    :param size: Количество узлов по стороне
    :param normal: Нормаль к линии раздела
    :return:
    """

    p, q = np.asarray(normal, dtype=float) / np.linalg.norm(normal)

    def profile(x: np.ndarray, y: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        t = p * x + q * y
        slope = SHIFTED.derivative(t)
        return SHIFTED.value(t), p * slope, q * slope

    return ShiftedField.from_profile(profile, half_width, size, [(-q, p), (q, -p)])


def exact_saddle_field(alpha: float = np.pi / 4, half_width: float = 25.0, size: int = 256) -> ShiftedField:
    """
    Решение с четырьмя концами u = 4·arctan(tg α · ch(x cos α)/ch(y sin α)).

    Линии раздела асимптотичны прямым y = ±x·ctg α; концы под углами ±(π/2 − α) и π ± (π/2 − α).

    :param alpha: Угол α ∈ (0, π/2)
    :param half_width: Полуширина квадрата
    :param size: Количество узлов по стороне
    :return:
    """

    if not 0 < alpha < np.pi / 2:
        raise InvalidInput("alpha must lie in (0, pi/2)", {"alpha": alpha})
    cos_a, sin_a, tan_a = np.cos(alpha), np.sin(alpha), np.tan(alpha)

    def profile(x: np.ndarray, y: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        # логарифм отношения гиперболических косинусов без переполнения
        log_ratio = np.logaddexp(x * cos_a, -x * cos_a) - np.logaddexp(y * sin_a, -y * sin_a) + np.log(tan_a)
        ratio_x = np.tanh(x * cos_a) * cos_a
        ratio_y = -np.tanh(y * sin_a) * sin_a
        slope = 2.0 / np.cosh(log_ratio)
        return 4 * np.arctan(np.exp(log_ratio)), slope * ratio_x, slope * ratio_y

    angle = np.pi / 2 - alpha
    ends = [(np.cos(value), np.sin(value)) for value in (angle, np.pi - angle, np.pi + angle, -angle)]
    return ShiftedField.from_profile(profile, half_width, size, ends)


def rotate_field(field: ShiftedField, beta: float) -> ShiftedField:
    """
    Поворот поля на угол β: новое поле в точке p равно u(R(−β)p), концы поворачиваются на β.

    Узлы, выходящие за пределы исходной области, берутся в ближайшей точке области.

    :param field: Поле
    :param beta: Угол поворота
    :return:
    """

    cos_b, sin_b = np.cos(beta), np.sin(beta)
    ends = [(cos_b * x - sin_b * y, sin_b * x + cos_b * y) for x, y in field.ends]

    def back(x: np.ndarray, y: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        return cos_b * x + sin_b * y, -sin_b * x + cos_b * y

    if field.profile is not None:
        source = field.profile

        def profile(x: np.ndarray, y: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
            value, gradient_x, gradient_y = source(*back(x, y))
            return value, cos_b * gradient_x - sin_b * gradient_y, sin_b * gradient_x + cos_b * gradient_y

        return ShiftedField.from_profile(profile, field.half_width, field.size, ends)

    source_x, source_y = back(*field.mesh())
    bound = field.half_width
    value = field.evaluate(np.clip(source_x, -bound, bound), np.clip(source_y, -bound, bound))[0]
    return ShiftedField(field.half_width, value, ends)


def flip_field(field: ShiftedField) -> ShiftedField:
    """
    Отражение u(−x, −y); для гетероклиники s(x) дает обращенную 2π − s(x).

    :param field: Поле
    :return:
    """

    ends = [(-x, -y) for x, y in field.ends]
    if field.profile is not None:
        source = field.profile

        def profile(x: np.ndarray, y: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
            value, gradient_x, gradient_y = source(-x, -y)
            return value, -gradient_x, -gradient_y

        return ShiftedField.from_profile(profile, field.half_width, field.size, ends)
    return ShiftedField(field.half_width, field.values[::-1, ::-1].copy(), ends)
