"""
Исключения приложения.

Иерархия делится на две ветви: :class:`OperationalError` (нарушены предусловия или
не сошелся численный метод, код завершения 1) и :class:`AcceptanceError`
(не выполнена проверка результата, код завершения 2).
"""

from typing import Any, Optional


class WidthsError(Exception):
    """
    Базовое исключение приложения.
    """

    def __init__(self, message: str, details: Optional[dict[str, Any]] = None) -> None:
        """
        Конструктор.

        :param message: Описание ошибки
        :param details: Дополнительные сведения (попадают в отчет)
        """

        super().__init__(message)
        self.message = message
        self.details = details or {}

    def __str__(self) -> str:
        if self.details:
            return f"{self.message} {self.details}"
        return self.message


class OperationalError(WidthsError):
    """
    Ошибка выполнения: неверные входные данные или сбой численного метода.
    """


class AcceptanceError(WidthsError):
    """
    Нарушена проверяемая численная гарантия.
    """


# геометрия поверхностей
class UnsupportedRegime(OperationalError):
    """Параметры эллипсоида вне поддерживаемого диапазона."""


class PointsCoincide(OperationalError):
    """Концы геодезической совпадают."""


class BeyondInjectivityRadius(OperationalError):
    """Расстояние между точками не меньше радиуса инъективности."""


class ShootingNoConverge(OperationalError):
    """Метод стрельбы не сошелся."""


class VectorTooLong(OperationalError):
    """Длина касательного вектора не меньше радиуса инъективности."""


class NewtonNoConverge(OperationalError):
    """
    Метод Ньютона не сошелся.
    """

    def __init__(self, message: str, residual: float, details: Optional[dict[str, Any]] = None) -> None:
        super().__init__(message, {"residual": residual, **(details or {})})
        self.residual = residual


class InvalidInput(OperationalError):
    """Входные данные не удовлетворяют предусловиям операции."""


# заметания многочленами
class IdenticallyZeroOnCircle(OperationalError):
    """Ограничение многочлена на окружность тождественно равно нулю."""


# фазовые переходы
class NotASolution(OperationalError):
    """Состояние не является приближенным решением уравнения."""


# рассеяние
class OutOfDomain(OperationalError):
    """Точка вне области определения поля."""


class LambdaAtPole(OperationalError):
    """Спектральный параметр попал в полюс λ = −i."""


class PreconditionDecayFailed(OperationalError):
    """Поле не затухает к ямам на границе области."""


class IntegratorBlowup(OperationalError):
    """Норма решения превысила допустимую при интегрировании."""


class NoCrossings(OperationalError):
    """Линия уровня не пересекает контрольный квадрат."""


class OddCount(OperationalError):
    """Нечетное количество направлений."""


# геодезические сети
class ImmersionViolated(OperationalError):
    """
    Нарушено условие погружения сети.
    """

    def __init__(self, condition: str, vertices: tuple[Any, ...]) -> None:
        super().__init__(f"Condition {condition} violated", {"condition": condition, "vertices": list(vertices)})
        self.condition = condition
        self.vertices = vertices


class SegmentsOverlap(OperationalError):
    """Внутренности сегментов сети пересекаются."""


class LeftEmbeddingClass(OperationalError):
    """Итерация вышла из класса вложений."""


class NotStationary(OperationalError):
    """Сеть не стационарна."""


class QTooSmall(OperationalError):
    """Число подразбиений слишком мало для радиуса инъективности."""


# ширины
class MuTooLarge(OperationalError):
    """Параметр μ вне рабочего диапазона."""


class TableTooSmall(OperationalError):
    """Таблица ширин слишком коротка для экстраполяции."""


# проверки
class AssemblyMismatch(AcceptanceError):
    """Две сборки оператора Якоби расходятся."""


class CountMismatch(AcceptanceError):
    """Количество значений решетки не совпало с ожидаемым."""


class MassBoundViolated(AcceptanceError):
    """Оценка длины превысила границу 2πk."""


class JostCheckFailed(AcceptanceError):
    """Вронскиан решений Йоста непостоянен или нарушена мажоранта Пикара."""


class EndsLost(AcceptanceError):
    """Релаксированное поле не локализовано вдоль заявленных концов."""


class MassNotPreserved(AcceptanceError):
    """Масса стратифицированной сети отличается от массы исходной."""
