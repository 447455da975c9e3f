"""
Функции для логирования.
"""
import functools
import inspect
import logging
import time
from typing import Any, Callable, TypeVar, cast

from settings import LOGGING_FORMAT, LOGGING_LEVEL

F = TypeVar("F", bound=Callable[..., Any])

trace_logger = logging.getLogger("widths.trace")


def traced(name: str) -> Callable[[F], F]:
    """
    Логирование начала и завершения длительной операции.

    Работает как для обычных, так и для асинхронных функций.

    :param name: Название операции для записи в лог
    :return: Декоратор
    """

    def decorator(func: F) -> F:
        if inspect.iscoroutinefunction(func):

            @functools.wraps(func)
            async def async_wrapper(*args: Any, **kwargs: Any) -> Any:
                trace_logger.debug("Starting <%s>", name)
                started = time.perf_counter()
                try:
                    return await func(*args, **kwargs)
                finally:
                    trace_logger.debug("Finished <%s> in %.3f s", name, time.perf_counter() - started)

            return cast(F, async_wrapper)

        @functools.wraps(func)
        def wrapper(*args: Any, **kwargs: Any) -> Any:
            trace_logger.debug("Starting <%s>", name)
            started = time.perf_counter()
            try:
                return func(*args, **kwargs)
            finally:
                trace_logger.debug("Finished <%s> in %.3f s", name, time.perf_counter() - started)

        return cast(F, wrapper)

    return decorator


logging.basicConfig(level=LOGGING_LEVEL, format=LOGGING_FORMAT)
