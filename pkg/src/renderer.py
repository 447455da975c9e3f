"""
Функции для формирования выходной информации.
"""

from typing import Any

from writers.models import Report

# количество строк таблицы, выводимых в консоль
PREVIEW_ROWS = 10


class Renderer:
    """
    Генерация краткой сводки по отчету подкоманды.
    """

    def __init__(self, report: Report) -> None:
        """
        Конструктор.

        :param report: Отчет подкоманды
        """

        self.report = report

    async def render(self) -> tuple[str, ...]:
        """
        Форматирование отчета: скалярные поля результата и начало таблицы.

        :return: Результат форматирования
        """

        return (
            f"Report: {self.report.name}",
            *[f"{key}: {await self._format_value(value)}" for key, value in self._scalars().items()],
            *await self._format_rows(),
        )

    def _scalars(self) -> dict[str, Any]:
        return {
            key: value
            for key, value in self.report.payload.items()
            if isinstance(value, (bool, int, float, str)) or value is None
        }

    @staticmethod
    async def _format_value(value: Any) -> str:
        """
        Форматирование скалярного значения.

        :return:
        """

        if isinstance(value, float):
            return f"{value:.12g}"
        return str(value)

    async def _format_rows(self) -> list[str]:
        """
        Форматирование первых строк таблицы.

        :return:
        """

        rows = self.report.rows
        if not rows:
            return []
        lines = [" | ".join(rows[0])]
        for row in rows[:PREVIEW_ROWS]:
            lines.append(" | ".join([await self._format_value(value) for value in row.values()]))
        if len(rows) > PREVIEW_ROWS:
            lines.append(f"... {len(rows) - PREVIEW_ROWS} more rows")
        return lines
