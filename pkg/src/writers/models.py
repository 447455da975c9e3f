"""
Описание моделей данных отчетов.
"""

from typing import Any

from pydantic import BaseModel, Field

from settings import TOOL_VERSION


class ReportManifest(BaseModel):
    """
    Сведения о запуске, сохраняемые вместе с каждым отчетом.

    .. code-block::

        ReportManifest(
            command="widths-table",
            seed=20240229,
            config={"pmax": 100, "threads": 4},
        )
    """

    tool: str = "widths"
    version: str = TOOL_VERSION
    command: str
    seed: int
    config: dict[str, Any] = Field(default_factory=dict)

    class Config:
        allow_mutation = False


class Report(BaseModel):
    """
    Результат подкоманды: структурированные данные и табличное представление.

    .. code-block::

        Report(
            name="widths_table",
            payload={"p_max": 3, "rows": [...]},
            rows=[{"p": 1, "omega": "2π·1", "value": 6.283185307179586}, ...],
        )
    """

    name: str
    payload: dict[str, Any]
    rows: list[dict[str, Any]] = Field(default_factory=list)
    # непройденные проверки: отчет сохраняется, код завершения 2
    failures: list[str] = Field(default_factory=list)

    class Config:
        allow_mutation = False
