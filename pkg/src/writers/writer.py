"""
Запись отчетов в файлы JSON и CSV.
"""

import csv
import io
import json
import os
from fractions import Fraction
from typing import Any

import aiofiles
import numpy as np

from writers.base import BaseWriter
from writers.models import Report, ReportManifest


def to_jsonable(value: Any) -> Any:
    """
    Приведение значений numpy, комплексных и рациональных чисел к типам JSON.

    :param value: Значение, не поддерживаемое модулем json
    :return:
    """

    if isinstance(value, np.ndarray):
        return value.tolist()
    if isinstance(value, np.generic):
        return value.item()
    if isinstance(value, complex):
        return [value.real, value.imag]
    if isinstance(value, Fraction):
        return str(value)
    raise TypeError(f"Object of type {type(value).__name__} is not JSON serializable")


def dumps(data: Any) -> str:
    return json.dumps(data, default=to_jsonable, ensure_ascii=False, indent=2)


class JsonWriter(BaseWriter):
    """
    Запись отчета в JSON: {manifest, result}.
    """

    extension = "json"

    async def write(self, report: Report, manifest: ReportManifest) -> str:
        file_path = await self.get_file_path(report)
        await self.ensure_directory(file_path)
        async with aiofiles.open(file_path, mode="w", encoding="utf-8") as file:
            await file.write(dumps({"manifest": manifest.dict(), "result": report.payload}))

        return file_path


class CsvWriter(BaseWriter):
    """
    Запись табличной части отчета в CSV со строкой заголовка.

    Сведения о запуске сохраняются рядом, в файл ``<имя>.manifest.json``.
    """

    extension = "csv"

    async def write(self, report: Report, manifest: ReportManifest) -> str:
        file_path = await self.get_file_path(report)
        await self.ensure_directory(file_path)

        buffer = io.StringIO()
        if report.rows:
            writer = csv.DictWriter(buffer, fieldnames=list(report.rows[0]), lineterminator="\n")
            writer.writeheader()
            for row in report.rows:
                writer.writerow({key: to_cell(value) for key, value in row.items()})
        async with aiofiles.open(file_path, mode="w", encoding="utf-8") as file:
            await file.write(buffer.getvalue())

        manifest_path = f"{os.path.splitext(file_path)[0]}.manifest.json"
        async with aiofiles.open(manifest_path, mode="w", encoding="utf-8") as file:
            await file.write(dumps(manifest.dict()))

        return file_path


def to_cell(value: Any) -> Any:
    if isinstance(value, (list, tuple, np.ndarray)):
        return json.dumps(value, default=to_jsonable)
    if isinstance(value, (complex, Fraction, np.generic)):
        return to_jsonable(value)
    return value


WRITERS: dict[str, type[BaseWriter]] = {"json": JsonWriter, "csv": CsvWriter}
