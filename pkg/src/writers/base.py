"""
Базовые функции записи отчетов.
"""

import os
from abc import ABC, abstractmethod

import aiofiles.os

from settings import RESULTS_PATH
from writers.models import Report, ReportManifest


class BaseWriter(ABC):
    """
    Базовый класс, реализующий интерфейс записи отчетов.
    """

    extension: str = ""

    def __init__(self, out: str = RESULTS_PATH) -> None:
        """
        Конструктор.

        :param out: Путь к файлу отчета или к директории для отчетов
        """

        self.out = out

    async def get_file_path(self, report: Report) -> str:
        """
        Путь к файлу отчета: ``out``, если он задан как файл, иначе ``out/<имя>.<расширение>``.

        :param report: Отчет
        :return:
        """

        if os.path.splitext(self.out)[1]:
            return self.out
        return os.path.join(self.out, f"{report.name}.{self.extension}")

    @staticmethod
    async def ensure_directory(file_path: str) -> None:
        """
        Создание директории для файла, если она еще не существует.

        :param file_path: Путь к файлу
        :return:
        """

        directory = os.path.dirname(file_path)
        if directory and not await aiofiles.os.path.isdir(directory):
            await aiofiles.os.makedirs(directory, exist_ok=True)

    @abstractmethod
    async def write(self, report: Report, manifest: ReportManifest) -> str:
        """
        Запись отчета.

        :param report: Отчет
        :param manifest: Сведения о запуске
        :return: Путь к записанному файлу
        """
