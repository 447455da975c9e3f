"""
Чтение сохраненных полей с диска.
"""

import json

import aiofiles
import aiofiles.os

from errors import InvalidInput
from sg_scattering.fields import ShiftedField


class Reader:
    """
    Чтение выгрузок, записанных подкомандами.
    """

    @staticmethod
    async def read_json(path: str) -> dict:
        """
        Чтение JSON-файла; отчеты вида {manifest, result} разворачиваются до result.

        :param path: Путь к файлу
        :return:
        """

        if not await aiofiles.os.path.isfile(path):
            raise InvalidInput("file does not exist", {"path": path})

        async with aiofiles.open(path, mode="r", encoding="utf-8") as file:
            content = await file.read()

        try:
            data = json.loads(content)
        except json.JSONDecodeError as error:
            raise InvalidInput("file is not valid JSON", {"path": path, "error": str(error)}) from error
        if isinstance(data, dict) and "result" in data and "manifest" in data:
            return data["result"]

        return data

    async def read_field(self, path: str) -> ShiftedField:
        """
        Чтение поля, выгруженного подкомандой glue (метаданные сетки и значения по строкам).

        :param path: Путь к файлу
        :return:
        """

        data = await self.read_json(path)
        missing = {"half_width", "size", "values"} - set(data)
        if missing:
            raise InvalidInput("field dump misses keys", {"path": path, "missing": sorted(missing)})
        if len(data["values"]) != int(data["size"]) ** 2:
            raise InvalidInput("field dump has a wrong number of values", {"path": path, "size": data["size"]})

        return ShiftedField.from_dict(data)
