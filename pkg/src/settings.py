"""
Настройки проекта.
"""

import os

# путь к директории для сохранения отчетов
RESULTS_PATH: str = os.getenv("RESULTS_PATH", "../results")

# путь к директории для логирования
LOGGING_PATH: str = os.getenv("LOGGING_PATH", "../logs")
# формат для записей логов
LOGGING_FORMAT: str = os.getenv(
    "LOGGING_FORMAT", "%(name)s %(asctime)s %(levelname)s %(message)s"
)
# уровень логирования
LOGGING_LEVEL: str = os.getenv("LOGGING_LEVEL", "INFO")

# зерно генераторов случайных чисел, если не передано через --seed
DEFAULT_SEED: int = int(os.getenv("DEFAULT_SEED", "20240229"))
# количество рабочих потоков, если не передано через --threads
DEFAULT_THREADS: int = int(os.getenv("DEFAULT_THREADS", "4"))

# длина блока выборки Монте-Карло (один счетчик генератора на блок)
SAMPLES_CHUNK: int = int(os.getenv("SAMPLES_CHUNK", "1_024"))
# максимальное количество итераций методов ньютоновского типа
NEWTON_MAX_ITER: int = int(os.getenv("NEWTON_MAX_ITER", "60"))
# относительный порог собственных значений при подсчете размерности ядра
KERNEL_TOL: float = float(os.getenv("KERNEL_TOL", "1e-7"))
# полуширина окон вокруг концов поля, исключаемых из проверки затухания
END_WINDOW: float = float(os.getenv("END_WINDOW", "16.0"))

# версия инструмента для манифеста отчетов
TOOL_VERSION: str = os.getenv("TOOL_VERSION", "1.0.0")
