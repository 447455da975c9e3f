"""
Функции для инициализации пакета tests.
"""

import logging

# выключение логирования для автоматических тестов
logging.disable()
