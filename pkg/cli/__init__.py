"""
Пакетный интерфейс: задания, команды и вывод.
"""

from .config import ConfigError, JobConfig, load_config
from .commands import COMMANDS, run
from .render import fj_result_json, fj_result_text, format_cyc

__all__ = [
    'ConfigError',
    'JobConfig',
    'load_config',
    'COMMANDS',
    'run',
    'fj_result_json',
    'fj_result_text',
    'format_cyc',
]
