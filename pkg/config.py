import logging
import os
from dotenv import load_dotenv

load_dotenv()

DEFAULT_FIELD = "QQ"
DEFAULT_LOG_LEVEL = "INFO"
LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"

_TRUE_VALUES = ("1", "true", "yes", "on")


def get_field_spec() -> str:
    """Field spec from SHC_FIELD, e.g. "QQ" or "GF(7)"; read at call time so tests can override it"""
    return os.getenv("SHC_FIELD", DEFAULT_FIELD).strip() or DEFAULT_FIELD


def has_field_override() -> bool:
    return bool(os.getenv("SHC_FIELD", "").strip())


def is_paranoid() -> bool:
    return os.getenv("SHC_PARANOID", "").strip().lower() in _TRUE_VALUES


def get_log_level() -> int:
    name = os.getenv("SHC_LOG_LEVEL", DEFAULT_LOG_LEVEL).strip().upper()
    level = logging.getLevelName(name)
    # unknown names come back as the string "Level NAME"
    return level if isinstance(level, int) else logging.INFO

