"""
Source file access
"""
import enum
from pathlib import Path

from conf import messages
from services.errors import UnsupportedFeature


class SourceFormat(enum.Enum):
    svg: str = "svg"
    scene: str = "scene"
    tex: str = "tex"


def infer_format(path: str | Path, override: str | None = None) -> SourceFormat:
    """
    Source format from ``override`` or the file extension.

    :param path: Input path
    :type path: str | Path
    :param override: Explicit format name
    :type override: str | None
    :return: Format
    :rtype: SourceFormat
    :raise: UnsupportedFeature for an unknown extension or format name
    """
    name = override or Path(path).suffix.lstrip(".").lower()
    try:
        return SourceFormat(name)
    except ValueError:
        raise UnsupportedFeature(f"{messages.UNSUPPORTED_FORMAT}: {name or path}")


def read_source(path: str | Path) -> str:
    """Reads a UTF-8 source file; OSError and UnicodeDecodeError propagate."""
    return Path(path).read_text(encoding="utf-8")


def write_output(path: str | Path, text: str) -> None:
    Path(path).write_text(text, encoding="utf-8", newline="\n")
