import re
from fractions import Fraction

from cantorkit.BaseFormat import BaseFormat

_RATIONAL_STRING = re.compile(r"^-?\d+/\d+$")


def _scalar_text(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return "none"
    return str(value)


def _inline(mapping: dict) -> str:
    return " ".join(f"{key}={_value_text(value)}" for key, value in mapping.items())


def _value_text(value) -> str:
    if isinstance(value, dict):
        return _inline(value)
    if isinstance(value, list):
        if any(isinstance(item, dict) for item in value):
            return "".join(f"\n  {_value_text(item)}" for item in value)
        return ",".join(_scalar_text(item) for item in value)
    return _scalar_text(value)


def approximate(text: str) -> str:
    """Decimal rendering of an exact ``a/b`` string, for human eyes only."""
    return format(float(Fraction(text)), ".12g")


class TXTFormat(BaseFormat):
    """
    Human-readable ``key: value`` lines. A final ``approx:`` line carries
    decimal renderings suffixed with ``≈``; it is never part of the exact data.
    """

    def __init__(self) -> None:
        super().__init__()

    @classmethod
    def format_register(cls):
        return cls._create_format_register(
            "TXT", "Text rendering of a cantorkit result", ".txt"
        )

    @classmethod
    def render(cls, data_dict: dict) -> str:
        lines = []
        approximations = []
        for key, value in data_dict.items():
            lines.append(f"{key}: {_value_text(value)}")
            if isinstance(value, str) and _RATIONAL_STRING.match(value):
                approximations.append(f"{key}={approximate(value)}≈")
        if approximations:
            lines.append("approx: " + " ".join(approximations))
        return "\n".join(lines) + "\n"

    @classmethod
    def parse(cls, text: str) -> dict:
        """Read the lines back as strings; nested entries become lists of their lines."""
        data = {}
        last_key = None
        for line in text.splitlines():
            if line.startswith("  ") and last_key is not None:
                if not isinstance(data[last_key], list):
                    data[last_key] = []
                data[last_key].append(line.strip())
                continue
            key, _, value = line.partition(": ")
            if key == "approx":
                continue
            data[key] = value
            last_key = key
        return data
