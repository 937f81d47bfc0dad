import json_tricks as json

from cantorkit.BaseFormat import BaseFormat


class JSONFormat(BaseFormat):
    """Exact JSON payloads; every rational is an ``"a/b"`` string."""

    def __init__(self) -> None:
        super().__init__()

    @classmethod
    def format_register(cls):
        return cls._create_format_register(
            "JSON", "Exact JSON payload of a cantorkit result", ".json"
        )

    @classmethod
    def render(cls, data_dict: dict) -> str:
        return json.dumps(data_dict, indent=2) + "\n"

    @classmethod
    def parse(cls, text: str) -> dict:
        return dict(json.loads(text))
