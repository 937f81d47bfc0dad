from cantorkit.BaseData import BaseData
from cantorkit.Data.JSONFormat import JSONFormat
from cantorkit.Data.TXTFormat import TXTFormat

SCHEMA = "cantor-kit/1"


class ResultData(BaseData):
    """The output of every cantorkit calculator: a versioned payload dict."""

    def __init__(
        self,
        key,
        data_dict=None,
        filename=None,
        file_format_class=None,
    ):
        expected_data = {"schema": None, "command": None}
        super().__init__(key, expected_data, data_dict, filename, file_format_class)

    @classmethod
    def supported_formats(cls):
        format_dict = {}
        cls._add_ioformat(format_dict, JSONFormat)
        cls._add_ioformat(format_dict, TXTFormat)
        return format_dict
