""" :module BaseData: Module hosting the BaseData and DataCollection classes."""

import logging
from abc import ABCMeta, abstractmethod
from typing import Dict, List, Optional

from cantorkit.AbstractBaseClass import AbstractBaseClass

logger = logging.getLogger(__name__)


class BaseData(AbstractBaseClass):
    """The abstract data class.

    A data object is identified by a key and maps either a python dict or a file
    read through a format class, never both. ``expected_data`` lists the keys
    that :meth:`get_data` must find in the mapped content.
    """

    def __init__(
        self,
        key: str,
        expected_data: dict,
        data_dict: Optional[dict] = None,
        filename: Optional[str] = None,
        file_format_class=None,
    ):
        """
        :param key: The key to identify the Data Object.
        :param expected_data: Placeholder dict whose keys must be present in the data.
        :param data_dict: The dict to map. Must be None if a file is mapped.
        :param filename: The file to map. Must be None if a dict is mapped.
        :param file_format_class: The format class reading ``filename``.
        """
        self.__key = None
        self.__expected_data = None
        self.__data_dict = None
        self.__filename = None
        self.__file_format_class = None

        self.key = key
        self.expected_data = expected_data
        self.data_dict = data_dict
        self.filename = filename
        self.file_format_class = file_format_class

        self.__check_consistency()

    @property
    def key(self) -> str:
        """The key of the data object within a collection"""
        return self.__key

    @key.setter
    def key(self, value: str):
        if isinstance(value, str):
            self.__key = value
        else:
            raise TypeError(f"Data Class: key should be a str, not {type(value)}")

    @property
    def expected_data(self) -> dict:
        return self.__expected_data

    @expected_data.setter
    def expected_data(self, value: dict):
        if isinstance(value, dict):
            self.__expected_data = value
        else:
            raise TypeError(
                f"Data Class: expected_data should be a dict, not {type(value)}"
            )

    @property
    def data_dict(self) -> Optional[dict]:
        return self.__data_dict

    @data_dict.setter
    def data_dict(self, value: Optional[dict]):
        if value is None or isinstance(value, dict):
            self.__data_dict = value
        else:
            raise TypeError(
                f"Data Class: data_dict should be None or a dict, not {type(value)}"
            )
        self.__check_consistency()

    @property
    def filename(self) -> Optional[str]:
        return self.__filename

    @filename.setter
    def filename(self, value: Optional[str]):
        if value is None or isinstance(value, str):
            self.__filename = value
        else:
            raise TypeError(
                f"Data Class: filename should be None or a str, not {type(value)}"
            )

    @property
    def file_format_class(self):
        return self.__file_format_class

    @file_format_class.setter
    def file_format_class(self, value):
        if value is None or isinstance(value, ABCMeta):
            self.__file_format_class = value
        else:
            raise TypeError(
                f"Data Class: format_class should be None or a format class, not {type(value)}"
            )

    def set_dict(self, data_dict: dict):
        """Map a python dict, dropping any file mapping."""
        self.filename = None
        self.file_format_class = None
        self.data_dict = data_dict

    def set_file(self, filename: str, format_class):
        """Map a file read by ``format_class``, dropping any dict mapping."""
        self.data_dict = None
        self.filename = filename
        self.file_format_class = format_class
        self.__check_consistency()

    @property
    def mapping_type(self):
        """``dict`` for a dict mapping, the format class for a file mapping."""
        if self.data_dict is not None:
            return dict
        if self.filename is not None:
            return self.file_format_class
        raise TypeError("Neither a data dict nor a file is mapped.")

    def __check_consistency(self):
        if self.__data_dict is not None and self.__filename is not None:
            raise RuntimeError(
                "data_dict and filename can not be set for one data object at the same time."
            )
        if (self.__filename is None) != (self.__file_format_class is None):
            raise RuntimeError("filename and file_format_class are not consistent.")

    @staticmethod
    def _add_ioformat(format_dict: dict, format_class):
        """Register ``format_class`` in ``format_dict`` under its format key."""
        register = dict(format_class.format_register())
        format_dict[register.pop("key")] = register

    @classmethod
    @abstractmethod
    def supported_formats(cls) -> Dict[str, dict]:
        """Format key -> format register of every format this data class can be written in."""
        raise NotImplementedError

    @classmethod
    def list_formats(cls) -> str:
        """Describe the supported formats"""
        out_string = ""
        for key, register in cls.supported_formats().items():
            out_string += f"Format class: {register['format_class']}\n"
            out_string += f"Key: {key}\n"
            out_string += f"Description: {register['description']}\n"
            if register["ext"] != "":
                out_string += f"File extension: {register['ext']}\n"
            out_string += "\n"
        return out_string

    @classmethod
    def from_file(cls, filename: str, format_class, key: str):
        """Create a Data Object mapping a file."""
        return cls(key, filename=filename, file_format_class=format_class)

    @classmethod
    def from_dict(cls, data_dict: dict, key: str):
        """Create a Data Object mapping a data dict."""
        return cls(key, data_dict=data_dict)

    def write(self, filename: str, format_class, key: Optional[str] = None):
        """Write the data into ``filename`` with ``format_class`` and return a Data Object mapping that file."""
        if self.filename is not None and format_class is self.file_format_class:
            logger.info(
                "Data '%s' already exists in %s as %s; writing a copy to %s",
                self.key,
                self.filename,
                format_class.__name__,
                filename,
            )
        return format_class.write(self, filename, key)

    def __check_for_expected_data(self, data_to_read: dict):
        for key in self.expected_data:
            if key not in data_to_read:
                raise KeyError(f"Expected data dict key '{key}' is not found.")

    def get_data(self) -> dict:
        """Return the data in a dictionary"""
        if self.__data_dict is not None:
            data = self.__data_dict
        elif self.__filename is not None:
            data = self.__file_format_class.read(self.__filename)
        else:
            raise RuntimeError("Cannot read the data from either a dict or a file.")
        self.__check_for_expected_data(data)
        return data

    def __str__(self):
        content = (
            list(self.data_dict.keys()) if self.mapping_type is dict else self.filename
        )
        return f"key = {self.key}\nmapping = {self.mapping_type}: {content}"


class DataCollection:
    """A collection of Data Objects, keyed by their keys"""

    def __init__(self, *args):
        self.data_object_dict: Dict[str, BaseData] = {}
        self.add_data(*args)

    def __len__(self):
        return len(self.data_object_dict)

    def __getitem__(self, keys):
        if isinstance(keys, str):
            return self.get_data_object(keys)
        return DataCollection(*[self.get_data_object(key) for key in keys])

    def __iter__(self):
        return iter(self.data_object_dict.values())

    def add_data(self, *args):
        """Add data objects to the data collection"""
        for data in args:
            if not isinstance(data, BaseData):
                raise TypeError(f"DataCollection holds BaseData objects, not {type(data)}")
            self.data_object_dict[data.key] = data

    def get_data(self) -> dict:
        """The data dict of the single item, or a dict of data dicts keyed by item key."""
        if len(self.data_object_dict) == 1:
            return next(iter(self.data_object_dict.values())).get_data()
        return {key: obj.get_data() for key, obj in self.data_object_dict.items()}

    def get_data_object(self, key: str) -> BaseData:
        return self.data_object_dict[key]

    def to_list(self) -> List[BaseData]:
        return list(self.data_object_dict.values())

    def __str__(self):
        string = "Data collection:\nkey - mapping\n\n"
        for data_object in self.data_object_dict.values():
            string += f"{data_object.key} - {data_object.mapping_type}\n"
        return string
