""" :module BaseFormat: Module hosting the BaseFormat class."""

from abc import abstractmethod
from typing import Optional

from cantorkit.AbstractBaseClass import AbstractBaseClass
from cantorkit.BaseData import BaseData


class BaseFormat(AbstractBaseClass):
    """
    The abstract format class, the common interface of every file format a
    data class can be written in and read from.

    A concrete format renders a data dict to text (:meth:`render`) and parses
    that text back (:meth:`parse`); :meth:`write` and :meth:`read` are the file
    variants built on them.
    """

    def __init__(self):
        pass

    @classmethod
    @abstractmethod
    def format_register(cls) -> dict:
        """Override in a concrete format class, using :meth:`_create_format_register`."""
        raise NotImplementedError

    @classmethod
    def _create_format_register(cls, key: str, description: str, file_extension: str):
        return {
            "key": key,
            "description": description,
            "ext": file_extension,
            "format_class": cls,
        }

    @classmethod
    @abstractmethod
    def render(cls, data_dict: dict) -> str:
        """The text of ``data_dict`` in this format."""
        raise NotImplementedError

    @classmethod
    @abstractmethod
    def parse(cls, text: str) -> dict:
        """The data dict encoded by ``text``."""
        raise NotImplementedError

    @classmethod
    def read(cls, filename: str) -> dict:
        """Read the data from the file with the `filename` to a dictionary."""
        with open(filename, "r", encoding="utf-8") as fp:
            return cls.parse(fp.read())

    @classmethod
    def write(cls, obj: BaseData, filename: str, key: Optional[str] = None) -> BaseData:
        """Save the data of ``obj`` to `filename` and return a data object mapping the file."""
        with open(filename, "w", encoding="utf-8") as fp:
            fp.write(cls.render(obj.get_data()))
        if key is None:
            key = f"{obj.key}_to_{cls.__name__}"
        return obj.from_file(filename, cls, key)
