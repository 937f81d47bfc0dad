from fractions import Fraction
from typing import Any, List, Optional, Tuple, Union

from cantorkit.AbstractBaseClass import AbstractBaseClass

ValueTypes = Union[str, bool, int, Fraction]


class Parameter(AbstractBaseClass):
    """
    Description of a single calculator parameter.

    The parameter is defined by:
     - name: when added to a parameter collection, it can be accessed by this name
     - value: a str, a bool, or a rational number (int or fractions.Fraction)
     - comment: a brief description of the parameter

    Legal values can be restricted by closed intervals and by discrete options.
    Ints and Fractions are the same kind of value here: both are rational numbers.
    """

    def __init__(self, name: str, comment: Optional[str] = None):
        """
        Creates a parameter with given name and optionally a comment

        :param name: name of the parameter
        :param comment: brief description of the parameter
        """
        self.name: str = name
        self.comment: Optional[str] = comment
        self.__value: Optional[ValueTypes] = None
        self.__intervals: List[Tuple[Optional[Fraction], Optional[Fraction]]] = []
        self.__intervals_are_legal: Optional[bool] = None
        self.__options: List[ValueTypes] = []
        self.__options_are_legal: Optional[bool] = None
        self.__value_type: Optional[type] = None

    @classmethod
    def from_dict(cls, param_dict: dict):
        """
        Create a parameter from the dictionary written by
        :meth:`~cantorkit.Parameters.Collections.CalculatorParameters.to_dict`.
        ``name`` is mandatory.
        """
        if "name" not in param_dict:
            raise KeyError(
                "name is a mandatory element of the dictionary, but has not been found"
            )
        param = cls(param_dict["name"], param_dict.get("comment"))
        for key in param_dict:
            param.__dict__[key] = param_dict[key]

        param.__set_value_type(param.value)
        for option in param.__options:
            param.__set_value_type(option)
        return param

    @property
    def value(self) -> Optional[ValueTypes]:
        return self.__value

    @value.setter
    def value(self, value: ValueTypes) -> None:
        """
        Sets the value of this parameter if it is legal, raises otherwise.

        :raises TypeError: if the value kind differs from the one previously set.
        :raises ValueError: if the value violates the intervals or options.
        """
        self.__check_compatibility(value)
        self.__set_value_type(value)
        if self.is_legal(value):
            self.__value = value
        else:
            raise ValueError(f"Value {value!r} of parameter '{self.name}' illegal.")

    @property
    def value_type(self) -> Optional[type]:
        """``str``, ``bool``, ``Fraction`` (any rational) or None before the first value."""
        return self.__value_type

    @staticmethod
    def __kind(value_type: Optional[type]) -> Optional[type]:
        if value_type is None or value_type is type(None):
            return None
        if value_type is bool:
            return bool
        if issubclass(value_type, (int, Fraction)):
            return Fraction
        return value_type

    def __set_value_type(self, value: Any) -> None:
        if isinstance(value, (list, tuple)) and len(value) > 0:
            value = value[0]
        if value is None:
            return
        self.__value_type = self.__kind(type(value))

    def __check_compatibility(self, value: Any) -> None:
        """Raises TypeError if ``value`` is not of the kind this parameter already holds."""
        if isinstance(value, dict):
            raise NotImplementedError("Dictionaries are not accepted")
        if isinstance(value, (list, tuple)):
            kinds = {self.__kind(type(item)) for item in value}
            if len(kinds) > 1:
                raise TypeError(
                    f"Iterable passed as value for '{self.name}' is made of inhomogeneous kinds: {kinds}"
                )
            kind = kinds.pop() if kinds else None
        else:
            kind = self.__kind(type(value))
        if kind is not None and self.__value_type is not None and kind is not self.__value_type:
            raise TypeError(
                f"New value of kind {kind} is different from {self.__value_type} previously defined"
            )

    def add_interval(
        self,
        min_value: Optional[Union[int, Fraction]],
        max_value: Optional[Union[int, Fraction]],
        intervals_are_legal: bool,
    ) -> None:
        """
        Adds a closed interval [min_value, max_value] of rational values.

        :param min_value: lower bound, None for no bound
        :param max_value: upper bound, None for no bound
        :param intervals_are_legal: whether all intervals of this parameter are allowed or forbidden.
        """
        for bound in (min_value, max_value):
            if bound is not None:
                self.__check_compatibility(bound)
                self.__set_value_type(bound)
        if self.__intervals_are_legal is None:
            self.__intervals_are_legal = intervals_are_legal
        elif self.__intervals_are_legal != intervals_are_legal:
            raise ValueError(
                f"Parameter '{self.name}': all intervals should be either legal or illegal"
            )
        self.__intervals.append((min_value, max_value))

        if self.__value is not None and not self.is_legal(self.__value):
            raise ValueError(
                f"Value {self.__value!r} is now illegal based on the newly added interval"
            )

    def add_option(self, option: Any, options_are_legal: bool) -> None:
        """
        Adds an allowed (or forbidden) discrete value, or a list of them.

        :param option: a discrete value or a list of values
        :param options_are_legal: whether the options are allowed or forbidden values
        """
        if self.__options_are_legal is None:
            self.__options_are_legal = options_are_legal
        elif self.__options_are_legal != options_are_legal:
            raise ValueError(
                f"Parameter '{self.name}': all options should be either legal or illegal"
            )
        self.__check_compatibility(option)
        self.__set_value_type(option)
        if isinstance(option, (list, tuple)):
            self.__options.extend(option)
        else:
            self.__options.append(option)

        if self.__value is not None and not self.is_legal(self.__value):
            raise ValueError(
                f"Value {self.__value!r} is now illegal based on the newly added option"
            )

    def get_options(self):
        return self.__options

    def get_intervals(self):
        return self.__intervals

    def is_legal(self, values: Optional[ValueTypes] = None) -> bool:
        """Checks whether the given (or the contained) value satisfies the constraints."""
        if values is None:
            values = self.__value
        if isinstance(values, (list, tuple)):
            return all(self.is_legal(value) for value in values)
        if values is None:
            return True

        value = values
        kind = self.__kind(type(value))
        if self.__value_type is not None and kind is not self.__value_type:
            return False
        if len(self.__options) == 0 and len(self.__intervals) == 0:
            return True

        for option in self.__options:
            if self.__kind(type(option)) is kind and option == value:
                return self.__options_are_legal

        if kind is Fraction:
            for low, high in self.__intervals:
                if (low is None or low <= value) and (high is None or value <= high):
                    return self.__intervals_are_legal

        if len(self.__intervals) > 0:
            return not self.__intervals_are_legal
        return not self.__options_are_legal

    def clear_intervals(self) -> None:
        self.__intervals = []

    def clear_options(self) -> None:
        self.__options = []

    @staticmethod
    def __bound_text(bound) -> str:
        return "inf" if bound is None else str(bound)

    def print_line(self) -> str:
        """
        returns string with one line description of parameter
        """
        if self.__value is None:
            string = self.name.ljust(40) + " "
        else:
            string = self.name.ljust(35) + " "
            string += str(self.__value).ljust(10) + " "
        if self.comment is not None:
            string += self.comment
        string += 3 * " "

        for low, high in self.__intervals:
            legal = "L" if self.__intervals_are_legal else "I"
            string += (
                f"{legal}[{self.__bound_text(low)}, {self.__bound_text(high)}]".ljust(10)
            )
        if len(self.__options) > 0:
            string += "(" + ", ".join(str(option) for option in self.__options) + ")"
        return string

    def __repr__(self) -> str:
        string = f"Parameter named: '{self.name}'"
        if self.__value is None:
            string += " without set value.\n"
        else:
            string += f" with value: {self.__value}\n"
        if self.comment is not None:
            string += " " + self.comment + "\n"
        if len(self.__intervals) > 0:
            string += (
                "  Legal intervals:\n"
                if self.__intervals_are_legal
                else "  Illegal intervals:\n"
            )
        for low, high in self.__intervals:
            string += f"    [{self.__bound_text(low)},{self.__bound_text(high)}]\n"
        if len(self.__options) > 0:
            string += (
                "  Allowed values:\n" if self.__options_are_legal else "  Forbidden values:\n"
            )
        for option in self.__options:
            string += f"    {option}\n"
        return string
