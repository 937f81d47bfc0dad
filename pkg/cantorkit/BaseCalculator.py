"""
:module BaseCalculator: Module hosting the BaseCalculator class.

"""

import copy
import logging
import os
from abc import abstractmethod
from tempfile import mkstemp
from typing import List, Optional, Union

import dill

from cantorkit.AbstractBaseClass import AbstractBaseClass
from cantorkit.BaseData import BaseData, DataCollection
from cantorkit.Parameters import CalculatorParameters

logging.basicConfig(
    format="%(asctime)s %(levelname)s:%(message)s", level=logging.WARNING
)
logger = logging.getLogger(__name__)


class BaseCalculator(AbstractBaseClass):
    """
    Base class of all calculators.

    A calculator is configured through its :class:`CalculatorParameters`,
    executes one computation in :meth:`backengine` and publishes the result as
    the data objects of its :attr:`output` collection. Concrete calculators
    implement :meth:`init_parameters` and :meth:`backengine`.
    """

    def __init__(
        self,
        name: str,
        input: Union[DataCollection, List[BaseData], BaseData, None],
        output_keys: Union[list, str],
        output_data_types: Union[list, type],
        parameters: Optional[CalculatorParameters] = None,
    ):
        """
        Constructs this class.

        :param name: The name of this calculator.
        :param input: The input of this calculator: a `DataCollection`, a list of
                      `BaseData`s, a single Data Object, or None.
        :param output_keys: The key(s) of this calculator's output data.
        :param output_data_types: The data class(es) of each output.
        :param parameters: The parameters for this calculator. Defaults are
                           created by :meth:`init_parameters` when None.
        """
        self.__name = None
        self.__input = None
        self.__output_keys = None
        self.__output_data_types = None
        self.__parameters = None
        self.__output: DataCollection = DataCollection()

        self.name = name
        self.input = input
        self.output_keys = output_keys
        self.output_data_types = output_data_types
        self.parameters = parameters

        self.__check_consistency()
        self.__init_output()

    def __check_consistency(self):
        if len(self.output_keys) != len(self.output_data_types):
            raise ValueError(
                f"len(output_keys) = {len(self.output_keys)} is not equal to len(output_data_types) = {len(self.output_data_types)}"
            )

    @property
    def name(self) -> str:
        """The name of this calculator."""
        return self.__name

    @name.setter
    def name(self, value):
        if isinstance(value, str):
            self.__name = value
        else:
            raise TypeError(
                f"Calculator: `name` is expected to be a str, not {type(value)}"
            )

    @property
    def parameters(self) -> CalculatorParameters:
        """The parameters of this calculator."""
        return self.__parameters

    @parameters.setter
    def parameters(self, value: Optional[CalculatorParameters]):
        self.reset_parameters(value)

    def reset_parameters(self, value: Optional[CalculatorParameters]):
        """Resets the calculator parameters"""
        if isinstance(value, CalculatorParameters):
            self.__parameters = value
        elif value is None:
            self.init_parameters()
        else:
            raise TypeError(
                f"Calculator: `parameters` is expected to be CalculatorParameters, not {type(value)}"
            )

    def set_parameters(self, args_as_dict: Optional[dict] = None, **kwargs):
        """
        Sets parameters contained in this calculator using dict or kwargs
        """
        parameter_dict = args_as_dict if args_as_dict is not None else kwargs
        for key, parameter_value in parameter_dict.items():
            self.parameters[key].value = parameter_value

    @property
    def input(self) -> Optional[DataCollection]:
        """The input of this calculator, a collection of Data Objects or None."""
        return self.__input

    @input.setter
    def input(self, value):
        self.set_input(value)

    def set_input(self, value: Union[DataCollection, list, BaseData, None]):
        if isinstance(value, (DataCollection, type(None))):
            self.__input = value
        elif isinstance(value, list):
            self.__input = DataCollection(*value)
        elif isinstance(value, BaseData):
            self.__input = DataCollection(value)
        else:
            raise TypeError(
                f"Calculator: `input` can be a DataCollection, list or BaseData object. Your input type: {type(value)} is not accepted."
            )

    @property
    def output_keys(self) -> list:
        """The key(s) of this calculator's output data."""
        return self.__output_keys

    @output_keys.setter
    def output_keys(self, value):
        if isinstance(value, str):
            value = [value]
        if not isinstance(value, list) or not all(isinstance(item, str) for item in value):
            raise TypeError(
                f"Calculator: `output_keys` can be a list of str or a str, not {type(value)}"
            )
        self.__output_keys = value

    @property
    def output_data_types(self) -> list:
        """The data class of each output."""
        return self.__output_data_types

    @output_data_types.setter
    def output_data_types(self, value):
        if isinstance(value, type):
            value = [value]
        if not isinstance(value, list) or not all(
            isinstance(item, type) and issubclass(item, BaseData) for item in value
        ):
            raise TypeError(
                "Calculator: `output_data_types` can be a list of BaseData subclasses or one such class."
            )
        self.__output_data_types = value

    @property
    def output(self) -> DataCollection:
        """The output of this calculator"""
        return self.__output

    @property
    def data(self) -> DataCollection:
        """Alias of :attr:`output`."""
        return self.__output

    def __init_output(self):
        output = DataCollection()
        for key, data_type in zip(self.output_keys, self.output_data_types):
            output.add_data(data_type(key))
        self.__output = output

    def publish(self, data_dict: dict, key: Optional[str] = None) -> DataCollection:
        """Map ``data_dict`` into the output object ``key`` (the first output by default)."""
        key = self.output_keys[0] if key is None else key
        self.output[key].set_dict(data_dict)
        logger.debug("Calculator '%s' published output '%s'", self.name, key)
        return self.output

    @abstractmethod
    def init_parameters(self):
        """Virtual method to initialize all parameters. Must be implemented on the
        specialized class."""
        raise NotImplementedError

    def __call__(self, parameters=None, **kwargs):
        """The copy constructor

        :param parameters: The parameters for the new calculator.
        :param kwargs: key-value pairs of attributes to change in the new instance.
        :return: A new calculator with optionally changed parameters.
        """
        new = copy.deepcopy(self)
        new.__dict__.update(kwargs)
        if parameters is None:
            new.parameters = copy.deepcopy(new.parameters)
        else:
            new.parameters = parameters
        return new

    @classmethod
    def from_dump(cls, dumpfile: str):
        """Load a calculator from a dill dumpfile.

        :param dumpfile: The file name of the dumpfile.
        :return: The calculator object restored from the dumpfile.
        """
        with open(dumpfile, "rb") as fhandle:
            try:
                tmp = dill.load(fhandle)
            except Exception:
                raise IOError(f"Cannot load calculator from {dumpfile}.") from None
        if not isinstance(tmp, cls):
            raise TypeError(f"The object in the file {dumpfile} is not a {cls}")
        return tmp

    def dump(self, fname: Optional[str] = None) -> str:
        """
        Dump class instance to file.

        :param fname: Filename (path) of the file to write.
        :return: The filename of the dumpfile
        """
        if fname is None:
            handle, fname = mkstemp(
                suffix="_dump.dill",
                prefix=self.__class__.__name__,
                dir=os.getcwd(),
            )
            os.close(handle)
        with open(fname, "wb") as file_handle:
            # package inits re-export classes under their module names; dill
            # must pickle those classes by reference
            dill.dump(self, file_handle, byref=True)
        return fname

    @abstractmethod
    def backengine(self) -> DataCollection:
        """Execute the computation of this calculator and return its output."""
        raise NotImplementedError
