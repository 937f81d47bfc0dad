"""
:module Instrument: Module hosting the Instrument class
"""

import logging
from typing import Dict, List, Optional

from cantorkit.BaseCalculator import BaseCalculator
from cantorkit.BaseData import DataCollection
from cantorkit.Parameters.Collections import InstrumentParameters, MasterParameters

logger = logging.getLogger(__name__)


class Instrument:
    """An ordered chain of calculators sharing master parameters, run as one unit."""

    def __init__(
        self,
        name: str,
        calculators: Optional[List[BaseCalculator]] = None,
    ):
        """
        :param name: The name of this instrument
        :param calculators: calculators to add, in execution order.
        """
        self.__name: str = ""
        self.__parameters = InstrumentParameters()

        self.name = name

        self.__calculators: Dict[str, BaseCalculator] = {}
        if calculators is not None:
            for calculator in calculators:
                self.add_calculator(calculator)

    def add_master_parameter(self, name: str, links: Dict[str, str], **kwargs) -> None:
        """
        Add a master parameter driving the same quantity in several calculators.

        :param name: name of the master parameter
        :param links: calculator name -> name of that calculator's parameter
        """
        self.parameters.add_master_parameter(name, links, **kwargs)

    @property
    def name(self) -> str:
        """The name of this instrument."""
        return self.__name

    @name.setter
    def name(self, value: str) -> None:
        if isinstance(value, str):
            self.__name = value
        else:
            raise TypeError(
                f"Instrument: name is expecting a str rather than {type(value)}"
            )

    @property
    def calculators(self) -> Dict[str, BaseCalculator]:
        """The calculators, keyed by name, in execution order."""
        return self.__calculators

    @property
    def parameters(self) -> InstrumentParameters:
        """
        The parameter collection of each calculator in the instrument.
        These are the calculators' own parameter objects, not copies.
        """
        return self.__parameters

    @property
    def master(self) -> MasterParameters:
        """Return the master parameters"""
        return self.parameters.master

    def __repr_calculators(self) -> str:
        string = f"- Instrument: {self.name} -\n"
        string += "Calculators:\n"
        for key in self.calculators:
            string += f"{key}\n"
        return string

    def list_calculators(self) -> str:
        """The names of all calculators of this instrument"""
        return self.__repr_calculators()

    def list_parameters(self) -> str:
        return repr(self.parameters)

    def add_calculator(self, calculator: BaseCalculator) -> None:
        """
        Append one calculator. Calculators run in the order they were added.

        :param calculator: calculator
        """
        if not isinstance(calculator, BaseCalculator):
            raise TypeError(
                f"Instrument: a calculator is expected, not {type(calculator)}"
            )
        if calculator.name in self.__calculators:
            raise RuntimeError(f"Duplicate calculator name '{calculator.name}'")
        self.__calculators[calculator.name] = calculator
        self.__parameters.add(calculator.name, calculator.parameters)

    def remove_calculator(self, calculator_name: str) -> None:
        """
        Remove the calculator with the given name

        :param calculator_name: name of one calculator already added
        """
        del self.__calculators[calculator_name]
        del self.__parameters[calculator_name]

    def run(self) -> DataCollection:
        """
        Run all the calculators in the order they have been added and
        return the collected outputs.
        """
        for calculator in self.calculators.values():
            logger.info("Instrument '%s': running '%s'", self.name, calculator.name)
            calculator.backengine()
        return self.outputs

    @property
    def output(self) -> DataCollection:
        """Return the output of the last calculator"""
        return list(self.__calculators.values())[-1].output

    @property
    def outputs(self) -> DataCollection:
        """The outputs of every calculator, in execution order."""
        collection = DataCollection()
        for calculator in self.calculators.values():
            collection.add_data(*calculator.output.to_list())
        return collection

    def __str__(self) -> str:
        mystring = f"######## Instrument {self.name}\n"
        mystring += self.__repr_calculators()
        mystring += repr(self.parameters)
        mystring += "############"
        return mystring
