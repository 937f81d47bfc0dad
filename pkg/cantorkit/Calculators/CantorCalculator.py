"""
:module CantorCalculator: Parameters and payload plumbing shared by every cantorkit calculator.
"""

import logging
from abc import abstractmethod
from fractions import Fraction
from typing import Optional, Union

from cantorkit.BaseCalculator import BaseCalculator
from cantorkit.BaseData import BaseData, DataCollection
from cantorkit.BaseSequence import BaseSequence
from cantorkit.Data import SCHEMA, JSONFormat, ResultData, TXTFormat
from cantorkit.Exceptions import CantorDomainError
from cantorkit.Expansion import DigitString, parse_digit_string
from cantorkit.Numeric import as_rational, check_unit_interval
from cantorkit.Parameters import CalculatorParameters

logger = logging.getLogger(__name__)

FORMATS = {"text": TXTFormat, "json": JSONFormat}


def read_q_spec(text: str) -> str:
    """The Q-spec text itself, or the content of the file named after a leading ``@``."""
    if not text.startswith("@"):
        return text
    try:
        with open(text[1:], "r", encoding="utf-8") as fp:
            return fp.read().strip()
    except OSError as error:
        raise CantorDomainError(f"Cannot read the Q-spec file {text[1:]}: {error.strerror}") from None


class CantorCalculator(BaseCalculator):
    """
    A calculator over a base sequence Q.

    Subclasses name their subcommand in ``command``, declare their parameters
    starting from :meth:`_new_parameters` and publish a payload that starts
    with :meth:`header`.
    """

    command: str = ""

    def __init__(
        self,
        name: str,
        input: Union[DataCollection, list, BaseData, None] = None,
        output_keys: Union[list, str, None] = None,
        output_data_types=ResultData,
        parameters: Optional[CalculatorParameters] = None,
    ):
        if output_keys is None:
            output_keys = f"{name}_result"
        super().__init__(name, input, output_keys, output_data_types, parameters)

    def _new_parameters(self) -> CalculatorParameters:
        """A collection holding the Q-spec and the output format."""
        parameters = CalculatorParameters()
        parameters.new_parameter("q", comment="Q-spec of the base sequence, or @file")
        output_format = parameters.new_parameter("format", comment="Rendering of the result")
        output_format.add_option(list(FORMATS), True)
        output_format.value = "text"
        return parameters

    @staticmethod
    def _new_index(parameters: CalculatorParameters, name: str, comment: str, lowest: int, default=None):
        parameter = parameters.new_parameter(name, comment=comment)
        parameter.add_interval(lowest, None, True)
        if default is not None:
            parameter.value = default
        return parameter

    def required(self, name: str):
        """The value of parameter ``name``; raises if it was never set."""
        value = self.parameters[name].value
        if value is None:
            raise RuntimeError(f"Parameter '{name}' of calculator '{self.name}' is not set.")
        return value

    def base_sequence(self) -> BaseSequence:
        return BaseSequence(read_q_spec(self.required("q")))

    def number(self, name: str = "x") -> Fraction:
        """The rational parameter ``name``, checked to lie in [0,1)."""
        return check_unit_interval(as_rational(self.required(name)), name)

    def digit_string(self, Q: BaseSequence, name: str = "base") -> DigitString:
        return parse_digit_string(self.required(name), Q)

    def header(self, Q: BaseSequence) -> dict:
        return {"schema": SCHEMA, "command": self.command, "q": str(Q)}

    def backengine(self) -> DataCollection:
        logger.info("Calculator '%s' runs %s", self.name, self.command)
        return self.publish(self.compute())

    @abstractmethod
    def compute(self) -> dict:
        """The result payload of this calculator."""
        raise NotImplementedError

    def render(self, key: Optional[str] = None) -> str:
        """The output ``key`` (the first by default) in the configured format."""
        key = self.output_keys[0] if key is None else key
        format_class = FORMATS[self.parameters["format"].value]
        return format_class.render(self.output[key].get_data())
