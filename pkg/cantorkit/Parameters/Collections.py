import copy
from collections import OrderedDict
from fractions import Fraction
from typing import Dict, Optional, Union

import json_tricks as json

from cantorkit.AbstractBaseClass import AbstractBaseClass
from cantorkit.Numeric import format_rational, parse_rational
from .Parameter import Parameter


def rational_encode(obj, primitives: bool = False):
    """
    Encode a Fraction as ``{"__rational__": "a/b"}`` in json.

    It returns obj if the encoding was not possible.
    """
    if isinstance(obj, Fraction):
        return {"__rational__": format_rational(obj)}
    return obj


def rational_decode(dct):
    """Decode a Fraction written by :func:`rational_encode`."""
    if "__rational__" in dct:
        return parse_rational(dct["__rational__"])
    return dct


class CalculatorParameters(AbstractBaseClass):
    """
    Ordered collection of the parameters of a single calculator, keyed by name.
    """

    def __init__(self, parameters=None):
        self.parameters: Dict[str, Parameter] = OrderedDict()
        if parameters is not None:
            self.add(parameters)

    @staticmethod
    def check_type(parameter):
        if not isinstance(parameter, Parameter):
            raise RuntimeError(
                f"Object of type Parameter expected, received {type(parameter)}"
            )

    def add(self, parameter: Union[Parameter, list]):
        """
        Adds a parameter, or a list of parameters, to this collection
        """
        if isinstance(parameter, list):
            for par in parameter:
                self.add(par)
            return
        self.check_type(parameter)
        if parameter.name in self.parameters:
            raise RuntimeError(f"Duplicate parameter name '{parameter.name}' in parameters!")
        self.parameters[parameter.name] = parameter

    def new_parameter(self, *args, **kwargs) -> Parameter:
        """
        Creates a new parameter with given arguments and adds it to this collection
        """
        new_parameter = Parameter(*args, **kwargs)
        self.add(new_parameter)
        return new_parameter

    def __contains__(self, key):
        return key in self.parameters

    def __getitem__(self, key) -> Parameter:
        try:
            return self.parameters[key]
        except KeyError:
            raise KeyError(f"{key} is not a valid parameter name.") from None

    def __setitem__(self, key, value):
        """
        Sets value of parameter with given key to given value
        """
        self[key].value = value

    def __delitem__(self, key):
        del self.parameters[key]

    def __iter__(self):
        return iter(self.parameters.values())

    def __len__(self):
        return len(self.parameters)

    def values(self) -> dict:
        """Plain ``{name: value}`` view of the collection."""
        return {name: parameter.value for name, parameter in self.parameters.items()}

    def print_indented(self, indents: int) -> str:
        string = indents * " " + " - Parameters object -\n"
        for parameter in self.parameters.values():
            string += indents * " " + parameter.print_line() + "\n"
        return string

    def __repr__(self):
        return self.print_indented(0)

    @classmethod
    def from_json(cls, fname: str):
        """
        Initialize an instance from a json file written by :meth:`to_json`.

        :param fname: The filename (path) of the json file.
        """
        with open(fname, "r") as fp:
            return cls.from_dict(json.load(fp, extra_obj_pairs_hooks=[rational_decode]))

    @classmethod
    def from_dict(cls, params_dict: dict):
        parameters = cls()
        for key in params_dict:
            parameters.add(Parameter.from_dict(params_dict[key]))
        return parameters

    def to_dict(self) -> dict:
        params = {}
        for key, parameter in self.parameters.items():
            # Deepcopy to not modify the original parameters
            state = copy.deepcopy(parameter.__dict__)
            state.pop("_Parameter__value_type", None)
            params[key] = state
        return params

    def to_json(self, fname: str):
        """
        Save this collection to a human readable json file.

        :param fname: Write to this file.
        """
        with open(fname, "w") as fp:
            json.dump(
                self.to_dict(),
                fp,
                indent=4,
                extra_obj_encoders=[rational_encode],
            )


class MasterParameter(Parameter):
    """
    A parameter that drives same-named quantities in several calculators.

    ``links`` maps a calculator name to the name of its parameter to overwrite.
    """

    def __init__(self, *args, **kwargs):
        self.links: Optional[Dict[str, str]] = None
        super().__init__(*args, **kwargs)

    def add_links(self, links: Dict[str, str]):
        self.links = links


class MasterParameters(CalculatorParameters):
    """
    Master parameters that propagate every assignment through their links.
    """

    def __init__(self, parameters_dict: dict, *args, **kwargs):
        """
        :param parameters_dict: the calculator parameter collections, keyed by calculator name,
                                that the master parameters control.
        """
        self.parameters_dict = parameters_dict
        super().__init__(*args, **kwargs)

    def __setitem__(self, key, value):
        master_parameter = self[key]
        if master_parameter.links is not None:
            for calculator, calculator_par_name in master_parameter.links.items():
                self.parameters_dict[calculator][calculator_par_name] = value
        master_parameter.value = value


class InstrumentParameters(AbstractBaseClass):
    """
    Parameters of every calculator of an instrument, plus master parameters
    controlling several of them at once.
    """

    def __init__(self):
        self.parameters_dict: Dict[str, CalculatorParameters] = {}
        self.master = MasterParameters(self.parameters_dict)

    @classmethod
    def from_json(cls, fname: str):
        with open(fname, "r") as fp:
            return cls.from_dict(json.load(fp, extra_obj_pairs_hooks=[rational_decode]))

    @classmethod
    def from_dict(cls, instrument_dict: dict):
        parameters = cls()
        for key in instrument_dict:
            if key != "Master":
                parameters.add(key, CalculatorParameters.from_dict(instrument_dict[key]))
        if "Master" in instrument_dict:
            for param_dict in instrument_dict["Master"].values():
                links = param_dict.get("links")
                master_parameter = MasterParameter.from_dict(param_dict)
                master_parameter.add_links(links)
                parameters.master.add(master_parameter)
        return parameters

    def to_dict(self) -> dict:
        params_collect = {"Master": self.master.to_dict()}
        for key, parameters in self.parameters_dict.items():
            params_collect[key] = parameters.to_dict()
        return params_collect

    def to_json(self, fname: str):
        with open(fname, "w") as fp:
            json.dump(
                self.to_dict(),
                fp,
                indent=4,
                extra_obj_encoders=[rational_encode],
            )

    def add(self, key: str, parameters: CalculatorParameters):
        """
        Registers the parameter collection of the calculator named ``key``
        """
        if not isinstance(parameters, CalculatorParameters):
            raise RuntimeError(
                "InstrumentParameters holds objects of type CalculatorParameters,"
                + " was provided with something else."
            )
        self.parameters_dict[key] = parameters

    def add_master_parameter(self, name: str, links: Dict[str, str], **kwargs):
        """
        :param links: calculator name -> name of the calculator parameter this master overrides
        """
        if not isinstance(links, dict):
            raise RuntimeError("links should be a dict")
        for link_key in links:
            if link_key not in self.parameters_dict:
                raise RuntimeError(f"Link key '{link_key}' is not a known calculator.")
        master_parameter = MasterParameter(name, **kwargs)
        master_parameter.add_links(links)
        self.master.add(master_parameter)

    def __getitem__(self, key) -> CalculatorParameters:
        return self.parameters_dict[key]

    def __delitem__(self, key):
        del self.parameters_dict[key]

    def __repr__(self):
        string = "- InstrumentParameters object -\n"
        if len(self.master.parameters) > 0:
            string += "  Master Parameters\n"
        for parameter in self.master:
            string += "  " + parameter.print_line() + "\n"
        string += "\n"
        for key, parameters in self.parameters_dict.items():
            string += 3 * " " + str(key) + "\n"
            string += parameters.print_indented(3)
            string += "\n"
        return string
