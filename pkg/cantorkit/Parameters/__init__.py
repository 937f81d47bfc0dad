from .Parameter import Parameter
from .Collections import (
    InstrumentParameters,
    CalculatorParameters,
    MasterParameter,
    MasterParameters,
)
