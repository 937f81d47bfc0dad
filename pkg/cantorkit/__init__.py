""" :module: Exposes all user facing classes in the common cantorkit namespace"""

__author__ = "cantorkit developers"
__email__ = "cantorkit@users.noreply.github.com"
__version__ = "0.1.0"
__release__ = __version__

from .Numeric import ExactRational, format_rational, parse_rational
from .BaseSequence import BaseSequence, BaseSpec, parse_base_spec
from .Expansion import (
    Cylinder,
    DigitString,
    PrefixState,
    Tail,
    classify_q_rational,
    dual_representation,
    evaluate,
    expand_greedy,
    limit_value,
    parse_digit_string,
)
from .Operators import (
    OperatorContext,
    generalized_shift,
    identity_report,
    lemma_step,
    recover_digit,
    shift_power,
    theorem2_digit,
)
from .Rationality import (
    find_collision,
    fractional_trace,
    rationality_certificate,
    reconstruct,
)
from .BaseCalculator import BaseCalculator, CalculatorParameters
from .BaseData import BaseData, DataCollection
from .Parameters.Parameter import Parameter
from .Instrument import Instrument
