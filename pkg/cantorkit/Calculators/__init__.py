from .CantorCalculator import CantorCalculator, read_q_spec
from .ExpandCalculator import ExpandCalculator
from .EvaluateCalculator import EvaluateCalculator
from .ShiftCalculator import ShiftCalculator
from .GeneralizedShiftCalculator import GeneralizedShiftCalculator
from .TraceCalculator import TraceCalculator
from .CylinderCalculator import CylinderCalculator
from .DualCalculator import DualCalculator
from .IdentityCalculator import IDENTITIES, IdentityCalculator
from .SweepCalculator import SweepCalculator
