from cantorkit.Calculators.CantorCalculator import CantorCalculator
from cantorkit.Exceptions import DigitStringError
from cantorkit.Expansion import Cylinder, cylinder_contains, cylinder_interval
from cantorkit.Numeric import format_rational


class CylinderCalculator(CantorCalculator):
    """The interval of the cylinder with a given base and, optionally, membership of x."""

    command = "cylinder"

    def init_parameters(self):
        parameters = self._new_parameters()
        parameters.new_parameter("base", comment="Cylinder base c_1,...,c_m")
        parameters.new_parameter("x", comment="Optional rational to test for membership")
        self.parameters = parameters

    def compute(self) -> dict:
        Q = self.base_sequence()
        digits = self.digit_string(Q)
        if not digits.tail.is_zero:
            raise DigitStringError("A cylinder base is a finite digit list without a tail marker")
        cylinder = Cylinder(Q, digits.digits)
        lo, hi = cylinder_interval(cylinder)
        payload = self.header(Q)
        payload.update(
            {
                "base": list(cylinder.base),
                "rank": cylinder.rank,
                "delta": cylinder.delta,
                "lo": format_rational(lo),
                "hi": format_rational(hi),
                "width": format_rational(hi - lo),
            }
        )
        if self.parameters["x"].value is not None:
            x = self.number()
            payload["x"] = format_rational(x)
            payload["contains"] = cylinder_contains(cylinder, x)
        return payload
