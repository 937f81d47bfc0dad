from cantorkit.Calculators.CantorCalculator import CantorCalculator
from cantorkit.Numeric import format_rational
from cantorkit.Operators import OperatorContext, shift_power


class ShiftCalculator(CantorCalculator):
    """The shift sigma^n(x) = P_n x - delta_n."""

    command = "shift"

    def init_parameters(self):
        parameters = self._new_parameters()
        parameters.new_parameter("x", comment="The rational to shift, in [0,1)")
        self._new_index(parameters, "n", "Power of the shift", 0, default=1)
        self.parameters = parameters

    def compute(self) -> dict:
        Q = self.base_sequence()
        ctx = OperatorContext(self.number(), Q)
        n = self.required("n")
        payload = self.header(Q)
        payload.update(
            {
                "x": format_rational(ctx.x),
                "n": n,
                "value": format_rational(shift_power(ctx, n)),
                "delta": ctx.delta(n),
            }
        )
        return payload
