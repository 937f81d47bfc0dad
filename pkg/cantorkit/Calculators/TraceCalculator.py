from cantorkit.Calculators.CantorCalculator import CantorCalculator
from cantorkit.Numeric import format_rational
from cantorkit.Operators import OperatorContext
from cantorkit.Rationality import (
    distinct_trace_values,
    find_collision,
    fractional_trace,
    reconstruct,
)


class TraceCalculator(CantorCalculator):
    """The fractional-part trace up to ``horizon`` and its first collision, if any."""

    command = "trace"

    def init_parameters(self):
        parameters = self._new_parameters()
        parameters.new_parameter("x", comment="The rational to trace, in [0,1)")
        self._new_index(parameters, "horizon", "Index of the last trace entry", 0, default=10)
        self.parameters = parameters

    def compute(self) -> dict:
        Q = self.base_sequence()
        ctx = OperatorContext(self.number(), Q)
        horizon = self.required("horizon")
        trace = fractional_trace(ctx.x, Q, horizon, ctx)
        witness = find_collision(trace)
        collision = None
        if witness is not None:
            collision = {
                "m1": witness.m1,
                "m2": witness.m2,
                "value": format_rational(trace[witness.m1].value),
                "reconstructed": None,
            }
            if witness.m1 >= 1:
                collision["reconstructed"] = format_rational(reconstruct(ctx, witness))
        payload = self.header(Q)
        payload.update(
            {
                "x": format_rational(ctx.x),
                "horizon": horizon,
                "trace": [
                    {
                        "k": entry.k,
                        "value": format_rational(entry.value),
                        "integer": entry.integer_component,
                    }
                    for entry in trace
                ],
                "collision": collision,
                "distinct": distinct_trace_values(trace),
            }
        )
        return payload
