from cantorkit.Calculators.CantorCalculator import CantorCalculator
from cantorkit.Expansion import classify_q_rational, expand_greedy
from cantorkit.Numeric import format_rational


class ExpandCalculator(CantorCalculator):
    """Greedy digits of x to a given depth, with the exact remainder sigma^depth(x)."""

    command = "expand"

    def init_parameters(self):
        parameters = self._new_parameters()
        parameters.new_parameter("x", comment="The rational to expand, in [0,1)")
        self._new_index(parameters, "depth", "Number of digits", 0, default=10)
        self._new_index(parameters, "horizon", "Horizon of the Q-rational classification", 0)
        self.parameters = parameters

    def compute(self) -> dict:
        Q = self.base_sequence()
        x = self.number()
        depth = self.required("depth")
        digits, state = expand_greedy(x, Q, depth)
        payload = self.header(Q)
        payload.update(
            {
                "x": format_rational(x),
                "depth": depth,
                "digits": list(digits.digits),
                "tail": format_rational(state.tail),
                "partial_sum": format_rational(state.theta),
            }
        )
        horizon = self.parameters["horizon"].value
        if horizon is not None:
            rationality = classify_q_rational(x, Q, horizon)
            payload["q_rational"] = {"horizon": horizon, "m": rationality.m}
        return payload
