from cantorkit.Calculators.CantorCalculator import CantorCalculator
from cantorkit.Expansion import evaluate, format_digit_string, limit_value
from cantorkit.Numeric import format_rational


class EvaluateCalculator(CantorCalculator):
    """
    Value of a digit string: the partial sum up to ``depth`` (the explicit
    digits by default) and the exact value of the whole expansion.
    """

    command = "eval"

    def init_parameters(self):
        parameters = self._new_parameters()
        parameters.new_parameter("base", comment="Digit string, text or JSON form")
        self._new_index(parameters, "depth", "Depth of the partial sum", 0)
        self.parameters = parameters

    def compute(self) -> dict:
        Q = self.base_sequence()
        digits = self.digit_string(Q)
        depth = self.parameters["depth"].value
        if depth is None:
            depth = len(digits)
        payload = self.header(Q)
        payload.update(
            {
                "base": format_digit_string(digits),
                "depth": depth,
                "partial_sum": format_rational(evaluate(digits, depth)),
                "value": format_rational(limit_value(digits)),
            }
        )
        return payload
