from cantorkit.Calculators.CantorCalculator import CantorCalculator
from cantorkit.Expansion import dual_representation, format_digit_string, limit_value
from cantorkit.Numeric import format_rational


class DualCalculator(CantorCalculator):
    """The tail-of-(q_k - 1) form of a terminating digit string."""

    command = "dual"

    def init_parameters(self):
        parameters = self._new_parameters()
        parameters.new_parameter("base", comment="Terminating digit string, text or JSON form")
        self.parameters = parameters

    def compute(self) -> dict:
        Q = self.base_sequence()
        original = self.digit_string(Q)
        dual = dual_representation(original)
        payload = self.header(Q)
        payload.update(
            {
                "base": format_digit_string(original),
                "dual": format_digit_string(dual),
                "digits": list(dual.digits),
                "tail": "max",
                "value": format_rational(limit_value(original)),
            }
        )
        assert limit_value(dual) == limit_value(original)
        return payload
