from cantorkit.Calculators.CantorCalculator import CantorCalculator
from cantorkit.Numeric import format_rational
from cantorkit.Operators import (
    OperatorContext,
    generalized_shift,
    lemma_step,
    recover_digit,
)


class GeneralizedShiftCalculator(CantorCalculator):
    """
    The generalized shift sigma_m(x), which deletes the m-th digit and base.

    The payload also carries the digit eps_m recovered from sigma_m(x) and
    sigma_{m+1}(x) obtained by the one-step recurrence.
    """

    command = "gshift"

    def init_parameters(self):
        parameters = self._new_parameters()
        parameters.new_parameter("x", comment="The rational to shift, in [0,1)")
        self._new_index(parameters, "m", "Index of the deleted digit", 1, default=1)
        self.parameters = parameters

    def compute(self) -> dict:
        Q = self.base_sequence()
        ctx = OperatorContext(self.number(), Q)
        m = self.required("m")
        payload = self.header(Q)
        payload.update(
            {
                "x": format_rational(ctx.x),
                "m": m,
                "value": format_rational(generalized_shift(ctx, m)),
                "digit": recover_digit(ctx, m),
                "next": format_rational(lemma_step(ctx, m)),
            }
        )
        return payload
