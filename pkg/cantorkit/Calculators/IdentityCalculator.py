from cantorkit.Calculators.CantorCalculator import CantorCalculator
from cantorkit.Numeric import format_rational
from cantorkit.Operators import IDENTITY_CHECKS, OperatorContext
from cantorkit.Rationality import check_round_trip

ROUND_TRIP = "theorem1_round_trip"
IDENTITIES = list(IDENTITY_CHECKS) + [ROUND_TRIP]


class IdentityCalculator(CantorCalculator):
    """Explicit check of one operator identity for x over Q up to ``depth``."""

    command = "verify"

    def init_parameters(self):
        parameters = self._new_parameters()
        parameters.new_parameter("x", comment="The rational to check, in [0,1)")
        self._new_index(parameters, "depth", "Largest index checked", 0, default=20)
        identity = parameters.new_parameter("identity", comment="Name of the identity")
        identity.add_option(IDENTITIES, True)
        self.parameters = parameters

    def compute(self) -> dict:
        Q = self.base_sequence()
        ctx = OperatorContext(self.number(), Q)
        name = self.required("identity")
        depth = self.required("depth")
        if name == ROUND_TRIP:
            check = check_round_trip(ctx)
        else:
            check = IDENTITY_CHECKS[name](ctx, depth)
        payload = self.header(Q)
        payload.update(
            {
                "x": format_rational(ctx.x),
                "depth": depth,
                "name": check.name,
                "passed": check.passed,
                "checked": check.checked,
                "first_failure": check.first_failure,
            }
        )
        return payload
