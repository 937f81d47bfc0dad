from cantorkit.Calculators.CantorCalculator import CantorCalculator
from cantorkit.Rationality import sweep_certificates


def _fractions(pairs) -> list:
    return [f"{a}/{b}" for a, b in pairs]


class SweepCalculator(CantorCalculator):
    """Certificate round trip for every reduced a/b in [0,1) up to a denominator."""

    command = "sweep"

    def init_parameters(self):
        parameters = self._new_parameters()
        self._new_index(parameters, "max_denominator", "Largest denominator b", 1, default=50)
        self.parameters = parameters

    def compute(self) -> dict:
        Q = self.base_sequence()
        report = sweep_certificates(self.required("max_denominator"), Q)
        payload = self.header(Q)
        payload.update(
            {
                "max_denominator": report.max_denominator,
                "checked": report.checked,
                "failures": _fractions(report.failures),
                "pigeonhole_violations": _fractions(report.pigeonhole_violations),
                "max_witness_index": report.max_witness_index,
                "passed": report.passed,
            }
        )
        return payload
