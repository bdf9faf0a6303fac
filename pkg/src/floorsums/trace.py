"""Machine-readable transcripts of the recursion chains.

Each step records the rule applied, the (a, b, h) state on entry, any derived
parameters, and the signed contribution the step adds to the final value, so
summing the contributions replays the computation exactly.
"""

from dataclasses import dataclass, field
from fractions import Fraction

RULE_RECIPROCITY = "reciprocity"
RULE_DIVISION = "division"
RULE_PERIOD = "period-reduction"
RULE_BASE = "base"


@dataclass
class TraceStep:
    rule: str
    a: int
    b: int
    h: int
    derived: dict
    contribution: Fraction


@dataclass
class Trace:
    steps: list = field(default_factory=list)

    def record(self, rule, a, b, h, derived, contribution):
        self.steps.append(TraceStep(rule, a, b, h, dict(derived), Fraction(contribution)))

    def replay(self) -> Fraction:
        """Sum of contributions; equals the value the traced call returned."""
        return sum((s.contribution for s in self.steps), Fraction(0))

    def total_steps(self) -> int:
        """Step count including sub-steps done by nested computations."""
        return len(self.steps) + sum(s.derived.get("sub_steps", 0) for s in self.steps)

    def __len__(self):
        return len(self.steps)


def euclid_steps(a: int, b: int) -> int:
    """Number of division steps the Euclidean algorithm takes on (a, b)."""
    n = 0
    while b:
        a, b = b, a % b
        n += 1
    return n
