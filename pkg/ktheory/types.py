import enum
from dataclasses import dataclass

from diagrams.types import WeightSequence


class OrderDirection(str, enum.Enum):
    STATED = 'stated'
    REVERSED = 'reversed'
    NONE = 'none'


@dataclass(frozen=True)
class K0Matrix:
    """Rows are [M_w], columns [L_w'], both in weight order."""
    weights: tuple
    entries: tuple
    determinant: int
    direction: OrderDirection

    def entry(self, w: WeightSequence, w2: WeightSequence) -> int:
        return self.entries[self.weights.index(w)][self.weights.index(w2)]

    def row(self, w: WeightSequence) -> dict:
        return {w2: c for w2, c in zip(self.weights, self.entries[self.weights.index(w)]) if c}
