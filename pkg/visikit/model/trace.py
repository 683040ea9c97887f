from dataclasses import dataclass
from typing import Tuple, Union

from .arrangements import CylArrangement, FlatArrangement


@dataclass(frozen=True)
class PeelStep:
    """One removal: the peeled point, its new length and its degree at that moment"""
    vertex: int
    length: int
    degree: int
    forced: bool


@dataclass(frozen=True)
class PeelTrace:
    steps: Tuple[PeelStep, ...]
    output: Union[CylArrangement, FlatArrangement]
    verified: bool = True

    def __post_init__(self):
        object.__setattr__(self, 'steps', tuple(self.steps))

    def lengths(self):
        return [step.length for step in self.steps]

    def order(self):
        """Read the peeled vertices in removal order"""
        return [step.vertex for step in self.steps]

    def forced_prefix(self):
        """Count the leading steps at which the peeled vertex was the only choice"""
        count = 0
        for step in self.steps:
            if not step.forced:
                break
            count += 1
        return count
