"""Tolerance configuration used by every numerical predicate."""
from dataclasses import dataclass


@dataclass(frozen=True)
class ToleranceCfg:
    rel: float = 1e-9
    abs: float = 1e-12

    def __post_init__(self):
        if not (self.rel > 0 and self.abs > 0):
            raise ValueError("tolerances must be strictly positive")


DEFAULT_TOL = ToleranceCfg()
